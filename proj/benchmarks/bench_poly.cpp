#include <benchmark/benchmark.h>

#include "commat/commutator.hpp"
#include "commat/groebner.hpp"
#include "commat/sop.hpp"

using namespace commat;

static void BM_CommutatorBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const MatrixPair pair = generic_pair(n, 0);
        benchmark::DoNotOptimize(commutator(pair));
    }
}
BENCHMARK(BM_CommutatorBuild)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_VerifySopFull(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::uint32_t p = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_sop(n, p, n == 3 ? SopVariant::FullOdd
                                                 : p == 2 ? SopVariant::FullEvenChar2
                                                          : SopVariant::FullEven));
}
BENCHMARK(BM_VerifySopFull)->Args({3, 5})->Args({4, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);


BENCHMARK_MAIN();
