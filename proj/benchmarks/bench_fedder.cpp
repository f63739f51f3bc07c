#include <benchmark/benchmark.h>

#include "commat/fedder.hpp"
#include "commat/sop.hpp"

using namespace commat;

static void BM_FedderWitness(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::uint32_t p = static_cast<std::uint32_t>(state.range(1));
    const SopVariant variant = n % 2 == 1 ? SopVariant::FullOdd
                               : p == 2   ? SopVariant::FullEvenChar2
                                          : SopVariant::FullEven;
    const SpecMap map = spec_map(sop(n, p, variant, true));
    const IdealSpec ideal = ideal_spec(generic_pair(n, p), IdealName::Full);
    for (auto _ : state)
        benchmark::DoNotOptimize(fpure_check_ci(ideal, map, p));
}
BENCHMARK(BM_FedderWitness)
    ->Args({3, 2})
    ->Args({3, 5})
    ->Args({3, 7})
    ->Args({4, 2})
    ->Args({4, 3})
    ->Args({5, 2})
    ->Unit(benchmark::kMillisecond);

