// Command-line front end: every verification with machine-readable JSON
// reports. Exit codes: 0 success/verified, 1 usage error, 2 claim not
// witnessed, 3 scale exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "commat/binom.hpp"
#include "commat/commutator.hpp"
#include "commat/fedder.hpp"
#include "commat/groebner.hpp"
#include "commat/poly_io.hpp"
#include "commat/sop.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotWitnessed = 2;
constexpr int kExitScale = 3;

constexpr std::uint32_t kCharZeroProxy = 32003;

unsigned env_threads() {
    const char* v = std::getenv("COMMAT_THREADS");
    if (!v)
        return 1;
    const long t = std::strtol(v, nullptr, 10);
    return t >= 1 ? static_cast<unsigned>(t) : 1;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw commat::error("cannot open output file " + out_path);
    f << text << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        return {};
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

commat::SopVariant parse_variant(const std::string& s, int n, std::uint32_t p) {
    if (s == "full") {
        if (n % 2 == 1)
            return commat::SopVariant::FullOdd;
        return p == 2 ? commat::SopVariant::FullEvenChar2 : commat::SopVariant::FullEven;
    }
    if (s == "diag-i")
        return commat::SopVariant::DiagI;
    if (s == "anti-j")
        return commat::SopVariant::AntiJ;
    throw CLI::ValidationError("--variant", "expected full, diag-i or anti-j");
}

struct FixtureSpec {
    std::string file;
    int n;
    std::uint32_t characteristic;
    commat::SopVariant variant;
};

std::optional<FixtureSpec> fixture_for(int n, std::uint32_t characteristic) {
    if (n == 7 && characteristic != 2)
        return FixtureSpec{"appendix_n7.json", 7, 0, commat::SopVariant::FullOdd};
    if (n == 8 && characteristic != 2)
        return FixtureSpec{"appendix_n8_odd_char.json", 8, 0, commat::SopVariant::FullEven};
    if (n == 8 && characteristic == 2)
        return FixtureSpec{"appendix_n8_char2.json", 8, 2, commat::SopVariant::FullEvenChar2};
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"commutator-matrix algebra toolkit"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("-o,--out", out_path, "write the report to this file instead of stdout")
        ->capture_default_str();

    int n = 3;
    std::uint32_t characteristic = 0;
    std::string variant_name = "full";
    std::string set_name = "full";
    std::size_t max_pairs = commat::kDefaultMaxPairs;
    std::size_t term_ceiling = 10'000'000;
    std::uint32_t pmax = 97;
    std::string fixtures_dir = "fixtures";
    bool write_fixture = false;
    bool timings = false;

    auto* ideal = app.add_subcommand("ideal", "generator lists of the commutator ideals");
    auto* ideal_dump = ideal->add_subcommand("dump", "emit an ideal's generators as JSON");
    ideal_dump->add_option("--n", n, "matrix size")->required();
    ideal_dump->add_option("--char", characteristic, "coefficient characteristic (0 or a prime)");
    ideal_dump->add_option("--set", set_name, "full, diag or anti");

    auto* sop_cmd = app.add_subcommand("sop", "systems of parameters");
    auto* sop_verify = sop_cmd->add_subcommand("verify", "verify zero-dimensionality of the specialized quotient");
    sop_verify->add_option("--n", n, "matrix size")->required();
    sop_verify->add_option("--char", characteristic, "characteristic (0 uses the large-prime proxy)");
    sop_verify->add_option("--variant", variant_name, "full, diag-i or anti-j");
    sop_verify->add_option("--max-pairs", max_pairs, "Buchberger pair guard");

    auto* fpure = app.add_subcommand("fpure", "F-purity certification");
    auto* fpure_check = fpure->add_subcommand("check", "Fedder witness search for the specialized full ideal");
    fpure_check->add_option("--n", n, "matrix size")->required();
    fpure_check->add_option("--char", characteristic, "prime characteristic p")->required();
    fpure_check->add_option("--variant", variant_name, "must be full");
    fpure_check->add_option("--term-ceiling", term_ceiling, "live term guard");
    fpure_check->add_flag("--timings", timings, "include elapsed time in the report");

    auto* lemma = app.add_subcommand("lemma", "combinatorial oracles");
    auto* lemma_binom = lemma->add_subcommand("binom", "A_b verdicts and the signed sum per prime");
    lemma_binom->add_option("--pmax", pmax, "largest prime to check");
    auto* lemma_n4 = lemma->add_subcommand("n4", "exponent system and closed-form coefficient at n = 4");
    lemma_n4->add_option("--char", characteristic, "odd prime p")->required();

    auto* recursions = app.add_subcommand("recursions", "induction-step identities");
    auto* recursions_verify = recursions->add_subcommand("verify", "check the displayed relations exactly");
    recursions_verify->add_option("--n", n, "matrix size (>= 5)")->required();
    recursions_verify->add_option("--char", characteristic, "characteristic (0 = exact integers)");

    auto* fixtures = app.add_subcommand("fixtures", "appendix golden files");
    auto* fixtures_appendix = fixtures->add_subcommand("appendix", "regenerate and diff the specialized matrices");
    fixtures_appendix->add_option("--n", n, "7 or 8")->required();
    fixtures_appendix->add_option("--char", characteristic, "0 (not 2) or 2; only meaningful for n = 8");
    fixtures_appendix->add_option("--fixtures-dir", fixtures_dir, "directory of the checked-in goldens");
    fixtures_appendix->add_flag("--write", write_fixture, "write the regenerated fixture to the goldens directory");

    auto* detblock = app.add_subcommand("detblock", "determinantal-block reduction premise");
    auto* detblock_check = detblock->add_subcommand("check", "each surviving c_ii equals det Z_i");
    detblock_check->add_option("--n", n, "matrix size (>= 3)")->required();

    // Let -o given after a subcommand reach the top-level option.
    for (auto* group : app.get_subcommands(nullptr)) {
        group->fallthrough();
        for (auto* leaf : group->get_subcommands(nullptr))
            leaf->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ideal_dump) {
            commat::IdealName name;
            if (set_name == "full")
                name = commat::IdealName::Full;
            else if (set_name == "diag")
                name = commat::IdealName::I;
            else if (set_name == "anti")
                name = commat::IdealName::J;
            else
                throw CLI::ValidationError("--set", "expected full, diag or anti");
            if (n < 2) {
                std::cerr << "error: --n must be at least 2\n";
                return kExitUsage;
            }
            const auto spec = commat::ideal_spec(commat::generic_pair(n, characteristic), name);
            emit(commat::ideal_spec_to_json(spec), out_path);
            return kExitOk;
        }

        if (*sop_verify) {
            std::uint32_t p = characteristic;
            bool proxy = false;
            if (p == 0) {
                p = kCharZeroProxy;
                proxy = true;
            }
            auto report = commat::verify_sop(n, p, parse_variant(variant_name, n, p), max_pairs);
            report.char_zero_proxy = proxy;
            emit(commat::sop_verify_report_to_json(report), out_path);
            return report.verified() ? kExitOk : kExitNotWitnessed;
        }

        if (*fpure_check) {
            if (variant_name != "full")
                throw CLI::ValidationError("--variant", "the Fedder check runs on the full ideal");
            if (characteristic < 2 || !commat::valid_characteristic(characteristic)) {
                std::cerr << "error: --char must be a prime\n";
                return kExitUsage;
            }
            const auto variant = parse_variant("full", n, characteristic);
            const auto map = commat::spec_map(commat::sop(n, characteristic, variant, true));
            const auto ideal_full =
                commat::ideal_spec(commat::generic_pair(n, characteristic), commat::IdealName::Full);
            commat::FedderOptions opts;
            opts.term_ceiling = term_ceiling;
            opts.threads = env_threads();
            const auto report = commat::fpure_check_ci(ideal_full, map, characteristic, opts);
            emit(commat::fedder_report_to_json(report, timings), out_path);
            return report.witnessed ? kExitOk : kExitNotWitnessed;
        }

        if (*lemma_binom) {
            std::string lines;
            for (const auto& row : commat::lemma_binom_sweep(pmax))
                lines += commat::lemma_binom_row_to_json(row) + "\n";
            if (!lines.empty())
                lines.pop_back();
            emit(lines, out_path);
            return kExitOk;
        }

        if (*lemma_n4) {
            if (characteristic < 3 || !commat::valid_characteristic(characteristic)) {
                std::cerr << "error: --char must be an odd prime\n";
                return kExitUsage;
            }
            const auto sols = commat::n4_solutions(characteristic);
            const auto chain = commat::n4_simplification_chain(characteristic);
            bool chain_ok = true;
            for (std::size_t i = 1; i < chain.size(); ++i)
                chain_ok = chain_ok && chain[i] == chain[0];
            std::string json = "{\"p\": " + std::to_string(characteristic) +
                               ", \"solutions\": " + std::to_string(sols.size()) +
                               ", \"closed_form\": " + std::to_string(commat::n4_closed_form(characteristic)) +
                               ", \"chain_ok\": " + (chain_ok ? std::string("true") : std::string("false")) + "}";
            emit(json, out_path);
            return kExitOk;
        }

        if (*recursions_verify) {
            const auto report = commat::verify_recursions(n, characteristic);
            emit(commat::recursion_report_to_json(report), out_path);
            return report.all_pass ? kExitOk : kExitNotWitnessed;
        }

        if (*fixtures_appendix) {
            const auto spec = fixture_for(n, characteristic);
            if (!spec) {
                std::cerr << "error: fixtures exist for n = 7 and n = 8 (char 0 or 2)\n";
                return kExitUsage;
            }
            const std::string regenerated =
                commat::specialized_pair_fixture_json(spec->n, spec->characteristic, spec->variant);
            const std::string path = fixtures_dir + "/" + spec->file;
            if (write_fixture) {
                std::ofstream f(path, std::ios::binary);
                if (!f)
                    throw commat::error("cannot write " + path);
                f << regenerated;
                emit("{\"file\": \"" + path + "\", \"written\": true}", out_path);
                return kExitOk;
            }
            const std::string golden = slurp(path);
            const bool match = !golden.empty() && golden == regenerated;
            emit("{\"file\": \"" + path + "\", \"match\": " + (match ? "true" : "false") + "}", out_path);
            return match ? kExitOk : kExitNotWitnessed;
        }

        if (*detblock_check) {
            const auto report = commat::detblock_reduction_check(n);
            emit(commat::detblock_report_to_json(report), out_path);
            return report.ok ? kExitOk : kExitNotWitnessed;
        }
    } catch (const commat::scale_exceeded_error& e) {
        std::cerr << "scale exceeded: " << e.what() << "\n";
        return kExitScale;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const commat::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
