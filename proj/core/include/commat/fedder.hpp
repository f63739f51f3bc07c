#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commat/commutator.hpp"
#include "commat/poly.hpp"
#include "commat/sop.hpp"

namespace commat {

struct FedderOptions {
    /// Ceiling on the live term set of the truncated expansion.
    std::size_t term_ceiling = 10'000'000;
    /// Worker count for splitting the live set per factor product; the
    /// merged result is identical to single-threaded execution.
    unsigned threads = 1;
};

struct FedderReport {
    int n = 0;
    std::uint32_t p = 0;
    std::string variant;
    bool witnessed = false;
    std::optional<Monomial> witness;  // least surviving monomial
    mpz_class witness_coeff = 0;
    std::uint64_t survivor_count = 0;
    std::optional<bool> unique_squarefree;  // p = 2 only
    std::size_t factor_count = 0;
    std::size_t peak_terms = 0;
    double elapsed_ms = 0;
};

/// Exact product of the specialized generators, in generator order.
/// Throws if a generator specializes to zero (a wrong map).
Poly omega(const IdealSpec& ideal, const SpecMap& map);

/// Fedder's criterion for a complete intersection: expands
/// (product of specialized generators)^(p-1) in the p-truncated ring and
/// reports whether anything survives, i.e. whether the colon ideal
/// escapes m^[p].
FedderReport fpure_check_ci(const IdealSpec& ideal, const SpecMap& map, std::uint32_t p,
                            const FedderOptions& opts = {});

/// p = 2 only: every monomial of the 2-truncation of omega (all of which
/// are square-free), sorted ascending in the term order.
std::vector<Monomial> squarefree_witnesses(const IdealSpec& ideal, const SpecMap& map);

/// Coefficient of (product of all variables of omega)^(p-1) in the
/// p-truncated expansion of omega^(p-1).
mpz_class target_coefficient(const IdealSpec& ideal, const SpecMap& map, std::uint32_t p,
                             const FedderOptions& opts = {});

struct InductionReport {
    int n = 0;
    std::uint32_t p = 0;
    bool witnessed = false;
    /// (a) every entry of Z = (inner block of the specialized commutator)
    /// minus the embedded (n-2)-system lies in the monomial ideal
    /// generated by the eight corner variables.
    bool z_entries_in_corner_ideal = false;
    /// (b) the reported witness restricted to inner-block variables is a
    /// witness for the (n-2)-system.
    bool inner_restriction_is_witness = false;
    std::optional<Monomial> witness;
    std::vector<std::string> notes;

    bool all_ok() const { return witnessed && z_entries_in_corner_ideal && inner_restriction_is_witness; }
};

/// Full Fedder check one induction step above the base cases, plus the
/// structural premises of the induction argument.
InductionReport induction_witness_check(int n, std::uint32_t p, const FedderOptions& opts = {});

std::string fedder_report_to_json(const FedderReport& report, bool include_timings = false);
std::string induction_report_to_json(const InductionReport& report);

}  // namespace commat
