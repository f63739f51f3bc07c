#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "commat/poly.hpp"
#include "commat/sop.hpp"

namespace commat {

inline constexpr std::size_t kDefaultMaxPairs = 200000;

struct GroebnerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_discarded_coprime = 0;
    std::size_t pairs_discarded_chain = 0;
    std::size_t reductions = 0;
    std::size_t reductions_to_zero = 0;
};

/// A reduced Groebner basis in the fixed degrevlex order: every element
/// monic with tail reduced, distinct leading monomials, sorted by
/// ascending leading monomial. Unique for a given ideal, so the output
/// is independent of generator permutation.
class GroebnerBasis {
public:
    GroebnerBasis(Ring ring, std::vector<Poly> polys, GroebnerStats stats)
        : ring_(ring), polys_(std::move(polys)), stats_(stats) {}

    const Ring& ring() const { return ring_; }
    const std::vector<Poly>& polys() const { return polys_; }
    const GroebnerStats& stats() const { return stats_; }

private:
    Ring ring_;
    std::vector<Poly> polys_;
    GroebnerStats stats_;
};

/// The unique remainder of f under multivariate division by gb;
/// zero iff f lies in the ideal.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

/// Buchberger's algorithm with the coprime and chain pair-discard
/// criteria. Coefficients must be in F_p. Throws scale_exceeded_error
/// once max_pairs S-pairs have been reduced.
GroebnerBasis buchberger(const std::vector<Poly>& gens, std::size_t max_pairs = kDefaultMaxPairs);

/// Standard criterion: true iff every variable in vars has a pure power
/// among the leading monomials. For a homogeneous ideal this is
/// equivalent to the quotient being m-primary. Reports the witness
/// exponents when requested.
bool is_zero_dimensional(const GroebnerBasis& gb, const std::vector<VarId>& vars,
                         std::map<VarId, std::int64_t>* witnesses = nullptr);

struct SopVerifyReport {
    int n = 0;
    std::uint32_t p = 0;
    SopVariant variant{};
    bool zero_dimensional = false;
    bool counts_ok = false;
    bool closed_form_image_ok = true;  // DiagI / AntiJ reductions only
    bool used_groebner = false;
    bool char_zero_proxy = false;
    std::size_t sop_size = 0;
    std::size_t ideal_generator_count = 0;
    std::vector<VarId> surviving_vars;
    std::size_t gb_size = 0;
    std::map<VarId, std::int64_t> pure_power_witnesses;
    GroebnerStats stats;

    bool verified() const { return zero_dimensional && counts_ok && closed_form_image_ok; }
};

/// Applies the variant's specialization to the matching ideal, decides
/// zero-dimensionality of the quotient, and cross-checks that the number
/// of sequence elements plus ideal generators equals 2n^2. The DiagI and
/// AntiJ variants are settled by their closed-form images (square-free
/// monomials under the partial map, pure squares under the full map)
/// without running Buchberger. Full variants take the Groebner path and
/// are supported for n <= 4.
SopVerifyReport verify_sop(int n, std::uint32_t p, SopVariant variant,
                           std::size_t max_pairs = kDefaultMaxPairs);

std::string sop_verify_report_to_json(const SopVerifyReport& report);

}  // namespace commat
