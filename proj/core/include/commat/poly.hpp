#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "commat/monomial.hpp"
#include "commat/ring.hpp"

namespace commat {

/// A specialization: variables sent to 0 plus ordered identifications
/// (replaced variable rewritten as its replacement). A replacement that
/// is itself zeroed sends the replaced variable to 0 as well, so one
/// application always reaches the fixed point.
struct SpecMap {
    std::set<VarId> zeroed;
    std::vector<std::pair<VarId, VarId>> identified;  // (replaced, replacement)

    void validate() const;

    /// Final image of a variable: nullopt means 0.
    std::optional<VarId> image(VarId v) const;
};

/// Canonical sparse polynomial: terms sorted in descending degrevlex
/// order, no zero coefficients. Coefficients are exact integers in
/// characteristic 0 and canonical representatives in [0, p) mod p.
class Poly {
public:
    struct Term {
        Monomial mono;
        mpz_class coeff;

        friend bool operator==(const Term& a, const Term& b) {
            return a.mono == b.mono && a.coeff == b.coeff;
        }
    };

    Poly() = default;
    explicit Poly(const Ring& ring) : ring_(ring) {}

    static Poly zero(const Ring& ring) { return Poly(ring); }
    static Poly constant(const Ring& ring, mpz_class c);
    static Poly variable(const Ring& ring, VarId v);
    static Poly monomial(const Ring& ring, Monomial m, mpz_class c = 1);

    /// Canonicalizes an arbitrary term list (sorts, merges, reduces mod p,
    /// drops zeros).
    static Poly from_terms(const Ring& ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    mpz_class coeff_of(const Monomial& m) const;

    /// Leading (greatest) term; polynomial must be nonzero.
    const Term& leading_term() const { return terms_.front(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly negated() const;
    Poly scaled(const mpz_class& c) const;
    Poly times_monomial(const Monomial& m, const mpz_class& c) const;

    Poly pow(std::uint64_t e) const;

    /// Drops every term having some exponent >= p.
    Poly truncated(std::uint32_t p) const;
    /// Product in the quotient by the monomial ideal (v^p : all v).
    Poly truncated_mul(const Poly& o, std::uint32_t p) const;
    /// Repeated truncated_mul, truncating after every intermediate product.
    Poly truncated_pow(std::uint64_t e, std::uint32_t p) const;

    Poly substituted(const SpecMap& map) const;

    /// Rewrites every variable through f, which must be injective on the
    /// variables present; the result lives in target.
    Poly mapped_vars(const Ring& target, const std::function<VarId(VarId)>& f) const;

    std::set<VarId> variables() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

private:
    mpz_class reduce(mpz_class c) const;

    Ring ring_{};
    std::vector<Term> terms_;
};

}  // namespace commat
