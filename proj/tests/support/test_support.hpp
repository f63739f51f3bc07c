#pragma once

// Shared helpers for the test suites: seeded random polynomial
// generators and an independent straight-line evaluator used as an
// oracle against the symbolic arithmetic.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "commat/poly.hpp"

namespace commat::testing {

inline VarId random_var(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_int_distribution<int> idx(1, n);
    return VarId{static_cast<VarKind>(kind(rng)), static_cast<std::uint8_t>(idx(rng)),
                 static_cast<std::uint8_t>(idx(rng))};
}

inline Monomial random_monomial(std::mt19937_64& rng, int n, int max_vars, int max_exp) {
    std::uniform_int_distribution<int> count(0, max_vars);
    std::uniform_int_distribution<int> exp(1, max_exp);
    std::vector<Monomial::Factor> factors;
    const int c = count(rng);
    for (int i = 0; i < c; ++i)
        factors.emplace_back(random_var(rng, n), exp(rng));
    return Monomial::from_factors(std::move(factors));
}

inline Poly random_poly(std::mt19937_64& rng, const Ring& ring, int max_terms, int max_vars = 3,
                        int max_exp = 3) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::vector<Poly::Term> terms;
    const int c = count(rng);
    for (int i = 0; i < c; ++i) {
        mpz_class coeff;
        if (ring.characteristic == 0) {
            std::uniform_int_distribution<int> cd(-9, 9);
            coeff = cd(rng);
        } else {
            std::uniform_int_distribution<std::uint32_t> cd(0, ring.characteristic - 1);
            coeff = cd(rng);
        }
        terms.push_back({random_monomial(rng, ring.n, max_vars, max_exp), coeff});
    }
    return Poly::from_terms(ring, std::move(terms));
}

/// Numeric evaluation mod q, independent of the Poly arithmetic path.
inline std::uint64_t eval_mod(const Poly& p, const std::map<VarId, std::uint64_t>& point,
                              std::uint64_t q) {
    std::uint64_t total = 0;
    for (const auto& t : p.terms()) {
        mpz_class cm;
        mpz_mod(cm.get_mpz_t(), t.coeff.get_mpz_t(), mpz_class(static_cast<unsigned long>(q)).get_mpz_t());
        std::uint64_t value = mpz_get_ui(cm.get_mpz_t());
        for (const auto& [v, e] : t.mono.factors()) {
            const auto it = point.find(v);
            std::uint64_t base = it == point.end() ? 0 : it->second % q;
            for (std::int64_t i = 0; i < e; ++i)
                value = value * base % q;
        }
        total = (total + value) % q;
    }
    return total;
}

inline std::map<VarId, std::uint64_t> random_point(std::mt19937_64& rng, int n, std::uint64_t q) {
    std::map<VarId, std::uint64_t> point;
    std::uniform_int_distribution<std::uint64_t> d(0, q - 1);
    for (int kind = 0; kind < 2; ++kind)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                point[VarId{static_cast<VarKind>(kind), static_cast<std::uint8_t>(i),
                            static_cast<std::uint8_t>(j)}] = d(rng);
    return point;
}

}  // namespace commat::testing
