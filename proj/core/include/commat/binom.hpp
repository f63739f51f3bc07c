#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace commat {

/// C(n, k) as an exact integer; 0 when k > n.
mpz_class binom_exact(std::uint64_t n, std::uint64_t k);

/// C(n, k) mod p via the Lucas decomposition.
std::uint64_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// The congruence C(p-i, k) = (-1)^(i-1) * C(p-1-k, i-1) * C(p-1, k)
/// mod p, checked for all 1 <= i <= p-1, 0 <= k <= p-i with both sides
/// evaluated independently from exact binomials.
bool claim_check(std::uint32_t p);

/// A_b = sum_{a=b}^{p-1-b} C(a+b, a) * C(a, b) mod p, summed in exact
/// integers and reduced last.
std::uint64_t lemma_Ab(std::uint32_t b, std::uint32_t p);

/// sum_{b=0}^{(p-1)/2} (-1)^b * A_b mod p, exact-integer arithmetic.
std::uint64_t lemma_signed_sum(std::uint32_t p);

/// One solution of the exponent system for the seven-factor product at
/// n = 4: the two free parameters and the derived per-factor exponent
/// tuples (factors 1 and 4 have four exponents, 2 and 3 three, 5-7 two).
struct ExponentSolution {
    std::uint32_t beta1 = 0;
    std::uint32_t beta2 = 0;
    std::array<std::int64_t, 4> f1{};  // (alpha1, beta1, gamma1, delta1)
    std::array<std::int64_t, 3> f2{};
    std::array<std::int64_t, 3> f3{};
    std::array<std::int64_t, 4> f4{};
    std::array<std::int64_t, 2> f5{};
    std::array<std::int64_t, 2> f6{};
    std::array<std::int64_t, 2> f7{};

    std::vector<std::int64_t> flattened() const;
};

/// All solutions of the degree bookkeeping (every variable degree and
/// every factor degree equal to p-1) in nonnegative integers,
/// parametrized by (beta1, beta2) with 0 <= beta2 <= (p-1)/2 and
/// 0 <= beta1 <= p-1-2*beta2; each tuple is re-validated against the
/// full constraint system before being returned.
std::vector<ExponentSolution> n4_solutions(std::uint32_t p);

/// Evaluates the constraint system on a flattened 19-exponent tuple;
/// true iff every variable-degree and factor-degree equation equals p-1.
bool n4_constraints_hold(const std::vector<std::int64_t>& exps, std::uint32_t p);

/// Variable-degree rows of the constraint system as (name, indices into
/// the flattened exponent tuple); the degree of each variable is the sum
/// of the exponents of the factor terms containing it.
std::vector<std::pair<std::string, std::vector<int>>> n4_variable_constraints();

/// The closed-form coefficient of the all-variables monomial: the signed
/// sum of the products of the seven multinomial coefficients over all
/// solutions, in exact integers, reduced mod p.
std::uint64_t n4_closed_form(std::uint32_t p);

/// The chain of rewrites of the closed form down to the binomial lemma's
/// double sum; entry 0 is the closed form itself and the last entry is
/// the lemma sum. All entries must be congruent mod p.
std::vector<std::uint64_t> n4_simplification_chain(std::uint32_t p);

struct LemmaBinomRow {
    std::uint32_t p = 0;
    bool ab_zero_ok = false;        // A_b = 0 for all 0 <= b <= (p-3)/2
    bool ab_top_ok = false;         // A_{(p-1)/2} = (-1)^{(p-1)/2}
    std::uint64_t signed_sum = 0;   // computed value of the double sum
    std::uint64_t stated_value = 0; // the lemma's stated (-1)^{(p-1)/2}
    bool matches_stated = false;
};

/// One row per odd prime p <= pmax.
std::vector<LemmaBinomRow> lemma_binom_sweep(std::uint32_t pmax);

std::string lemma_binom_row_to_json(const LemmaBinomRow& row);

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

}  // namespace commat
