#include "commat/binom.hpp"

#include <json.hpp>

#include "commat/ring.hpp"

namespace commat {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1)
            r = (unsigned __int128)r * base % mod;
        base = (unsigned __int128)base * base % mod;
        exp >>= 1;
    }
    return r;
}

/// C(a, b) mod p for 0 <= a, b < p, p prime.
std::uint64_t binom_digit_mod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    if (b > a)
        return 0;
    b = std::min(b, a - b);
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        num = (unsigned __int128)num * ((a + 1 - i) % p) % p;
        den = (unsigned __int128)den * (i % p) % p;
    }
    return (unsigned __int128)num * pow_mod(den, p - 2, p) % p;
}

std::uint64_t mpz_mod_u64(const mpz_class& v, std::uint32_t p) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), mpz_class(p).get_mpz_t());
    return mpz_get_ui(r.get_mpz_t());
}

mpz_class factorial(std::uint64_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// Multinomial coefficient top! / prod(parts!); parts must sum to top.
mpz_class multinomial(std::uint64_t top, const std::vector<std::int64_t>& parts) {
    mpz_class r = factorial(top);
    std::int64_t sum = 0;
    for (std::int64_t part : parts) {
        if (part < 0)
            return 0;
        sum += part;
        r /= factorial(static_cast<std::uint64_t>(part));
    }
    if (sum != static_cast<std::int64_t>(top))
        throw error("multinomial parts do not sum to the top index");
    return r;
}

}  // namespace

mpz_class binom_exact(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

std::uint64_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    if (k > n)
        return 0;
    std::uint64_t result = 1;
    while (n > 0 || k > 0) {
        const std::uint64_t nd = n % p, kd = k % p;
        if (kd > nd)
            return 0;
        result = (unsigned __int128)result * binom_digit_mod(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    return result;
}

bool claim_check(std::uint32_t p) {
    const mpz_class P = p;
    for (std::uint32_t i = 1; i <= p - 1; ++i) {
        for (std::uint32_t k = 0; k + i <= p; ++k) {
            const std::uint64_t lhs = mpz_mod_u64(binom_exact(p - i, k), p);
            mpz_class rhs = binom_exact(p - 1 - k, i - 1) * binom_exact(p - 1, k);
            if (i % 2 == 0)
                rhs = -rhs;
            if (lhs != mpz_mod_u64(rhs, p))
                return false;
        }
    }
    return true;
}

namespace {

mpz_class lemma_Ab_exact(std::uint32_t b, std::uint32_t p) {
    mpz_class sum = 0;
    for (std::uint32_t a = b; a + b <= p - 1; ++a)
        sum += binom_exact(a + b, a) * binom_exact(a, b);
    return sum;
}

}  // namespace

std::uint64_t lemma_Ab(std::uint32_t b, std::uint32_t p) {
    if (p < 3 || b > (p - 1) / 2)
        throw error("lemma_Ab requires an odd prime and 0 <= b <= (p-1)/2");
    return mpz_mod_u64(lemma_Ab_exact(b, p), p);
}

std::uint64_t lemma_signed_sum(std::uint32_t p) {
    if (p < 3)
        throw error("lemma_signed_sum requires an odd prime");
    mpz_class sum = 0;
    for (std::uint32_t b = 0; b <= (p - 1) / 2; ++b) {
        const mpz_class ab = lemma_Ab_exact(b, p);
        sum += (b % 2 == 0) ? ab : -ab;
    }
    return mpz_mod_u64(sum, p);
}

std::vector<std::int64_t> ExponentSolution::flattened() const {
    std::vector<std::int64_t> v;
    v.insert(v.end(), f1.begin(), f1.end());
    v.insert(v.end(), f2.begin(), f2.end());
    v.insert(v.end(), f3.begin(), f3.end());
    v.insert(v.end(), f4.begin(), f4.end());
    v.insert(v.end(), f5.begin(), f5.end());
    v.insert(v.end(), f6.begin(), f6.end());
    v.insert(v.end(), f7.begin(), f7.end());
    return v;
}

std::vector<std::pair<std::string, std::vector<int>>> n4_variable_constraints() {
    // Flattened indices: f1 = 0..3, f2 = 4..6, f3 = 7..9, f4 = 10..13,
    // f5 = 14..15, f6 = 16..17, f7 = 18..19. Each row lists the exponent
    // positions of the factor terms containing that variable.
    return {
        {"x_2_1", {0, 4, 14, 18}},  {"x_2_4", {1, 5, 16}},      {"x_3_1", {7, 10, 15, 19}},
        {"x_3_2", {2, 11}},         {"x_3_4", {8, 12, 17}},     {"x_4_2", {3, 9}},
        {"x_4_3", {6, 13}},         {"y_1_2", {0, 7, 14, 16}},  {"y_1_3", {4, 10, 15, 17}},
        {"y_2_3", {2, 11}},         {"y_2_4", {3, 6}},          {"y_3_4", {9, 13}},
        {"y_4_2", {1, 8, 18}},      {"y_4_3", {5, 12, 19}},
    };
}

bool n4_constraints_hold(const std::vector<std::int64_t>& exps, std::uint32_t p) {
    if (exps.size() != 20)
        return false;
    for (std::int64_t e : exps)
        if (e < 0)
            return false;
    const std::int64_t target = static_cast<std::int64_t>(p) - 1;
    for (const auto& [name, idxs] : n4_variable_constraints()) {
        std::int64_t sum = 0;
        for (int i : idxs)
            sum += exps[i];
        if (sum != target)
            return false;
    }
    static const std::vector<std::vector<int>> factor_rows = {
        {0, 1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12, 13}, {14, 15}, {16, 17}, {18, 19}};
    for (const auto& row : factor_rows) {
        std::int64_t sum = 0;
        for (int i : row)
            sum += exps[i];
        if (sum != target)
            return false;
    }
    return true;
}

std::vector<ExponentSolution> n4_solutions(std::uint32_t p) {
    if (p < 3)
        throw error("the n = 4 exponent system needs an odd prime");
    const std::int64_t q = static_cast<std::int64_t>(p) - 1;
    std::vector<ExponentSolution> out;
    for (std::int64_t b2 = 0; b2 <= q / 2; ++b2) {
        for (std::int64_t b1 = 0; b1 + 2 * b2 <= q; ++b1) {
            ExponentSolution s;
            s.beta1 = static_cast<std::uint32_t>(b1);
            s.beta2 = static_cast<std::uint32_t>(b2);
            s.f1 = {0, b1, q - b1 - b2, b2};
            s.f2 = {0, b2, q - b2};
            s.f3 = {0, b2, q - b2};
            s.f4 = {0, b1 + b2, q - b1 - 2 * b2, b2};
            s.f5 = {b1 + b2, q - b1 - b2};
            s.f6 = {q - b1 - b2, b1 + b2};
            s.f7 = {q - b1 - b2, b1 + b2};
            if (!n4_constraints_hold(s.flattened(), p))
                throw error("derived exponent tuple violates the constraint system");
            out.push_back(std::move(s));
        }
    }
    return out;
}

namespace {

mpz_class n4_summand(const ExponentSolution& s, std::uint32_t p) {
    const std::uint64_t q = p - 1;
    auto parts = [](const auto& arr) { return std::vector<std::int64_t>(arr.begin(), arr.end()); };
    mpz_class term = multinomial(q, parts(s.f1));
    term *= multinomial(q, parts(s.f2));
    term *= multinomial(q, parts(s.f3));
    term *= multinomial(q, parts(s.f4));
    term *= multinomial(q, parts(s.f5));
    term *= multinomial(q, parts(s.f6));
    term *= multinomial(q, parts(s.f7));
    if ((s.beta1 + s.beta2) % 2 == 1)
        term = -term;
    return term;
}

}  // namespace

std::uint64_t n4_closed_form(std::uint32_t p) {
    mpz_class sum = 0;
    for (const auto& s : n4_solutions(p))
        sum += n4_summand(s, p);
    return mpz_mod_u64(sum, p);
}

std::vector<std::uint64_t> n4_simplification_chain(std::uint32_t p) {
    const std::uint64_t q = p - 1;
    const auto sols = n4_solutions(p);
    mpz_class s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0;
    for (const auto& s : sols) {
        const std::int64_t b1 = s.beta1, b2 = s.beta2;
        const bool odd = (b1 + b2) % 2 == 1;
        auto signed_term = [&](mpz_class t) { return odd ? mpz_class(-t) : t; };
        s0 += n4_summand(s, p);
        s1 += signed_term(binom_exact(q, b1 + b2) * multinomial(q, {b1, b2, static_cast<std::int64_t>(q) - b1 - b2}) *
                          multinomial(q, {b1 + b2, b2, static_cast<std::int64_t>(q) - b1 - 2 * b2}));
        s2 += signed_term(binom_exact(q, b1 + b2) * binom_exact(q, b1 + b2) *
                          multinomial(q, {b1, b2, b2, static_cast<std::int64_t>(q) - b1 - 2 * b2}));
        s3 += signed_term(multinomial(q, {b1, b2, b2, static_cast<std::int64_t>(q) - b1 - 2 * b2}));
        s4 += signed_term(binom_exact(q, b1 + 2 * b2) *
                          multinomial(static_cast<std::uint64_t>(b1 + 2 * b2), {b1, b2, b2}));
        mpz_class t5 = multinomial(static_cast<std::uint64_t>(b1 + 2 * b2), {b1, b2, b2});
        s5 += (b2 % 2 == 1) ? mpz_class(-t5) : t5;
    }
    mpz_class lemma = 0;
    for (std::uint32_t b = 0; b <= q / 2; ++b) {
        mpz_class inner = 0;
        for (std::uint32_t a = b; a + b <= q; ++a)
            inner += binom_exact(a + b, a) * binom_exact(a, b);
        lemma += (b % 2 == 0) ? inner : mpz_class(-inner);
    }
    return {mpz_mod_u64(s0, p), mpz_mod_u64(s1, p), mpz_mod_u64(s2, p), mpz_mod_u64(s3, p),
            mpz_mod_u64(s4, p), mpz_mod_u64(s5, p), mpz_mod_u64(lemma, p)};
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
    std::vector<std::uint32_t> primes;
    std::vector<char> sieve(bound + 1, 1);
    for (std::uint32_t i = 2; i <= bound; ++i) {
        if (!sieve[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= bound; j += i)
            sieve[j] = 0;
    }
    return primes;
}

std::vector<LemmaBinomRow> lemma_binom_sweep(std::uint32_t pmax) {
    std::vector<LemmaBinomRow> rows;
    for (std::uint32_t p : primes_up_to(pmax)) {
        if (p == 2)
            continue;
        LemmaBinomRow row;
        row.p = p;
        row.ab_zero_ok = true;
        for (std::uint32_t b = 0; 2 * b + 3 <= p; ++b)
            row.ab_zero_ok = row.ab_zero_ok && lemma_Ab(b, p) == 0;
        const std::uint32_t half = (p - 1) / 2;
        const std::uint64_t expected_top = (half % 2 == 0) ? 1 : p - 1;
        row.ab_top_ok = lemma_Ab(half, p) == expected_top;
        row.signed_sum = lemma_signed_sum(p);
        row.stated_value = expected_top;
        row.matches_stated = row.signed_sum == row.stated_value;
        rows.push_back(row);
    }
    return rows;
}

std::string lemma_binom_row_to_json(const LemmaBinomRow& row) {
    nlohmann::ordered_json j;
    j["p"] = row.p;
    j["ab_zero_ok"] = row.ab_zero_ok;
    j["ab_top_ok"] = row.ab_top_ok;
    j["signed_sum"] = row.signed_sum;
    j["paper_stated_value"] = row.stated_value;
    j["matches_stated"] = row.matches_stated;
    return j.dump();
}

}  // namespace commat
