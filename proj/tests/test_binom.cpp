#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "commat/binom.hpp"
#include "commat/commutator.hpp"
#include "commat/sop.hpp"

using namespace commat;

TEST_CASE("binomials mod p: spot values and Lucas blocks") {
    CHECK(binom_mod(5, 2, 3) == 1);
    CHECK(binom_mod(4, 2, 2) == 0);
    for (std::uint64_t k = 0; k <= 6; ++k) {
        const std::uint64_t expected = k % 2 == 0 ? 1 : 6;  // (-1)^k mod 7
        CHECK(binom_mod(6, k, 7) == expected);
    }
    CHECK(binom_mod(3, 5, 7) == 0);
}

TEST_CASE("Lucas agrees with exact big-integer binomials") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u})
        for (std::uint64_t n = 0; n <= 60; ++n)
            for (std::uint64_t k = 0; k <= n; ++k) {
                mpz_class r;
                mpz_mod(r.get_mpz_t(), binom_exact(n, k).get_mpz_t(), mpz_class(p).get_mpz_t());
                CHECK(binom_mod(n, k, p) == mpz_get_ui(r.get_mpz_t()));
            }
}

TEST_CASE("the binomial congruence claim") {
    CHECK(claim_check(2));
    CHECK(claim_check(5));
    CHECK(claim_check(31));
    // The worked instance: i = 2, k = 1 at p = 5.
    mpz_class lhs = binom_exact(3, 1);
    mpz_class rhs = -binom_exact(3, 1) * binom_exact(4, 1);
    mpz_class l5, r5;
    mpz_mod(l5.get_mpz_t(), lhs.get_mpz_t(), mpz_class(5).get_mpz_t());
    mpz_mod(r5.get_mpz_t(), rhs.get_mpz_t(), mpz_class(5).get_mpz_t());
    CHECK(l5 == 3);
    CHECK(l5 == r5);
}

TEST_CASE("A_b spot values") {
    CHECK(lemma_Ab(0, 3) == 0);  // exact sum is 3
    CHECK(lemma_Ab(1, 3) == 2);
    CHECK(lemma_Ab(3, 7) == 6);  // C(6,3) = 20 = 6 mod 7
}

TEST_CASE("signed sums and the stated-value comparison") {
    CHECK(lemma_signed_sum(3) == 1);
    CHECK(lemma_signed_sum(5) == 1);
    // Internal consistency at p = 13: the sum collapses to the top term.
    const std::uint32_t p = 13;
    const std::uint32_t half = (p - 1) / 2;
    std::uint64_t top = lemma_Ab(half, p);
    if (half % 2 == 1)
        top = (p - top) % p;
    CHECK(lemma_signed_sum(p) == top);
}

TEST_CASE("sweep verdicts to 199 and the erratum pattern") {
    for (const auto& row : lemma_binom_sweep(199)) {
        CAPTURE(row.p);
        CHECK(row.ab_zero_ok);
        CHECK(row.ab_top_ok);
        // The computed double sum is always 1; it matches the stated
        // (-1)^((p-1)/2) exactly when p = 1 mod 4.
        CHECK(row.signed_sum == 1);
        CHECK(row.matches_stated == (row.p % 4 == 1));
    }
}

TEST_CASE("solution family at p = 3") {
    const auto sols = n4_solutions(3);
    REQUIRE(sols.size() == 4);
    std::set<std::pair<std::uint32_t, std::uint32_t>> betas;
    for (const auto& s : sols) {
        betas.insert({s.beta1, s.beta2});
        CHECK(s.f1[0] == 0);
        CHECK(s.f2[0] == 0);
        CHECK(s.f3[0] == 0);
        CHECK(s.f4[0] == 0);
    }
    CHECK(betas == std::set<std::pair<std::uint32_t, std::uint32_t>>{{0, 0}, {1, 0}, {2, 0}, {0, 1}});
}

TEST_CASE("brute-force enumeration of the constraint polytope matches the family") {
    // Independent oracle: enumerate every per-factor exponent split of
    // p-1 and intersect with the variable-degree equations.
    const std::uint32_t p = 3;
    const std::int64_t q = p - 1;
    std::vector<std::vector<std::vector<std::int64_t>>> factor_choices;
    for (int len : {4, 3, 3, 4, 2, 2, 2}) {
        std::vector<std::vector<std::int64_t>> choices;
        std::vector<std::int64_t> cur(len, 0);
        // Enumerate compositions of q into len parts.
        auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
            if (pos == len - 1) {
                cur[pos] = left;
                choices.push_back(cur);
                return;
            }
            for (std::int64_t v = 0; v <= left; ++v) {
                cur[pos] = v;
                self(self, pos + 1, left - v);
            }
        };
        rec(rec, 0, q);
        factor_choices.push_back(std::move(choices));
    }

    std::set<std::vector<std::int64_t>> brute;
    std::vector<std::int64_t> tuple;
    auto join = [&](auto&& self, std::size_t f) -> void {
        if (f == factor_choices.size()) {
            if (n4_constraints_hold(tuple, p))
                brute.insert(tuple);
            return;
        }
        for (const auto& choice : factor_choices[f]) {
            tuple.insert(tuple.end(), choice.begin(), choice.end());
            self(self, f + 1);
            tuple.resize(tuple.size() - choice.size());
        }
    };
    join(join, 0);

    std::set<std::vector<std::int64_t>> family;
    for (const auto& s : n4_solutions(p))
        family.insert(s.flattened());
    CHECK(brute == family);
    CHECK(brute.size() == 4);
}

TEST_CASE("constraint rows agree with the symbolic factor incidence") {
    // Rebuild the seven specialized generators at n = 4 and read off, for
    // each variable, which factor terms contain it; this must reproduce
    // the hard-coded constraint rows.
    const std::uint32_t p = 5;
    const SpecMap map = spec_map(sop(4, p, SopVariant::FullEven, true));
    const PolyMatrix c = commutator(specialized_pair(4, p, SopVariant::FullEven, true));

    // Factor/term layout behind the flattened exponent indices.
    const std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<VarId, VarId>>>> layout = {
        {{2, 2}, {{xvar(2, 1), yvar(1, 2)}, {xvar(2, 4), yvar(4, 2)}, {xvar(3, 2), yvar(2, 3)}, {xvar(4, 2), yvar(2, 4)}}},
        {{2, 3}, {{xvar(2, 1), yvar(1, 3)}, {xvar(2, 4), yvar(4, 3)}, {xvar(4, 3), yvar(2, 4)}}},
        {{3, 2}, {{xvar(3, 1), yvar(1, 2)}, {xvar(3, 4), yvar(4, 2)}, {xvar(4, 2), yvar(3, 4)}}},
        {{3, 3}, {{xvar(3, 1), yvar(1, 3)}, {xvar(3, 2), yvar(2, 3)}, {xvar(3, 4), yvar(4, 3)}, {xvar(4, 3), yvar(3, 4)}}},
        {{1, 1}, {{xvar(2, 1), yvar(1, 2)}, {xvar(3, 1), yvar(1, 3)}}},
        {{1, 4}, {{xvar(2, 4), yvar(1, 2)}, {xvar(3, 4), yvar(1, 3)}}},
        {{4, 1}, {{xvar(2, 1), yvar(4, 2)}, {xvar(3, 1), yvar(4, 3)}}},
    };

    // Each listed term must occur in the corresponding entry with a unit
    // coefficient, and the entry must have no other terms.
    std::vector<Monomial> flat_monos;
    for (const auto& [entry, terms] : layout) {
        const Poly& g = c.at(entry.first, entry.second);
        CHECK(g.term_count() == terms.size());
        for (const auto& [xv, yv] : terms) {
            const Monomial m = Monomial::variable(xv).times(Monomial::variable(yv));
            const mpz_class coeff = g.coeff_of(m);
            CHECK((coeff == 1 || coeff == p - 1));
            flat_monos.push_back(m);
        }
    }
    REQUIRE(flat_monos.size() == 20);

    for (const auto& [name, idxs] : n4_variable_constraints()) {
        std::vector<int> expected;
        for (int i = 0; i < 20; ++i) {
            for (const auto& [v, e] : flat_monos[i].factors())
                if (v.name() == name)
                    expected.push_back(i);
        }
        CHECK(idxs == expected);
    }
}

TEST_CASE("closed form, chain, and cross-prime values") {
    CHECK(n4_closed_form(3) == 1);
    CHECK(n4_closed_form(5) == 1);
    for (std::uint32_t p : {3u, 5u}) {
        const auto chain = n4_simplification_chain(p);
        REQUIRE(chain.size() == 7);
        for (std::size_t i = 1; i < chain.size(); ++i)
            CHECK(chain[i] == chain[0]);
        CHECK(chain.back() == lemma_signed_sum(p));
        CHECK(chain[0] != 0);
    }
}
