#include <doctest.h>

#include <set>

#include "commat/commutator.hpp"
#include "commat/sop.hpp"

using namespace commat;

namespace {

Poly xv(const Ring& r, int i, int j) { return Poly::variable(r, xvar(i, j)); }

/// Checks a specialized matrix cell against 0 or a single named variable.
void check_cell(const Poly& cell, const char* expected) {
    if (std::string(expected) == "0") {
        CHECK(cell.is_zero());
        return;
    }
    REQUIRE(cell.term_count() == 1);
    CHECK(cell.terms()[0].coeff == 1);
    REQUIRE(cell.terms()[0].mono.factors().size() == 1);
    CHECK(cell.terms()[0].mono.factors()[0].first.name() == expected);
    CHECK(cell.terms()[0].mono.factors()[0].second == 1);
}

void check_grid(const PolyMatrix& m, const std::vector<std::vector<const char*>>& expected) {
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j)
            check_cell(m.at(i, j), expected[i - 1][j - 1]);
}

SopVariant full_variant(int n, std::uint32_t c) {
    return n % 2 == 1 ? SopVariant::FullOdd : (c == 2 ? SopVariant::FullEvenChar2 : SopVariant::FullEven);
}

}  // namespace

TEST_CASE("element counts match the dimension formulas") {
    for (int n = 3; n <= 8; ++n) {
        const std::uint32_t c0 = 0;
        if (n % 2 == 1)
            CHECK(sop(n, c0, SopVariant::FullOdd).elements.size() == sop_expected_size(n, SopVariant::FullOdd));
        else {
            CHECK(sop(n, c0, SopVariant::FullEven).elements.size() == sop_expected_size(n, SopVariant::FullEven));
            CHECK(sop(n, 2, SopVariant::FullEvenChar2).elements.size() ==
                  sop_expected_size(n, SopVariant::FullEvenChar2));
        }
        CHECK(sop(n, c0, SopVariant::DiagI).elements.size() == sop_expected_size(n, SopVariant::DiagI));
        CHECK(sop(n, c0, SopVariant::AntiJ).elements.size() == sop_expected_size(n, SopVariant::AntiJ));
    }
    CHECK(sop(3, 0, SopVariant::FullOdd).elements.size() == 14);
    CHECK(sop(4, 0, SopVariant::DiagI).elements.size() == 29);
}

TEST_CASE("inconsistent variant and parity or characteristic are rejected") {
    CHECK_THROWS_AS(sop(4, 0, SopVariant::FullOdd), error);
    CHECK_THROWS_AS(sop(3, 0, SopVariant::FullEven), error);
    CHECK_THROWS_AS(sop(4, 2, SopVariant::FullEven), error);
    CHECK_THROWS_AS(sop(4, 3, SopVariant::FullEvenChar2), error);
    CHECK_THROWS_AS(sop(2, 0, SopVariant::DiagI), error);
}

TEST_CASE("every element is a variable or a difference of two variables") {
    for (int n = 3; n <= 6; ++n) {
        for (SopVariant v : {full_variant(n, 0), SopVariant::DiagI, SopVariant::AntiJ}) {
            for (const auto& el : sop(n, 0, v).elements) {
                REQUIRE(el.term_count() <= 2);
                for (const auto& t : el.terms()) {
                    CHECK(t.mono.degree() == 1);
                    CHECK((t.coeff == 1 || t.coeff == -1));
                }
            }
        }
    }
}

TEST_CASE("partial lists keep only the zeroed variables") {
    const SopList partial = sop(3, 0, SopVariant::FullOdd, true);
    CHECK(partial.elements.size() == 10);
    for (const auto& el : partial.elements)
        CHECK(el.term_count() == 1);

    const MatrixPair pair = specialized_pair(3, 0, SopVariant::FullOdd, true);
    std::set<std::string> x_free, y_free;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (!pair.X.at(i, j).is_zero())
                x_free.insert(xvar(i, j).name());
            if (!pair.Y.at(i, j).is_zero())
                y_free.insert(yvar(i, j).name());
        }
    CHECK(x_free == std::set<std::string>{"x_2_1", "x_2_3", "x_3_1", "x_3_2"});
    CHECK(y_free == std::set<std::string>{"y_1_2", "y_1_3", "y_2_3", "y_3_2"});
}

TEST_CASE("n = 3 full specialization reproduces the displayed matrices") {
    const MatrixPair pair = specialized_pair(3, 0, SopVariant::FullOdd);
    check_grid(pair.X, {{"0", "0", "0"}, {"x_2_1", "0", "x_2_3"}, {"x_3_1", "x_3_2", "0"}});
    check_grid(pair.Y, {{"0", "x_2_3", "x_3_1"}, {"0", "0", "x_3_2"}, {"0", "x_2_1", "0"}});
}

TEST_CASE("n = 4 full specializations reproduce the displayed matrices") {
    const MatrixPair even = specialized_pair(4, 0, SopVariant::FullEven);
    check_grid(even.X, {{"0", "0", "0", "0"},
                        {"x_2_1", "0", "0", "x_2_4"},
                        {"x_3_1", "x_3_2", "0", "x_3_4"},
                        {"0", "x_4_2", "x_4_3", "0"}});
    check_grid(even.Y, {{"0", "x_2_4", "x_3_1", "0"},
                        {"0", "0", "x_3_2", "x_4_3"},
                        {"0", "0", "0", "x_4_2"},
                        {"0", "x_2_1", "x_3_4", "0"}});

    const MatrixPair char2 = specialized_pair(4, 2, SopVariant::FullEvenChar2);
    check_grid(char2.X, {{"0", "0", "0", "0"},
                         {"0", "0", "0", "x_2_4"},
                         {"x_3_1", "x_3_2", "0", "x_3_4"},
                         {"x_4_1", "x_4_2", "x_4_3", "0"}});
    check_grid(char2.Y, {{"0", "0", "x_3_4", "x_4_1"},
                         {"0", "0", "x_3_2", "x_4_3"},
                         {"0", "0", "0", "x_4_2"},
                         {"0", "x_2_4", "x_3_1", "0"}});
}

TEST_CASE("full map sends c_11 to its closed form at n = 3") {
    const MatrixPair pair = generic_pair(3, 0);
    const PolyMatrix c = commutator(pair);
    const SpecMap map = spec_map(sop(3, 0, SopVariant::FullOdd));
    const Ring& ring = pair.ring;
    const Poly expected = (xv(ring, 2, 1) * xv(ring, 2, 3)).negated() - xv(ring, 3, 1) * xv(ring, 3, 1);
    CHECK(c.at(1, 1).substituted(map) == expected);
}

TEST_CASE("specialization maps are idempotent on the pair") {
    for (int n = 3; n <= 6; ++n) {
        for (SopVariant v : {full_variant(n, 0), SopVariant::DiagI, SopVariant::AntiJ}) {
            const SpecMap map = spec_map(sop(n, 0, v));
            const MatrixPair pair = generic_pair(n, 0);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    const Poly once = pair.X.at(i, j).substituted(map);
                    CHECK(once.substituted(map) == once);
                    const Poly oncey = pair.Y.at(i, j).substituted(map);
                    CHECK(oncey.substituted(map) == oncey);
                }
        }
    }
}

TEST_CASE("full variants cover every variable exactly once") {
    for (int n = 3; n <= 8; ++n) {
        for (std::uint32_t c : {std::uint32_t{0}, std::uint32_t{2}}) {
            if (n % 2 == 0 || c == 0) {
                const SopVariant v = full_variant(n, c);
                const SopList list = sop(n, c, v);
                std::multiset<std::string> seen;
                std::set<std::string> targets;
                for (const auto& el : list.elements) {
                    for (const auto& t : el.terms())
                        seen.insert(t.mono.factors()[0].first.name());
                    if (el.term_count() == 2) {
                        for (const auto& t : el.terms())
                            if (t.mono.factors()[0].first.kind == VarKind::X)
                                targets.insert(t.mono.factors()[0].first.name());
                    }
                }
                CHECK(seen.size() == static_cast<std::size_t>(2) * n * n);
                std::set<std::string> unique(seen.begin(), seen.end());
                CHECK(unique.size() == seen.size());

                // The free variables of the full specialization are exactly
                // the identification targets.
                const SpecMap map = spec_map(list);
                std::set<std::string> survivors;
                for (int kind = 0; kind < 2; ++kind)
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j) {
                            const VarId var{static_cast<VarKind>(kind), static_cast<std::uint8_t>(i),
                                            static_cast<std::uint8_t>(j)};
                            const auto img = map.image(var);
                            if (img && *img == var)
                                survivors.insert(var.name());
                        }
                CHECK(survivors == targets);
            }
        }
    }
}

TEST_CASE("recursion identities hold at the first induction steps") {
    CHECK(verify_recursions(5, 0).all_pass);
    CHECK(verify_recursions(7, 0).all_pass);
    CHECK(verify_recursions(6, 3).all_pass);
    CHECK(verify_recursions(6, 2).all_pass);
    CHECK_THROWS_AS(verify_recursions(4, 0), error);
}

TEST_CASE("fixture serialization is byte-stable") {
    const std::string a = specialized_pair_fixture_json(7, 0, SopVariant::FullOdd);
    const std::string b = specialized_pair_fixture_json(7, 0, SopVariant::FullOdd);
    CHECK(a == b);
    CHECK(a.find("\"variant\": \"full-odd\"") != std::string::npos);
}
