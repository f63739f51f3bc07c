#include "commat/sop.hpp"

#include <set>
#include <utility>

#include "json_util.hpp"

namespace commat {

namespace {

using Pair = std::pair<int, int>;

struct SopScheme {
    // (i, j) pairs zeroing both x_ij and y_ji.
    std::set<Pair> zero_pairs;
    // (x, y) differences in theorem order, before the skip rule.
    std::vector<std::pair<VarId, VarId>> diffs;
};

SopScheme odd_scheme(int n) {
    const int k = (n - 1) / 2;
    SopScheme s;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n; ++j)
            s.zero_pairs.insert({i, j});
    s.zero_pairs.insert({k + 1, k + 1});
    for (int i = k + 2; i <= n; ++i)
        for (int j = k + 2; j <= n; ++j)
            s.zero_pairs.insert({i, j});
    for (int i = k + 3; i <= n; ++i)
        for (int j = 1; j <= k; ++j)
            s.zero_pairs.insert({i, j});
    for (int t = 1; t <= n; ++t)
        s.diffs.emplace_back(xvar(k + 1, t), yvar(2 * k + 2 - t, k + 1));
    for (int t = k + 2; t <= n; ++t)
        s.diffs.emplace_back(xvar(t, k + 1), yvar(k + 1, t));
    for (int t = 1; t <= k; ++t)
        s.diffs.emplace_back(xvar(k + 2, t), yvar(t, k + 2));
    return s;
}

SopScheme even_scheme(int n) {
    const int k = n / 2;
    SopScheme s;
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= n; ++j)
            s.zero_pairs.insert({i, j});
    s.zero_pairs.insert({k, k});
    s.zero_pairs.insert({k, k + 1});
    s.zero_pairs.insert({k + 1, k + 1});
    for (int j = k + 3; j <= n; ++j)
        s.zero_pairs.insert({k + 1, j});
    for (int i = k + 3; i <= n; ++i)
        s.zero_pairs.insert({i, k + 1});
    for (int i = k + 2; i <= n; ++i)
        for (int j = 1; j <= k - 1; ++j)
            s.zero_pairs.insert({i, j});
    for (int i = k + 2; i <= n; ++i)
        for (int j = k + 2; j <= n; ++j)
            s.zero_pairs.insert({i, j});
    for (int t = 1; t <= n; ++t)
        s.diffs.emplace_back(xvar(k, t), yvar(2 * k + 1 - t, k));
    for (int t = 1; t <= k + 2; ++t)
        s.diffs.emplace_back(xvar(k + 1, t), yvar(t, k + 1));
    s.diffs.emplace_back(xvar(k + 2, k), yvar(k + 1, k + 2));
    s.diffs.emplace_back(xvar(k + 2, k + 1), yvar(k, k + 2));
    for (int t = k + 3; t <= n; ++t)
        s.diffs.emplace_back(xvar(t, k), yvar(k, t));
    return s;
}

SopScheme even_char2_scheme(int n) {
    const int k = n / 2;
    SopScheme s;
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= n; ++j)
            s.zero_pairs.insert({i, j});
    for (int j = k - 1; j <= k + 1; ++j)
        s.zero_pairs.insert({k, j});
    s.zero_pairs.insert({k + 1, k + 1});
    s.zero_pairs.insert({k + 2, k + 2});
    for (int j = k + 3; j <= n; ++j)
        s.zero_pairs.insert({k + 1, j});
    for (int j = 1; j <= k - 2; ++j)
        s.zero_pairs.insert({k + 2, j});
    for (int j = k + 2; j <= n; ++j)
        s.zero_pairs.insert({k + 2, j});
    for (int i = k + 3; i <= n; ++i)
        for (int j = 1; j <= k - 1; ++j)
            s.zero_pairs.insert({i, j});
    for (int i = k + 3; i <= n; ++i)
        for (int j = k + 1; j <= n; ++j)
            s.zero_pairs.insert({i, j});
    for (int t = 1; t <= k - 2; ++t)
        s.diffs.emplace_back(xvar(k, t), yvar(2 * k + 1 - t, k));
    for (int t = k + 3; t <= n; ++t)
        s.diffs.emplace_back(xvar(k, t), yvar(2 * k + 1 - t, k));
    for (int t = 1; t <= k - 2; ++t)
        s.diffs.emplace_back(xvar(k + 1, t), yvar(t, k + 1));
    for (int t = k + 3; t <= n; ++t)
        s.diffs.emplace_back(xvar(t, k), yvar(k, t));
    s.diffs.emplace_back(xvar(k, k + 2), yvar(k + 2, k));
    s.diffs.emplace_back(xvar(k + 1, k - 1), yvar(k + 2, k + 1));
    s.diffs.emplace_back(xvar(k + 1, k), yvar(k, k + 1));
    s.diffs.emplace_back(xvar(k + 1, k + 2), yvar(k - 1, k + 1));
    s.diffs.emplace_back(xvar(k + 2, k - 1), yvar(k - 1, k + 2));
    s.diffs.emplace_back(xvar(k + 2, k), yvar(k + 1, k + 2));
    s.diffs.emplace_back(xvar(k + 2, k + 1), yvar(k, k + 2));
    return s;
}

SopScheme diag_i_scheme(int n) {
    SopScheme s;
    // x_11 is listed first; zero x-side only, so track it as a diff-free
    // special below (handled in sop()).
    for (int t = 1; t <= n; ++t)
        s.diffs.emplace_back(xvar(1, t), yvar(t, 1));
    return s;
}

SopScheme anti_j_scheme(int n) {
    SopScheme s;
    for (int t = 1; t <= n; ++t)
        s.diffs.emplace_back(xvar(1, t), yvar(n + 1 - t, 1));
    return s;
}

}  // namespace

std::string sop_variant_string(SopVariant v) {
    switch (v) {
        case SopVariant::FullOdd: return "full-odd";
        case SopVariant::FullEven: return "full-even";
        case SopVariant::FullEvenChar2: return "full-even-char2";
        case SopVariant::DiagI: return "diag-i";
        case SopVariant::AntiJ: return "anti-j";
    }
    return "?";
}

std::size_t sop_expected_size(int n, SopVariant variant) {
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    switch (variant) {
        case SopVariant::FullOdd: return 2 * nn - 2 * n + 2;
        case SopVariant::FullEven:
        case SopVariant::FullEvenChar2: return 2 * nn - 2 * n + 1;
        case SopVariant::DiagI: return 2 * nn - n + 1;
        case SopVariant::AntiJ: return 2 * nn - n;
    }
    return 0;
}

SopList sop(int n, std::uint32_t characteristic, SopVariant variant, bool partial) {
    if (n < 3)
        throw error("systems of parameters require n >= 3");
    if (!valid_characteristic(characteristic))
        throw error("characteristic must be 0 or a prime below 2^31, got " +
                    std::to_string(characteristic));
    switch (variant) {
        case SopVariant::FullOdd:
            if (n % 2 == 0)
                throw error("full-odd requires odd n");
            break;
        case SopVariant::FullEven:
            if (n % 2 == 1 || characteristic == 2)
                throw error("full-even requires even n and characteristic != 2");
            break;
        case SopVariant::FullEvenChar2:
            if (n % 2 == 1 || characteristic != 2)
                throw error("full-even-char2 requires even n and characteristic 2");
            break;
        default:
            break;
    }

    const Ring ring{n, characteristic};
    SopList list{variant, ring, partial, {}};

    auto zeroed = [&](VarId v, const SopScheme& s) {
        if (v.kind == VarKind::X)
            return s.zero_pairs.count({v.row, v.col}) > 0;
        return s.zero_pairs.count({v.col, v.row}) > 0;
    };

    SopScheme scheme;
    switch (variant) {
        case SopVariant::FullOdd: scheme = odd_scheme(n); break;
        case SopVariant::FullEven: scheme = even_scheme(n); break;
        case SopVariant::FullEvenChar2: scheme = even_char2_scheme(n); break;
        case SopVariant::DiagI: scheme = diag_i_scheme(n); break;
        case SopVariant::AntiJ: scheme = anti_j_scheme(n); break;
    }

    if (variant == SopVariant::DiagI || variant == SopVariant::AntiJ) {
        if (variant == SopVariant::DiagI)
            list.elements.push_back(Poly::variable(ring, xvar(1, 1)));
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                list.elements.push_back(Poly::variable(ring, xvar(i, j)));
        for (int i = 1; i <= n; ++i)
            for (int j = 2; j <= n; ++j)
                list.elements.push_back(Poly::variable(ring, yvar(i, j)));
        if (!partial) {
            for (const auto& [xv, yv] : scheme.diffs)
                list.elements.push_back(Poly::variable(ring, xv) - Poly::variable(ring, yv));
        }
        return list;
    }

    for (const auto& [i, j] : scheme.zero_pairs) {
        list.elements.push_back(Poly::variable(ring, xvar(i, j)));
        list.elements.push_back(Poly::variable(ring, yvar(j, i)));
    }
    if (!partial) {
        for (const auto& [xv, yv] : scheme.diffs) {
            // Differences whose endpoints are both zeroed are already
            // accounted for in the index set; the theorems note them as
            // "included above".
            if (zeroed(xv, scheme) && zeroed(yv, scheme))
                continue;
            list.elements.push_back(Poly::variable(ring, xv) - Poly::variable(ring, yv));
        }
    }
    return list;
}

SpecMap spec_map(const SopList& list) {
    SpecMap map;
    for (const auto& el : list.elements) {
        if (el.term_count() == 1) {
            const auto& f = el.terms()[0].mono.factors();
            if (f.size() != 1 || f[0].second != 1)
                throw substitution_error("sop element is not linear");
            map.zeroed.insert(f[0].first);
        } else if (el.term_count() == 2) {
            VarId a = el.terms()[0].mono.factors()[0].first;
            VarId b = el.terms()[1].mono.factors()[0].first;
            if (a.kind == b.kind)
                throw substitution_error("identification must pair an x with a y");
            const VarId xv = a.kind == VarKind::X ? a : b;
            const VarId yv = a.kind == VarKind::Y ? a : b;
            map.identified.emplace_back(yv, xv);
        } else {
            throw substitution_error("sop element is neither a variable nor a difference");
        }
    }
    map.validate();
    return map;
}

MatrixPair specialized_pair(int n, std::uint32_t characteristic, SopVariant variant, bool partial) {
    const SpecMap map = spec_map(sop(n, characteristic, variant, partial));
    MatrixPair pair = generic_pair(n, characteristic);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            pair.X.at(i, j) = pair.X.at(i, j).substituted(map);
            pair.Y.at(i, j) = pair.Y.at(i, j).substituted(map);
        }
    return pair;
}

namespace {

SopVariant full_variant_for(int n, std::uint32_t characteristic) {
    if (n % 2 == 1)
        return SopVariant::FullOdd;
    return characteristic == 2 ? SopVariant::FullEvenChar2 : SopVariant::FullEven;
}

/// Commutator of the pair, specialized entrywise.
PolyMatrix specialized_commutator(const MatrixPair& pair) { return commutator(pair); }

}  // namespace

RecursionReport verify_recursions(int n, std::uint32_t characteristic) {
    if (n < 5)
        throw error("recursion identities require n >= 5");
    const SopVariant variant = full_variant_for(n, characteristic);
    RecursionReport report{n, characteristic, variant, true, {}};

    const MatrixPair big = specialized_pair(n, characteristic, variant, false);
    const PolyMatrix cbar = specialized_commutator(big);
    const Ring& ring = big.ring;

    // Inner (n-2)-system, relabeled into the big ring by shifting both
    // indices up by one.
    const MatrixPair sub = specialized_pair(n - 2, characteristic, full_variant_for(n - 2, characteristic), false);
    const PolyMatrix csub = specialized_commutator(sub);
    auto shift = [](VarId v) { return VarId{v.kind, static_cast<std::uint8_t>(v.row + 1), static_cast<std::uint8_t>(v.col + 1)}; };
    auto c0 = [&](int a, int b) { return csub.at(a, b).mapped_vars(ring, shift); };

    auto xv = [&](int i, int j) { return Poly::variable(ring, xvar(i, j)); };
    auto check = [&](std::string name, const Poly& lhs, const Poly& rhs) {
        const bool pass = lhs == rhs;
        if (!pass)
            report.all_pass = false;
        report.identities.push_back({std::move(name), pass});
    };
    auto cname = [](int i, int j) { return "c(" + std::to_string(i) + "," + std::to_string(j) + ")"; };

    if (n % 2 == 1) {
        const int k = (n - 1) / 2;
        check(cname(1, 1) + " corner", cbar.at(1, 1),
              (xv(k + 1, 1) * xv(k + 1, n)).negated() - xv(k + 2, 1) * xv(k + 2, 1));
        check(cname(1, n) + " corner", cbar.at(1, n), (xv(k + 1, n) * xv(k + 1, n)).negated());
        check(cname(n, 1) + " corner", cbar.at(n, 1), (xv(k + 1, 1) * xv(k + 1, 1)).negated());
        check(cname(n, n) + " corner", cbar.at(n, n), xv(n, k + 1) * xv(n, k + 1) - xv(k + 1, 1) * xv(k + 1, n));
        for (int i = 2; i <= k; ++i) {
            check(cname(i, i) + " closed form", cbar.at(i, i),
                  (xv(k + 1, i) * xv(k + 1, 2 * k + 2 - i)).negated() - xv(k + 2, i) * xv(k + 2, i));
            check(cname(i, i) + " = inner", cbar.at(i, i), c0(i - 1, i - 1));
        }
        check(cname(k + 1, k + 1), cbar.at(k + 1, k + 1),
              c0(k, k) + xv(k + 1, 1) * xv(k + 1, n) * Poly::constant(ring, 2) - xv(n, k + 1) * xv(n, k + 1));
        check(cname(k + 2, k + 2), cbar.at(k + 2, k + 2), c0(k + 1, k + 1) + xv(k + 2, 1) * xv(k + 2, 1));
        for (int i = k + 3; i <= 2 * k; ++i)
            check(cname(i, i) + " = inner", cbar.at(i, i), c0(i - 1, i - 1));
        for (int i = 2; i <= 2 * k; ++i) {
            if (i == k + 1)
                continue;
            check(cname(i, 2 * k + 2 - i) + " = inner", cbar.at(i, 2 * k + 2 - i), c0(i - 1, 2 * k + 1 - i));
        }
    } else {
        const int k = n / 2;
        check(cname(1, 1) + " corner", cbar.at(1, 1),
              (xv(k, 1) * xv(k, n)).negated() - xv(k + 1, 1) * xv(k + 1, 1));
        check(cname(1, n) + " corner", cbar.at(1, n), (xv(k, n) * xv(k, n)).negated());
        check(cname(n, 1) + " corner", cbar.at(n, 1), (xv(k, 1) * xv(k, 1)).negated());
        check(cname(n, n) + " corner", cbar.at(n, n), xv(n, k) * xv(n, k) - xv(k, 1) * xv(k, n));
        for (int i = 2; i <= k - 1; ++i)
            check(cname(i, i) + " = inner", cbar.at(i, i), c0(i - 1, i - 1));
        check(cname(k, k), cbar.at(k, k),
              xv(k, 1) * xv(k, n) * Poly::constant(ring, 2) - xv(n, k) * xv(n, k) + c0(k - 1, k - 1));
        check(cname(k + 1, k + 1), cbar.at(k + 1, k + 1), xv(k + 1, 1) * xv(k + 1, 1) + c0(k, k));
        for (int i = k + 2; i <= 2 * k - 1; ++i)
            check(cname(i, i) + " = inner", cbar.at(i, i), c0(i - 1, i - 1));
        for (int i = 2; i <= 2 * k - 1; ++i) {
            if (i == k || i == k + 1)
                continue;
            check(cname(i, 2 * k + 1 - i) + " = inner", cbar.at(i, 2 * k + 1 - i), c0(i - 1, 2 * k - i));
        }
        check(cname(k, k + 1), cbar.at(k, k + 1), xv(k, 1) * xv(k + 1, 1) + c0(k - 1, k));
        check(cname(k + 1, k), cbar.at(k + 1, k), xv(k + 1, 1) * xv(k, n) + c0(k, k - 1));
    }
    return report;
}

std::string recursion_report_to_json(const RecursionReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["char"] = report.characteristic;
    j["variant"] = sop_variant_string(report.variant);
    j["all_pass"] = report.all_pass;
    auto ids = nlohmann::ordered_json::array();
    for (const auto& id : report.identities) {
        nlohmann::ordered_json ji;
        ji["identity"] = id.name;
        ji["pass"] = id.pass;
        ids.push_back(std::move(ji));
    }
    j["identities"] = std::move(ids);
    return j.dump();
}

std::string specialized_pair_fixture_json(int n, std::uint32_t characteristic, SopVariant variant) {
    const MatrixPair pair = specialized_pair(n, characteristic, variant, false);
    nlohmann::ordered_json j;
    j["n"] = n;
    j["char"] = characteristic;
    j["variant"] = sop_variant_string(variant);
    auto grid = [&](const PolyMatrix& m) {
        auto rows = nlohmann::ordered_json::array();
        for (int i = 1; i <= n; ++i) {
            auto row = nlohmann::ordered_json::array();
            for (int jj = 1; jj <= n; ++jj)
                row.push_back(detail::poly_json_value(m.at(i, jj)));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["X"] = grid(pair.X);
    j["Y"] = grid(pair.Y);
    return j.dump(1) + "\n";
}

}  // namespace commat
