#include "commat/groebner.hpp"

#include <algorithm>
#include <set>

#include "json_util.hpp"

namespace commat {

namespace {

mpz_class mod_inverse(const mpz_class& a, std::uint32_t p) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
        throw error("coefficient not invertible mod " + std::to_string(p));
    return inv;
}

Poly make_monic(const Poly& f) {
    const std::uint32_t p = f.ring().characteristic;
    if (f.is_zero())
        return f;
    const mpz_class& lc = f.leading_term().coeff;
    if (lc == 1)
        return f;
    return f.scaled(mod_inverse(lc, p));
}

/// Divides f by the (monic) divisors; remainder has no term divisible by
/// any divisor's leading monomial.
Poly reduce_fully(Poly f, const std::vector<Poly>& divisors) {
    std::vector<Poly::Term> remainder;
    while (!f.is_zero()) {
        const auto& lt = f.leading_term();
        const Poly* hit = nullptr;
        for (const auto& g : divisors) {
            if (g.leading_term().mono.divides(lt.mono)) {
                hit = &g;
                break;
            }
        }
        if (hit) {
            const Monomial q = lt.mono.divided_by(hit->leading_term().mono);
            f = f - hit->times_monomial(q, lt.coeff);
        } else {
            remainder.push_back(lt);
            f = f - Poly::monomial(f.ring(), lt.mono, lt.coeff);
        }
    }
    return Poly::from_terms(f.ring(), std::move(remainder));
}

Poly s_polynomial(const Poly& f, const Poly& g) {
    const Monomial l = Monomial::lcm(f.leading_term().mono, g.leading_term().mono);
    return f.times_monomial(l.divided_by(f.leading_term().mono), 1) -
           g.times_monomial(l.divided_by(g.leading_term().mono), 1);
}

struct PairKey {
    Monomial lcm;
    std::size_t i, j;
};

}  // namespace

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    f.ring().require_same(gb.ring());
    return reduce_fully(f, gb.polys());
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, std::size_t max_pairs) {
    if (gens.empty())
        throw error("buchberger requires a nonempty generator list");
    const Ring ring = gens.front().ring();
    if (ring.characteristic == 0)
        throw error("buchberger requires prime characteristic");
    for (const auto& g : gens)
        ring.require_same(g.ring());

    GroebnerStats stats;
    std::vector<Poly> basis;
    for (const auto& g : gens)
        if (!g.is_zero())
            basis.push_back(make_monic(g));
    if (basis.empty()) {
        return GroebnerBasis(ring, {}, stats);
    }

    std::vector<PairKey> pending;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs_for = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i)
            pending.push_back({Monomial::lcm(basis[i].leading_term().mono, basis[t].leading_term().mono), i, t});
    };
    for (std::size_t t = 1; t < basis.size(); ++t)
        push_pairs_for(t);

    auto pair_less = [](const PairKey& a, const PairKey& b) {
        const int c = Monomial::cmp_degrevlex(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    };

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        const PairKey pk = *it;
        pending.erase(it);
        handled.insert({pk.i, pk.j});
        ++stats.pairs_considered;

        const Monomial& li = basis[pk.i].leading_term().mono;
        const Monomial& lj = basis[pk.j].leading_term().mono;
        if (Monomial::coprime(li, lj)) {
            ++stats.pairs_discarded_coprime;
            continue;
        }
        bool chained = false;
        for (std::size_t t = 0; t < basis.size() && !chained; ++t) {
            if (t == pk.i || t == pk.j)
                continue;
            if (!basis[t].leading_term().mono.divides(pk.lcm))
                continue;
            const auto p1 = std::minmax(pk.i, t);
            const auto p2 = std::minmax(pk.j, t);
            if (handled.count({p1.first, p1.second}) && handled.count({p2.first, p2.second}))
                chained = true;
        }
        if (chained) {
            ++stats.pairs_discarded_chain;
            continue;
        }

        if (stats.reductions >= max_pairs)
            throw scale_exceeded_error("buchberger pair limit " + std::to_string(max_pairs) + " exceeded");
        ++stats.reductions;
        const Poly r = reduce_fully(s_polynomial(basis[pk.i], basis[pk.j]), basis);
        if (r.is_zero()) {
            ++stats.reductions_to_zero;
            continue;
        }
        basis.push_back(make_monic(r));
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another leading monomial.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const Monomial& lj = basis[j].leading_term().mono;
            if (lj.divides(basis[i].leading_term().mono) && !(lj == basis[i].leading_term().mono))
                redundant = true;
            // Equal leading monomials: keep the first occurrence.
            if (lj == basis[i].leading_term().mono && j < i)
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }

    // Interreduce tails for the unique reduced basis.
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        reduced.push_back(make_monic(reduce_fully(minimal[i], others)));
    }

    std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
        return Monomial::cmp_degrevlex(a.leading_term().mono, b.leading_term().mono) < 0;
    });
    return GroebnerBasis(ring, std::move(reduced), stats);
}

bool is_zero_dimensional(const GroebnerBasis& gb, const std::vector<VarId>& vars,
                         std::map<VarId, std::int64_t>* witnesses) {
    if (witnesses)
        witnesses->clear();
    bool ok = true;
    for (VarId v : vars) {
        std::int64_t best = -1;
        for (const auto& g : gb.polys()) {
            VarId w;
            std::int64_t e;
            if (g.leading_term().mono.is_pure_power(&w, &e) && w == v) {
                if (best < 0 || e < best)
                    best = e;
            }
        }
        if (best < 0) {
            ok = false;
        } else if (witnesses) {
            (*witnesses)[v] = best;
        }
    }
    if (!ok && witnesses)
        witnesses->clear();
    return ok;
}

namespace {

std::vector<VarId> surviving_variables(const Ring& ring, const SpecMap& map) {
    std::vector<VarId> vars;
    for (int kind = 0; kind < 2; ++kind)
        for (int i = 1; i <= ring.n; ++i)
            for (int j = 1; j <= ring.n; ++j) {
                const VarId v{static_cast<VarKind>(kind), static_cast<std::uint8_t>(i),
                              static_cast<std::uint8_t>(j)};
                auto img = map.image(v);
                if (img && *img == v)
                    vars.push_back(v);
            }
    return vars;
}

/// DiagI: under the partial map the images of the diagonal generators
/// must be the square-free monomials x_1j*y_j1 up to sign (with c_11
/// carrying their full sum); under the full map the pure squares
/// x_12^2 .. x_1n^2.
bool diag_i_closed_form(int n, std::uint32_t p, SopVerifyReport& report) {
    const MatrixPair pair = generic_pair(n, p);
    const Ring& ring = pair.ring;
    const PolyMatrix c = commutator(pair);
    const SpecMap partial = spec_map(sop(n, p, SopVariant::DiagI, true));
    const SpecMap full = spec_map(sop(n, p, SopVariant::DiagI, false));

    bool ok = true;
    Poly expected_c11 = Poly::zero(ring);
    for (int j = 2; j <= n; ++j)
        expected_c11 = expected_c11 + Poly::variable(ring, xvar(1, j)) * Poly::variable(ring, yvar(j, 1));
    ok = ok && c.at(1, 1).substituted(partial) == expected_c11;
    for (int i = 2; i <= n - 1; ++i) {
        const Poly expected = (Poly::variable(ring, xvar(1, i)) * Poly::variable(ring, yvar(i, 1))).negated();
        ok = ok && c.at(i, i).substituted(partial) == expected;
    }

    Poly expected_c11_full = Poly::zero(ring);
    for (int j = 2; j <= n; ++j)
        expected_c11_full = expected_c11_full + Poly::variable(ring, xvar(1, j)) * Poly::variable(ring, xvar(1, j));
    ok = ok && c.at(1, 1).substituted(full) == expected_c11_full;
    for (int i = 2; i <= n - 1; ++i) {
        const Poly expected = (Poly::variable(ring, xvar(1, i)) * Poly::variable(ring, xvar(1, i))).negated();
        ok = ok && c.at(i, i).substituted(full) == expected;
    }

    if (ok) {
        for (int j = 2; j <= n; ++j)
            report.pure_power_witnesses[xvar(1, j)] = 2;
        report.gb_size = static_cast<std::size_t>(n) - 1;
    }
    return ok;
}

/// AntiJ: partial images are the single square-free monomials
/// x_{1,n+1-i}*y_i1 up to sign; full images the squares x_11^2 .. x_1n^2.
bool anti_j_closed_form(int n, std::uint32_t p, SopVerifyReport& report) {
    const MatrixPair pair = generic_pair(n, p);
    const Ring& ring = pair.ring;
    const PolyMatrix c = commutator(pair);
    const SpecMap partial = spec_map(sop(n, p, SopVariant::AntiJ, true));
    const SpecMap full = spec_map(sop(n, p, SopVariant::AntiJ, false));

    bool ok = true;
    for (int i = 1; i <= n; ++i) {
        const int j = n + 1 - i;
        const Poly expected_partial =
            (Poly::variable(ring, xvar(1, j)) * Poly::variable(ring, yvar(i, 1))).negated();
        ok = ok && c.at(i, j).substituted(partial) == expected_partial;
        const Poly expected_full =
            (Poly::variable(ring, xvar(1, j)) * Poly::variable(ring, xvar(1, j))).negated();
        ok = ok && c.at(i, j).substituted(full) == expected_full;
    }
    if (ok) {
        for (int j = 1; j <= n; ++j)
            report.pure_power_witnesses[xvar(1, j)] = 2;
        report.gb_size = static_cast<std::size_t>(n);
    }
    return ok;
}

}  // namespace

SopVerifyReport verify_sop(int n, std::uint32_t p, SopVariant variant, std::size_t max_pairs) {
    if (p < 2)
        throw error("verify_sop requires a prime characteristic (use a large-prime proxy for 0)");
    const bool full_variant = variant == SopVariant::FullOdd || variant == SopVariant::FullEven ||
                              variant == SopVariant::FullEvenChar2;
    if (full_variant && n > 4)
        throw error("full variants beyond n = 4 are outside the Groebner path; "
                    "use the recursion identity checks");

    SopVerifyReport report;
    report.n = n;
    report.p = p;
    report.variant = variant;

    const SopList list = sop(n, p, variant, false);
    const SpecMap map = spec_map(list);
    const MatrixPair pair = generic_pair(n, p);
    const IdealName name = variant == SopVariant::DiagI  ? IdealName::I
                           : variant == SopVariant::AntiJ ? IdealName::J
                                                          : IdealName::Full;
    const IdealSpec ideal = ideal_spec(pair, name);

    report.sop_size = list.elements.size();
    report.ideal_generator_count = ideal.generators.size();
    report.counts_ok =
        report.sop_size + report.ideal_generator_count == static_cast<std::size_t>(2) * n * n;
    report.surviving_vars = surviving_variables(pair.ring, map);

    if (variant == SopVariant::DiagI) {
        report.closed_form_image_ok = diag_i_closed_form(n, p, report);
        report.zero_dimensional = report.closed_form_image_ok;
        return report;
    }
    if (variant == SopVariant::AntiJ) {
        report.closed_form_image_ok = anti_j_closed_form(n, p, report);
        report.zero_dimensional = report.closed_form_image_ok;
        return report;
    }

    std::vector<Poly> specialized;
    for (const auto& g : ideal.generators) {
        Poly s = g.substituted(map);
        if (!s.is_zero())
            specialized.push_back(std::move(s));
    }
    report.used_groebner = true;
    const GroebnerBasis gb = buchberger(specialized, max_pairs);
    report.gb_size = gb.polys().size();
    report.stats = gb.stats();
    report.zero_dimensional = is_zero_dimensional(gb, report.surviving_vars, &report.pure_power_witnesses);
    return report;
}

std::string sop_verify_report_to_json(const SopVerifyReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["char"] = report.p;
    j["variant"] = sop_variant_string(report.variant);
    if (report.char_zero_proxy)
        j["char_note"] = "characteristic 0 checked via the positive-characteristic surrogate p = 32003";
    j["verdict"] = report.verified() ? "zero-dimensional" : "not verified";
    j["zero_dimensional"] = report.zero_dimensional;
    j["counts"] = {{"sop_elements", report.sop_size},
                   {"ideal_generators", report.ideal_generator_count},
                   {"sum", report.sop_size + report.ideal_generator_count},
                   {"ring_dimension", 2 * report.n * report.n},
                   {"ok", report.counts_ok}};
    auto vars = nlohmann::ordered_json::array();
    for (VarId v : report.surviving_vars)
        vars.push_back(v.name());
    j["surviving_vars"] = std::move(vars);
    j["gb_size"] = report.gb_size;
    auto w = nlohmann::ordered_json::object();
    for (const auto& [v, e] : report.pure_power_witnesses)
        w[v.name()] = e;
    j["pure_power_witnesses"] = std::move(w);
    j["closed_form_image_ok"] = report.closed_form_image_ok;
    j["used_groebner"] = report.used_groebner;
    if (report.used_groebner)
        j["stats"] = {{"pairs_considered", report.stats.pairs_considered},
                      {"discarded_coprime", report.stats.pairs_discarded_coprime},
                      {"discarded_chain", report.stats.pairs_discarded_chain},
                      {"reductions", report.stats.reductions},
                      {"reductions_to_zero", report.stats.reductions_to_zero}};
    return j.dump();
}

}  // namespace commat
