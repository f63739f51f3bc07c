#include "commat/fedder.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <thread>

#include "json_util.hpp"

namespace commat {

namespace {

std::vector<Poly> specialize_factors(const IdealSpec& ideal, const SpecMap& map) {
    std::vector<Poly> factors;
    factors.reserve(ideal.generators.size());
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        Poly s = ideal.generators[i].substituted(map);
        if (s.is_zero())
            throw error("generator " + std::to_string(i + 1) + " specializes to zero; wrong map");
        factors.push_back(std::move(s));
    }
    return factors;
}

// ---------------------------------------------------------------------------
// Packed expansion engine. Exponent vectors over the factors' variable
// universe are packed into bit fields of a 64-bit key, with enough bits
// per field to add two truncated exponents without carry. Coefficients
// are canonical residues mod p.

struct PackedTerm {
    std::uint64_t key = 0;
    std::uint32_t coeff = 0;
    // Field indices this term touches; only these can newly reach p.
    std::vector<std::uint32_t> fields;
};

struct PackedFactor {
    std::vector<PackedTerm> terms;
};

class PackedSystem {
public:
    static std::optional<PackedSystem> create(const std::vector<Poly>& factors, std::uint32_t p) {
        PackedSystem sys;
        sys.p_ = p;
        std::set<VarId> vars;
        for (const auto& f : factors)
            for (VarId v : f.variables())
                vars.insert(v);
        sys.vars_.assign(vars.begin(), vars.end());
        const std::uint32_t max_field = 2 * (p - 1);
        sys.width_ = std::max(1, static_cast<int>(std::bit_width(max_field + 1u)));
        if (sys.vars_.size() * sys.width_ > 64)
            return std::nullopt;
        sys.mask_ = (sys.width_ == 64) ? ~0ull : ((1ull << sys.width_) - 1);
        return sys;
    }

    std::uint32_t p() const { return p_; }
    std::size_t var_count() const { return vars_.size(); }
    const std::vector<VarId>& vars() const { return vars_; }

    std::size_t var_index(VarId v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        return static_cast<std::size_t>(it - vars_.begin());
    }

    std::uint64_t field(std::uint64_t key, std::size_t idx) const { return (key >> (idx * width_)) & mask_; }

    std::optional<PackedFactor> pack(const Poly& f) const {
        PackedFactor pf;
        for (const auto& t : f.terms()) {
            PackedTerm pt;
            pt.coeff = static_cast<std::uint32_t>(mpz_get_ui(t.coeff.get_mpz_t()));
            bool truncated_away = false;
            for (const auto& [v, e] : t.mono.factors()) {
                if (e >= p_) {
                    truncated_away = true;
                    break;
                }
                const std::size_t idx = var_index(v);
                pt.key |= static_cast<std::uint64_t>(e) << (idx * width_);
                pt.fields.push_back(static_cast<std::uint32_t>(idx));
            }
            if (!truncated_away)
                pf.terms.push_back(std::move(pt));
        }
        if (pf.terms.empty())
            return std::nullopt;  // factor dies under truncation
        return pf;
    }

    Monomial decode(std::uint64_t key) const {
        std::vector<Monomial::Factor> factors;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const std::uint64_t e = field(key, i);
            if (e)
                factors.emplace_back(vars_[i], static_cast<std::int64_t>(e));
        }
        return Monomial::from_factors(std::move(factors));
    }

    /// Term-order comparison on packed keys; agrees with degrevlex on the
    /// decoded monomials.
    int cmp(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            da += field(a, i);
            db += field(b, i);
        }
        if (da != db)
            return da < db ? -1 : 1;
        for (std::size_t i = vars_.size(); i-- > 0;) {
            const std::uint64_t ea = field(a, i), eb = field(b, i);
            if (ea != eb)
                return ea < eb ? 1 : -1;
        }
        return 0;
    }

private:
    std::vector<VarId> vars_;
    std::uint32_t p_ = 0;
    int width_ = 0;
    std::uint64_t mask_ = 0;
};

/// Open-addressing accumulator keyed by packed monomials.
class TermMap {
public:
    explicit TermMap(std::size_t expected) { rehash(std::max<std::size_t>(64, expected * 2)); }

    void add(std::uint64_t key, std::uint64_t coeff, std::uint32_t p) {
        if (size_ * 10 >= capacity_ * 7)
            rehash(capacity_ * 2);
        std::size_t i = probe(key);
        if (!used_[i]) {
            used_[i] = 1;
            keys_[i] = key;
            vals_[i] = static_cast<std::uint32_t>(coeff % p);
            ++size_;
        } else {
            vals_[i] = static_cast<std::uint32_t>((vals_[i] + coeff) % p);
        }
    }

    std::size_t size() const { return size_; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < capacity_; ++i)
            if (used_[i] && vals_[i] != 0)
                f(keys_[i], vals_[i]);
    }

    std::vector<std::pair<std::uint64_t, std::uint32_t>> extract_nonzero() const {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
        out.reserve(size_);
        for_each([&](std::uint64_t k, std::uint32_t v) { out.emplace_back(k, v); });
        return out;
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::size_t probe(std::uint64_t key) const {
        std::size_t i = mix(key) & (capacity_ - 1);
        while (used_[i] && keys_[i] != key)
            i = (i + 1) & (capacity_ - 1);
        return i;
    }

    void rehash(std::size_t cap) {
        cap = std::bit_ceil(cap);
        std::vector<std::uint64_t> keys(cap);
        std::vector<std::uint32_t> vals(cap);
        std::vector<char> used(cap, 0);
        std::swap(keys, keys_);
        std::swap(vals, vals_);
        std::swap(used, used_);
        capacity_ = cap;
        size_ = 0;
        for (std::size_t i = 0; i < used.size(); ++i) {
            if (!used[i])
                continue;
            std::size_t slot = probe(keys[i]);
            used_[slot] = 1;
            keys_[slot] = keys[i];
            vals_[slot] = vals[i];
            ++size_;
        }
    }

    std::size_t capacity_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> vals_;
    std::vector<char> used_;
};

using LiveVec = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

struct FoldResult {
    LiveVec live;
    std::size_t peak = 0;
};

/// Multiplies the live set by one packed factor with eager truncation.
LiveVec fold_step(const PackedSystem& sys, const LiveVec& live, const PackedFactor& f,
                  std::uint32_t p, unsigned threads) {
    auto run = [&](std::size_t lo, std::size_t hi, TermMap& acc) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const auto [k, c] = live[idx];
            for (const auto& t : f.terms) {
                const std::uint64_t nk = k + t.key;
                bool ok = true;
                for (const std::uint32_t fi : t.fields) {
                    if (sys.field(nk, fi) >= p) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    acc.add(nk, static_cast<std::uint64_t>(c) * t.coeff, p);
            }
        }
    };

    const std::size_t estimated = live.size() + live.size() / 2;
    if (threads <= 1 || live.size() < 1024) {
        TermMap acc(estimated);
        run(0, live.size(), acc);
        return acc.extract_nonzero();
    }

    const unsigned t = std::min<unsigned>(threads, 16);
    std::vector<TermMap> maps;
    maps.reserve(t);
    for (unsigned i = 0; i < t; ++i)
        maps.emplace_back(estimated / t + 64);
    std::vector<std::thread> workers;
    const std::size_t chunk = (live.size() + t - 1) / t;
    for (unsigned i = 0; i < t; ++i) {
        const std::size_t lo = i * chunk;
        const std::size_t hi = std::min(live.size(), lo + chunk);
        if (lo >= hi)
            break;
        workers.emplace_back([&, lo, hi, i] { run(lo, hi, maps[i]); });
    }
    for (auto& w : workers)
        w.join();
    TermMap merged(estimated);
    for (const auto& m : maps)
        m.for_each([&](std::uint64_t k, std::uint32_t v) { merged.add(k, v, p); });
    return merged.extract_nonzero();
}

struct ExpansionSetup {
    PackedSystem sys;
    std::vector<PackedFactor> ordered_factors;  // each repeated p-1 times
    bool dead = false;                          // some factor truncates to zero
};

std::optional<ExpansionSetup> prepare(const std::vector<Poly>& factors, std::uint32_t p) {
    auto sys = PackedSystem::create(factors, p);
    if (!sys)
        return std::nullopt;
    // Ascending term count keeps the live set small early.
    std::vector<const Poly*> order;
    for (const auto& f : factors)
        order.push_back(&f);
    std::stable_sort(order.begin(), order.end(),
                     [](const Poly* a, const Poly* b) { return a->term_count() < b->term_count(); });
    ExpansionSetup setup{*sys, {}, false};
    for (const Poly* f : order) {
        auto pf = sys->pack(*f);
        if (!pf) {
            setup.dead = true;
            return setup;
        }
        for (std::uint32_t e = 0; e + 1 < p; ++e)
            setup.ordered_factors.push_back(*pf);
    }
    return setup;
}

FoldResult expand_truncated(const ExpansionSetup& setup, std::uint32_t p, const FedderOptions& opts,
                            const std::uint64_t* target_key = nullptr,
                            const std::vector<std::vector<std::uint32_t>>* remaining_caps = nullptr) {
    FoldResult result;
    result.live = {{0ull, 1u}};
    if (setup.dead) {
        result.live.clear();
        return result;
    }
    const std::size_t steps = setup.ordered_factors.size();
    for (std::size_t s = 0; s < steps; ++s) {
        result.live = fold_step(setup.sys, result.live, setup.ordered_factors[s], p, opts.threads);
        if (target_key && remaining_caps) {
            // Keep only monomials that the remaining factor copies can
            // still complete to the target exponents.
            const auto& caps = (*remaining_caps)[s + 1];
            LiveVec kept;
            kept.reserve(result.live.size());
            for (const auto& [k, c] : result.live) {
                bool viable = true;
                for (std::size_t vi = 0; vi < setup.sys.var_count() && viable; ++vi) {
                    const std::uint64_t have = setup.sys.field(k, vi);
                    const std::uint64_t want = setup.sys.field(*target_key, vi);
                    if (have > want || want - have > caps[vi])
                        viable = false;
                }
                if (viable)
                    kept.push_back({k, c});
            }
            result.live.swap(kept);
        }
        result.peak = std::max(result.peak, result.live.size());
        if (result.live.size() > opts.term_ceiling)
            throw scale_exceeded_error("live term set exceeded ceiling of " +
                                       std::to_string(opts.term_ceiling) + " terms");
        if (result.live.empty())
            break;
    }
    return result;
}

/// Generic-representation fallback for systems whose packed form does not
/// fit in 64 bits.
Poly expand_truncated_generic(const std::vector<Poly>& factors, std::uint32_t p,
                              const FedderOptions& opts) {
    std::vector<const Poly*> order;
    for (const auto& f : factors)
        order.push_back(&f);
    std::stable_sort(order.begin(), order.end(),
                     [](const Poly* a, const Poly* b) { return a->term_count() < b->term_count(); });
    Poly acc = Poly::constant(factors.front().ring(), 1);
    for (const Poly* f : order) {
        const Poly ft = f->truncated(p);
        for (std::uint32_t e = 0; e + 1 < p; ++e) {
            acc = acc.truncated_mul(ft, p);
            if (acc.term_count() > opts.term_ceiling)
                throw scale_exceeded_error("live term set exceeded ceiling of " +
                                           std::to_string(opts.term_ceiling) + " terms");
            if (acc.is_zero())
                return acc;
        }
    }
    return acc;
}

std::string variant_label(const IdealSpec& ideal) {
    return ideal_name_string(ideal.name) + " n=" + std::to_string(ideal.n);
}

}  // namespace

Poly omega(const IdealSpec& ideal, const SpecMap& map) {
    const std::vector<Poly> factors = specialize_factors(ideal, map);
    Poly prod = Poly::constant(factors.front().ring(), 1);
    for (const auto& f : factors)
        prod = prod * f;
    return prod;
}

FedderReport fpure_check_ci(const IdealSpec& ideal, const SpecMap& map, std::uint32_t p,
                            const FedderOptions& opts) {
    if (ideal.characteristic != p)
        throw ring_mismatch_error("ideal characteristic does not match p");
    const auto t0 = std::chrono::steady_clock::now();
    FedderReport report;
    report.n = ideal.n;
    report.p = p;
    report.variant = variant_label(ideal);
    report.factor_count = ideal.generators.size();

    const std::vector<Poly> factors = specialize_factors(ideal, map);
    auto setup = prepare(factors, p);
    if (setup) {
        const FoldResult result = expand_truncated(*setup, p, opts);
        report.peak_terms = result.peak;
        report.survivor_count = result.live.size();
        report.witnessed = !result.live.empty();
        if (report.witnessed) {
            const auto best = std::min_element(result.live.begin(), result.live.end(),
                                               [&](const auto& a, const auto& b) {
                                                   return setup->sys.cmp(a.first, b.first) < 0;
                                               });
            report.witness = setup->sys.decode(best->first);
            report.witness_coeff = best->second;
        }
    } else {
        const Poly power = expand_truncated_generic(factors, p, opts);
        report.peak_terms = power.term_count();
        report.survivor_count = power.term_count();
        report.witnessed = !power.is_zero();
        if (report.witnessed) {
            report.witness = power.terms().back().mono;  // least in descending storage
            report.witness_coeff = power.terms().back().coeff;
        }
    }
    if (p == 2)
        report.unique_squarefree = report.survivor_count == 1;
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::vector<Monomial> squarefree_witnesses(const IdealSpec& ideal, const SpecMap& map) {
    if (ideal.characteristic != 2)
        throw error("square-free witness search is a p = 2 operation");
    FedderOptions opts;
    const std::vector<Poly> factors = specialize_factors(ideal, map);
    std::vector<Monomial> out;
    auto setup = prepare(factors, 2);
    if (setup) {
        const FoldResult result = expand_truncated(*setup, 2, opts);
        out.reserve(result.live.size());
        for (const auto& [k, c] : result.live)
            out.push_back(setup->sys.decode(k));
    } else {
        const Poly power = expand_truncated_generic(factors, 2, opts);
        for (const auto& t : power.terms())
            out.push_back(t.mono);
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::cmp_degrevlex(a, b) < 0; });
    return out;
}

mpz_class target_coefficient(const IdealSpec& ideal, const SpecMap& map, std::uint32_t p,
                             const FedderOptions& opts) {
    if (ideal.characteristic != p)
        throw ring_mismatch_error("ideal characteristic does not match p");
    const std::vector<Poly> factors = specialize_factors(ideal, map);
    auto setup = prepare(factors, p);
    if (!setup)
        throw scale_exceeded_error("system too large for the packed expansion");
    if (setup->dead)
        return 0;

    const std::size_t nv = setup->sys.var_count();
    std::uint64_t target = 0;
    {
        std::vector<Monomial::Factor> fac;
        for (VarId v : setup->sys.vars())
            fac.emplace_back(v, p - 1);
        const Poly tp = Poly::monomial(factors.front().ring(), Monomial::from_factors(fac), 1);
        target = setup->sys.pack(tp)->terms.front().key;
    }

    // remaining_caps[s][v]: how many of the factor copies from step s on
    // contain variable v at all; a live monomial short of the target by
    // more than that can never reach it.
    const std::size_t steps = setup->ordered_factors.size();
    std::vector<std::vector<std::uint32_t>> caps(steps + 1, std::vector<std::uint32_t>(nv, 0));
    for (std::size_t s = steps; s-- > 0;) {
        caps[s] = caps[s + 1];
        std::vector<char> seen(nv, 0);
        for (const auto& t : setup->ordered_factors[s].terms)
            for (const std::uint32_t fi : t.fields)
                seen[fi] = 1;
        for (std::size_t v = 0; v < nv; ++v)
            caps[s][v] += seen[v];
    }

    const FoldResult result = expand_truncated(*setup, p, opts, &target, &caps);
    for (const auto& [k, c] : result.live)
        if (k == target)
            return c;
    return 0;
}

namespace {

SopVariant full_variant_for(int n, std::uint32_t p) {
    if (n % 2 == 1)
        return SopVariant::FullOdd;
    return p == 2 ? SopVariant::FullEvenChar2 : SopVariant::FullEven;
}

std::vector<VarId> corner_ideal_vars(int n) {
    if (n % 2 == 1) {
        const int k = (n - 1) / 2;
        return {xvar(k + 1, n), xvar(k + 1, 1), xvar(k + 2, 1), xvar(n, k + 1),
                yvar(1, k + 1), yvar(n, k + 1), yvar(1, k + 2), yvar(k + 1, n)};
    }
    const int k = n / 2;
    return {xvar(k, 1), xvar(k + 1, 1), xvar(k, n), xvar(n, k),
            yvar(1, k), yvar(1, k + 1), yvar(k, n), yvar(n, k)};
}

}  // namespace

InductionReport induction_witness_check(int n, std::uint32_t p, const FedderOptions& opts) {
    if (n < 5)
        throw error("induction witness check runs one step above the base cases (n >= 5)");
    InductionReport report;
    report.n = n;
    report.p = p;

    const SopVariant variant = full_variant_for(n, p);
    const SpecMap map = spec_map(sop(n, p, variant, true));
    const IdealSpec ideal = ideal_spec(generic_pair(n, p), IdealName::Full);
    const FedderReport fr = fpure_check_ci(ideal, map, p, opts);
    report.witnessed = fr.witnessed;
    report.witness = fr.witness;

    // (a) Z-entries lie in the corner-variable monomial ideal.
    const MatrixPair big = specialized_pair(n, p, variant, true);
    const PolyMatrix cbar = commutator(big);
    const MatrixPair sub = specialized_pair(n - 2, p, full_variant_for(n - 2, p), true);
    const PolyMatrix csub = commutator(sub);
    auto shift_up = [](VarId v) {
        return VarId{v.kind, static_cast<std::uint8_t>(v.row + 1), static_cast<std::uint8_t>(v.col + 1)};
    };
    const std::vector<VarId> corners = corner_ideal_vars(n);
    bool z_ok = true;
    for (int i = 2; i <= n - 1 && z_ok; ++i) {
        for (int j = 2; j <= n - 1 && z_ok; ++j) {
            const Poly z = cbar.at(i, j) - csub.at(i - 1, j - 1).mapped_vars(big.ring, shift_up);
            for (const auto& t : z.terms()) {
                bool divisible = false;
                for (VarId v : corners)
                    if (t.mono.exponent(v) > 0) {
                        divisible = true;
                        break;
                    }
                if (!divisible) {
                    z_ok = false;
                    report.notes.push_back("Z entry (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") has a term outside the corner ideal");
                    break;
                }
            }
        }
    }
    report.z_entries_in_corner_ideal = z_ok;

    // (b) The witness restricted to inner-block variables certifies the
    // (n-2)-system.
    if (fr.witness) {
        std::vector<Monomial::Factor> inner;
        for (const auto& [v, e] : fr.witness->factors())
            if (v.row >= 2 && v.row <= n - 1 && v.col >= 2 && v.col <= n - 1)
                inner.emplace_back(VarId{v.kind, static_cast<std::uint8_t>(v.row - 1),
                                         static_cast<std::uint8_t>(v.col - 1)},
                                   e);
        const Monomial restricted = Monomial::from_factors(std::move(inner));

        const SopVariant sub_variant = full_variant_for(n - 2, p);
        const SpecMap sub_map = spec_map(sop(n - 2, p, sub_variant, true));
        const IdealSpec sub_ideal = ideal_spec(generic_pair(n - 2, p), IdealName::Full);
        const std::vector<Poly> sub_factors = specialize_factors(sub_ideal, sub_map);
        auto setup = prepare(sub_factors, p);
        if (setup && !setup->dead) {
            const FoldResult res = expand_truncated(*setup, p, opts);
            mpz_class coeff = 0;
            for (const auto& [k, c] : res.live)
                if (setup->sys.decode(k) == restricted)
                    coeff = c;
            report.inner_restriction_is_witness = coeff != 0;
            if (coeff == 0)
                report.notes.push_back("inner restriction of the witness is not a witness for the (n-2)-system");
        } else {
            const Poly power = expand_truncated_generic(sub_factors, p, opts);
            report.inner_restriction_is_witness = power.coeff_of(restricted) != 0;
        }
    }
    return report;
}

std::string fedder_report_to_json(const FedderReport& report, bool include_timings) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["char"] = report.p;
    j["variant"] = report.variant;
    j["is_fpure_witnessed"] = report.witnessed;
    if (report.witness) {
        auto jm = nlohmann::ordered_json::object();
        for (const auto& [v, e] : report.witness->factors())
            jm[v.name()] = e;
        j["witness"] = {{"m", std::move(jm)}, {"c", report.witness_coeff.get_str()}};
    } else {
        j["witness"] = nullptr;
    }
    j["survivor_count"] = report.survivor_count;
    if (report.unique_squarefree)
        j["unique_squarefree"] = *report.unique_squarefree;
    j["factor_count"] = report.factor_count;
    j["peak_terms"] = report.peak_terms;
    if (include_timings)
        j["elapsed_ms"] = report.elapsed_ms;
    return j.dump();
}

std::string induction_report_to_json(const InductionReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["char"] = report.p;
    j["witnessed"] = report.witnessed;
    j["z_entries_in_corner_ideal"] = report.z_entries_in_corner_ideal;
    j["inner_restriction_is_witness"] = report.inner_restriction_is_witness;
    if (report.witness) {
        auto jm = nlohmann::ordered_json::object();
        for (const auto& [v, e] : report.witness->factors())
            jm[v.name()] = e;
        j["witness"] = std::move(jm);
    } else {
        j["witness"] = nullptr;
    }
    j["notes"] = report.notes;
    j["ok"] = report.all_ok();
    return j.dump();
}

}  // namespace commat
