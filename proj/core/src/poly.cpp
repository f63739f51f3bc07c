#include "commat/poly.hpp"

#include <map>

namespace commat {

void SpecMap::validate() const {
    std::set<VarId> replaced;
    for (const auto& [from, to] : identified) {
        if (!replaced.insert(from).second)
            throw substitution_error("variable " + from.name() + " replaced twice");
        if (zeroed.count(from))
            throw substitution_error("variable " + from.name() + " both zeroed and replaced");
    }
    for (const auto& [from, to] : identified) {
        if (replaced.count(to))
            throw substitution_error("cyclic substitution through " + to.name());
    }
}

std::optional<VarId> SpecMap::image(VarId v) const {
    if (zeroed.count(v))
        return std::nullopt;
    for (const auto& [from, to] : identified) {
        if (from == v) {
            if (zeroed.count(to))
                return std::nullopt;
            return to;
        }
    }
    return v;
}

mpz_class Poly::reduce(mpz_class c) const {
    if (ring_.characteristic == 0)
        return c;
    mpz_class r;
    mpz_mod(r.get_mpz_t(), c.get_mpz_t(), mpz_class(ring_.characteristic).get_mpz_t());
    return r;
}

Poly Poly::constant(const Ring& ring, mpz_class c) {
    Poly p(ring);
    c = p.reduce(std::move(c));
    if (c != 0)
        p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
}

Poly Poly::variable(const Ring& ring, VarId v) {
    if (!ring.contains(v))
        throw error("variable " + v.name() + " outside ring of size " + std::to_string(ring.n));
    Poly p(ring);
    p.terms_.push_back({Monomial::variable(v), 1});
    return p;
}

Poly Poly::monomial(const Ring& ring, Monomial m, mpz_class c) {
    Poly p(ring);
    c = p.reduce(std::move(c));
    if (c != 0)
        p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
    std::map<Monomial, mpz_class, DegrevlexGreater> acc;
    for (auto& t : terms)
        acc[std::move(t.mono)] += t.coeff;
    Poly p(ring);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
        mpz_class r = p.reduce(c);
        if (r != 0)
            p.terms_.push_back({m, std::move(r)});
    }
    return p;
}

mpz_class Poly::coeff_of(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
        return Monomial::cmp_degrevlex(t.mono, key) > 0;
    });
    if (it != terms_.end() && it->mono == m)
        return it->coeff;
    return 0;
}

Poly Poly::operator+(const Poly& o) const {
    ring_.require_same(o.ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        const int c = Monomial::cmp_degrevlex(a->mono, b->mono);
        if (c > 0)
            r.terms_.push_back(*a++);
        else if (c < 0)
            r.terms_.push_back(*b++);
        else {
            mpz_class s = reduce(a->coeff + b->coeff);
            if (s != 0)
                r.terms_.push_back({a->mono, std::move(s)});
            ++a;
            ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

Poly Poly::negated() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.mono, reduce(-t.coeff)});
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.negated(); }

Poly Poly::scaled(const mpz_class& c) const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        mpz_class s = reduce(t.coeff * c);
        if (s != 0)
            r.terms_.push_back({t.mono, std::move(s)});
    }
    return r;
}

Poly Poly::times_monomial(const Monomial& m, const mpz_class& c) const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        mpz_class s = reduce(t.coeff * c);
        if (s != 0)
            r.terms_.push_back({t.mono.times(m), std::move(s)});
    }
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    ring_.require_same(o.ring_);
    std::map<Monomial, mpz_class, DegrevlexGreater> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            acc[a.mono.times(b.mono)] += a.coeff * b.coeff;
    Poly r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
        mpz_class s = reduce(c);
        if (s != 0)
            r.terms_.push_back({m, std::move(s)});
    }
    return r;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = Poly::constant(ring_, 1);
    for (std::uint64_t i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

Poly Poly::truncated(std::uint32_t p) const {
    Poly r(ring_);
    for (const auto& t : terms_)
        if (!t.mono.any_exponent_at_least(p))
            r.terms_.push_back(t);
    return r;
}

Poly Poly::truncated_mul(const Poly& o, std::uint32_t p) const {
    ring_.require_same(o.ring_);
    if (ring_.characteristic != p)
        throw ring_mismatch_error("truncated arithmetic requires coefficients in F_p");
    std::map<Monomial, mpz_class, DegrevlexGreater> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono.times(b.mono);
            if (m.any_exponent_at_least(p))
                continue;
            acc[std::move(m)] += a.coeff * b.coeff;
        }
    }
    Poly r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
        mpz_class s = reduce(c);
        if (s != 0)
            r.terms_.push_back({m, std::move(s)});
    }
    return r;
}

Poly Poly::truncated_pow(std::uint64_t e, std::uint32_t p) const {
    Poly r = Poly::constant(ring_, 1);
    const Poly base = truncated(p);
    for (std::uint64_t i = 0; i < e; ++i)
        r = r.truncated_mul(base, p);
    return r;
}

Poly Poly::substituted(const SpecMap& map) const {
    map.validate();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        bool killed = false;
        std::vector<Monomial::Factor> factors;
        factors.reserve(t.mono.factors().size());
        for (const auto& [v, e] : t.mono.factors()) {
            auto img = map.image(v);
            if (!img) {
                killed = true;
                break;
            }
            factors.emplace_back(*img, e);
        }
        if (!killed)
            out.push_back({Monomial::from_factors(std::move(factors)), t.coeff});
    }
    return from_terms(ring_, std::move(out));
}

Poly Poly::mapped_vars(const Ring& target, const std::function<VarId(VarId)>& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<Monomial::Factor> factors;
        factors.reserve(t.mono.factors().size());
        for (const auto& [v, e] : t.mono.factors())
            factors.emplace_back(f(v), e);
        out.push_back({Monomial::from_factors(std::move(factors)), t.coeff});
    }
    return from_terms(target, std::move(out));
}

std::set<VarId> Poly::variables() const {
    std::set<VarId> vars;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.factors())
            vars.insert(v);
    return vars;
}

}  // namespace commat
