#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "commat/ring.hpp"

namespace commat {

/// Guarded upper bound for any single exponent and for total degree.
inline constexpr std::int64_t kMaxExponent = std::int64_t{1} << 40;

/// A power product over the fixed variable universe, stored sparsely:
/// only nonzero exponents, sorted by the VarId order.
class Monomial {
public:
    using Factor = std::pair<VarId, std::int64_t>;

    Monomial() = default;

    static Monomial variable(VarId v, std::int64_t e = 1) {
        Monomial m;
        if (e < 0)
            throw exponent_overflow_error("negative exponent");
        if (e > 0)
            m.factors_.emplace_back(v, e);
        return m;
    }

    /// Canonicalizes an arbitrary factor list (sorts, merges, drops zeros).
    static Monomial from_factors(std::vector<Factor> factors) {
        std::sort(factors.begin(), factors.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        Monomial m;
        for (const auto& [v, e] : factors) {
            if (e == 0)
                continue;
            if (e < 0)
                throw exponent_overflow_error("negative exponent");
            if (!m.factors_.empty() && m.factors_.back().first == v) {
                m.factors_.back().second = checked_add(m.factors_.back().second, e);
            } else {
                m.factors_.emplace_back(v, e);
            }
        }
        m.check_degree();
        return m;
    }

    bool is_one() const { return factors_.empty(); }

    const std::vector<Factor>& factors() const { return factors_; }

    std::int64_t exponent(VarId v) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                   [](const Factor& f, VarId w) { return f.first < w; });
        return (it != factors_.end() && it->first == v) ? it->second : 0;
    }

    std::int64_t degree() const {
        std::int64_t d = 0;
        for (const auto& [v, e] : factors_)
            d = checked_add(d, e);
        return d;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.factors_.reserve(factors_.size() + o.factors_.size());
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first < b->first)
                r.factors_.push_back(*a++);
            else if (b->first < a->first)
                r.factors_.push_back(*b++);
            else {
                r.factors_.emplace_back(a->first, checked_add(a->second, b->second));
                ++a;
                ++b;
            }
        }
        r.factors_.insert(r.factors_.end(), a, factors_.end());
        r.factors_.insert(r.factors_.end(), b, o.factors_.end());
        r.check_degree();
        return r;
    }

    bool divides(const Monomial& o) const {
        auto b = o.factors_.begin();
        for (const auto& [v, e] : factors_) {
            while (b != o.factors_.end() && b->first < v)
                ++b;
            if (b == o.factors_.end() || b->first != v || b->second < e)
                return false;
        }
        return true;
    }

    /// Quotient this / d; caller must ensure d.divides(*this).
    Monomial divided_by(const Monomial& d) const {
        Monomial r;
        auto b = d.factors_.begin();
        for (const auto& [v, e] : factors_) {
            std::int64_t sub = 0;
            if (b != d.factors_.end() && b->first == v) {
                sub = b->second;
                ++b;
            }
            if (e - sub > 0)
                r.factors_.emplace_back(v, e - sub);
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first < j->first)
                r.factors_.push_back(*i++);
            else if (j->first < i->first)
                r.factors_.push_back(*j++);
            else {
                r.factors_.emplace_back(i->first, std::max(i->second, j->second));
                ++i;
                ++j;
            }
        }
        r.factors_.insert(r.factors_.end(), i, a.factors_.end());
        r.factors_.insert(r.factors_.end(), j, b.factors_.end());
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first < j->first)
                ++i;
            else if (j->first < i->first)
                ++j;
            else
                return false;
        }
        return true;
    }

    bool any_exponent_at_least(std::int64_t bound) const {
        for (const auto& [v, e] : factors_)
            if (e >= bound)
                return true;
        return false;
    }

    /// True when the monomial is v^k for a single variable v; reports (v, k).
    bool is_pure_power(VarId* v = nullptr, std::int64_t* k = nullptr) const {
        if (factors_.size() != 1)
            return false;
        if (v)
            *v = factors_[0].first;
        if (k)
            *k = factors_[0].second;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded reverse lexicographic comparison with the VarId order as
    /// variable significance (x_1_1 most significant, y_n_n least).
    /// Returns <0, 0, >0 for a < b, a == b, a > b; 1 is minimal.
    static int cmp_degrevlex(const Monomial& a, const Monomial& b) {
        const std::int64_t da = a.degree(), db = b.degree();
        if (da != db)
            return da < db ? -1 : 1;
        // Tie-break: scan from the least significant variable (largest
        // VarId); at the first differing exponent, the monomial with the
        // smaller exponent there is the larger one.
        auto i = a.factors_.rbegin();
        auto j = b.factors_.rbegin();
        while (i != a.factors_.rend() || j != b.factors_.rend()) {
            if (i == a.factors_.rend())
                return 1;  // b has trailing weight a lacks => a > b
            if (j == b.factors_.rend())
                return -1;
            if (i->first == j->first) {
                if (i->second != j->second)
                    return i->second < j->second ? 1 : -1;
                ++i;
                ++j;
            } else if (i->first < j->first) {
                // b has a nonzero exponent at a larger VarId than a does.
                return 1;
            } else {
                return -1;
            }
        }
        return 0;
    }

private:
    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        const std::int64_t s = a + b;
        if (s > kMaxExponent)
            throw exponent_overflow_error("exponent/degree exceeds guarded range");
        return s;
    }

    void check_degree() const { (void)degree(); }

    std::vector<Factor> factors_;
};

struct DegrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_degrevlex(a, b) < 0;
    }
};

struct DegrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_degrevlex(a, b) > 0;
    }
};

/// The one term order used everywhere: degrevlex over the fixed VarId order.
struct TermOrder {
    static int cmp(const Monomial& a, const Monomial& b) { return Monomial::cmp_degrevlex(a, b); }
};

}  // namespace commat
