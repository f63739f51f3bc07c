#pragma once

// Independent reference computations used by both the unit and the
// acceptance suites. These deliberately avoid the optimized code paths
// they are checking.

#include <set>
#include <vector>

#include "commat/binom.hpp"
#include "commat/fedder.hpp"
#include "commat/poly.hpp"

namespace commat::testing {

/// Expands omega^(p-1) exactly with the generic arithmetic and truncates
/// afterwards; feasible only for small systems.
inline Poly truncated_power_reference(const IdealSpec& ideal, const SpecMap& map, std::uint32_t p) {
    return omega(ideal, map).pow(p - 1).truncated(p);
}

/// Enumerates every nonnegative exponent tuple whose per-factor degrees
/// equal p-1 and filters by the variable-degree equations; the bounded
/// polytope makes this exhaustive.
inline std::set<std::vector<std::int64_t>> n4_bruteforce_solutions(std::uint32_t p) {
    const std::int64_t q = static_cast<std::int64_t>(p) - 1;
    std::vector<std::vector<std::vector<std::int64_t>>> factor_choices;
    for (int len : {4, 3, 3, 4, 2, 2, 2}) {
        std::vector<std::vector<std::int64_t>> choices;
        std::vector<std::int64_t> cur(len, 0);
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
    std::set<std::vector<std::int64_t>> solutions;
    std::vector<std::int64_t> tuple;
    auto join = [&](auto&& self, std::size_t f) -> void {
        if (f == factor_choices.size()) {
            if (n4_constraints_hold(tuple, p))
                solutions.insert(tuple);
            return;
        }
        for (const auto& choice : factor_choices[f]) {
            tuple.insert(tuple.end(), choice.begin(), choice.end());
            self(self, f + 1);
            tuple.resize(tuple.size() - choice.size());
        }
    };
    join(join, 0);
    return solutions;
}

}  // namespace commat::testing
