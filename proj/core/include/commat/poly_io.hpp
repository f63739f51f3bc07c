#pragma once

#include <string>

#include "commat/poly.hpp"

namespace commat {

/// Serializes a polynomial as a JSON object
///   {"n": 3, "char": 5, "terms": [{"c": "2", "m": {"x_2_1": 1, ...}}, ...]}
/// with terms in descending degrevlex order (leading term first) and the
/// variables of each monomial in ascending VarId order. Coefficients are
/// decimal strings: canonical in [0, p) mod p, signed in characteristic 0.
/// Output is byte-identical across runs for equal polynomials.
std::string poly_to_json(const Poly& p);

/// Human-readable rendering, e.g. "-x_2_1*x_2_3 - x_3_1^2".
std::string poly_to_string(const Poly& p);

}  // namespace commat
