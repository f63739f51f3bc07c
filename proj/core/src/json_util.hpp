#pragma once

// Internal helpers shared by the serializers; not installed.

#include <json.hpp>

#include "commat/poly.hpp"

namespace commat::detail {

nlohmann::ordered_json poly_json_value(const Poly& p);

}  // namespace commat::detail
