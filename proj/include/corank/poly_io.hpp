#pragma once

#include <string>

#include <json.hpp>

#include "corank/poly.hpp"

namespace corank {

// Canonical text form, e.g. "l^2*xi^2 - 3*l*xi + 2". Terms appear in the
// canonical monomial order; parse(render(p)) == p.
std::string render(const MultiPoly& p);
MultiPoly parse_poly(const std::string& text);

// JSON form: list of {"coeff": "...", "exponents": {"l": 2, "xi": 2}} records
// in canonical order.
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

}  // namespace corank
