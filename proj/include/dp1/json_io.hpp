#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "dp1/gale.hpp"
#include "dp1/lattice.hpp"

namespace dp1 {

using Json = nlohmann::ordered_json;

Basis basis_from_string(const std::string& name); // case-insensitive

// Exact rationals serialize as integers when integral, else "p/q" strings.
// Floating-point JSON literals are rejected everywhere.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json class_to_json(const PicClass& c); // {"basis": "...", "coeffs": [...]}
Json class_to_json(const RatClass& c);
PicClass class_from_json(const Json& j, std::optional<Basis> default_basis = {});
RatClass rat_class_from_json(const Json& j, std::optional<Basis> default_basis = {});

// Command-line class literals: "[d,m1,...,m8]" or a full JSON object.
PicClass parse_class_literal(const std::string& text, Basis basis);
RatClass parse_rat_class_literal(const std::string& text, Basis basis);

Json config_to_json(const PointConfiguration& c);
PointConfiguration config_from_json(const Json& j);

} // namespace dp1
