#pragma once

#include <nlohmann/json.hpp>

#include "cluster/pattern.hpp"
#include "cluster/polygon.hpp"
#include "cluster/poly.hpp"

namespace cluster {

using json = nlohmann::ordered_json;

// Serialization uses the canonical orders of each type: terms sorted
// lexicographically by exponent, seeds in BFS discovery order, paths in
// enumeration order. Coefficients are decimal strings.

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json to_json(const TropicalElement& t);
json to_json(const Seed& s);
Seed seed_from_json(const json& j);

json to_json(const PatternMatrices& m);
json to_json(const ExchangeGraph& g);

json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

json to_json(const TPath& p);

}  // namespace cluster
