#pragma once

#include <string>

#include <json.hpp>

#include "tpro/affine.hpp"
#include "tpro/orbits.hpp"
#include "tpro/predictors.hpp"
#include "tpro/sieving.hpp"

namespace tpro {

using Json = nlohmann::ordered_json;

// Parses `source` as inline JSON when it starts with '{', otherwise reads it
// as a file path. Throws Error(InvalidArgument) on unreadable or malformed input.
Json load_json(const std::string& source);

// {"n": 3, "edges": [{"u": 1, "v": 2, "kind": "reflect"}]}
BilliardsGraph graph_from_json(const Json& j);
Json to_json(const BilliardsGraph& g);

// {"labels": [sigma(1), ..., sigma(n)]}
Labeling labeling_from_json(const Json& j);
Json to_json(const Labeling& sigma);

// {"labels": [...], "i": 1, "eps": 1}; "i" and "eps" default to 1.
State state_from_json(const Json& j);
Json to_json(const State& s);

// {"window": [...], "i": 1, "eps": 1}
AffinePermutation window_from_json(const Json& j);
LiftedState lifted_state_from_json(const Json& j);
Json to_json(const AffinePermutation& u);
Json to_json(const LiftedState& s);

Json to_json(const OrbitReport& report);
// "size,count" header followed by one row per orbit class.
std::string to_csv(const OrbitReport& report);

Json to_json(const CycleInvariants& inv);
Json to_json(const IntPolynomial& p);
Json to_json(const CspReport& report);

}  // namespace tpro
