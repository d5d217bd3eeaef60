#pragma once

#include <json.hpp>
#include <string>

#include "fliplab/complexes.hpp"
#include "fliplab/rigidity.hpp"

namespace fliplab {

// All exports order vertices lexicographically by their canonical
// serialization, so identical inputs produce byte-identical documents.

nlohmann::json to_json(const Triangulation& t);
nlohmann::json to_json(const FlipSubgraph& g);
nlohmann::json to_json(const SimplicialComplex& c);
nlohmann::json to_json(const ArcMap& m);
nlohmann::json to_json(const RigidityReport& r, bool include_details = true);

/// Undirected DOT graph; vertex labels are serialized triangulations and
/// edge labels read "-removed/+added".
std::string to_dot(const FlipSubgraph& g);

}  // namespace fliplab
