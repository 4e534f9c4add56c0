#pragma once

#include <string>

#include <json.hpp>

#include "thinwall/multigraph.hpp"

namespace thinwall {

/// {"vertices": [labels...], "edges": [[u, v, mult], ...]} with u < v
/// lexicographically and edges sorted by (u, v).
nlohmann::json graph_to_json(const Multigraph& g);

/// Strict reader: rejects duplicate labels, loops, unknown endpoints,
/// multiplicities < 1, pairs not in lexicographic order and duplicate pairs.
Multigraph graph_from_json(const nlohmann::json& j);

/// Parallel edges collapse into one line with a multiplicity label.
std::string graph_to_dot(const Multigraph& g, const std::string& name = "G");

}  // namespace thinwall
