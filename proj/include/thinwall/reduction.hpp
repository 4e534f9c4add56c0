#pragma once

// Reductions to minimum degree 3 and to 3-edge-connected pieces, each with a
// replay log that lifts decompositions of the reduced graphs back.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thinwall/multigraph.hpp"
#include "thinwall/treecut.hpp"

namespace thinwall {

struct ReductionStep {
  enum class Kind { Delete, Suppress } kind = Kind::Delete;
  std::string vertex;  // label of the removed vertex
  std::string anchor;  // a neighbour, or any other vertex when isolated
  std::string other;   // Suppress only: the second neighbour (equal to anchor for a double edge)
};

struct Reduction {
  Multigraph graph;  // minimum degree >= 3, or a single vertex
  std::vector<ReductionStep> steps;
};

/// Deletes vertices of degree <= 1 and suppresses vertices of degree 2,
/// always the smallest such vertex id, until none is left or one vertex remains.
Reduction reduce_min_degree3(const Multigraph& g);

/// Replays the log backwards: each removed vertex becomes a leaf node next to
/// the node holding its anchor.
TreeCutDecomposition lift_reduction(const Multigraph& g, const Reduction& r, const TreeCutDecomposition& reduced);

struct SplitNode {
  Multigraph input;     // graph handed to this node
  Reduction reduction;  // input -> reduction.graph
  // Set when reduction.graph had a cut of size <= 2.
  std::optional<EdgeCut> cut;
  int child_a = -1, child_b = -1;
  std::string marker_b;  // stands for side B in child A's input
  std::string marker_a;  // stands for side A in child B's input
  bool is_piece() const { return !cut.has_value(); }
};

struct SplitTree {
  std::vector<SplitNode> nodes;  // node 0 is the root
  std::vector<int> pieces;       // leaves in creation order
};

/// Splits along minimum cuts of size <= 2 after reducing every side; pieces
/// are single vertices or 3-edge-connected with minimum degree 3.
SplitTree split_3ec(const Multigraph& g);

/// Lifts one decomposition per piece (keyed by node index, on that node's
/// reduction.graph) to a decomposition of the root input.
TreeCutDecomposition lift_split(const SplitTree& t, const std::map<int, TreeCutDecomposition>& pieces);

}  // namespace thinwall
