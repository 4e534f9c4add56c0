#pragma once

// Exact tree-width by branch and bound over elimination orderings, and the
// conversion of tree-decompositions into tree-cut decompositions.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thinwall/multigraph.hpp"
#include "thinwall/treecut.hpp"

namespace thinwall {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree;  // edges between bag indices
  int width() const;
};

/// Empty when valid: a tree, every vertex and edge covered, each vertex's bags connected.
std::vector<std::string> validate_td(const Multigraph& g, const TreeDecomposition& td);

/// Width of the elimination ordering (largest higher neighbourhood in the fill-in graph).
int elimination_width(const Multigraph& g, const std::vector<Vertex>& order);
TreeDecomposition td_from_elimination(const Multigraph& g, const std::vector<Vertex>& order);

struct TreewidthResult {
  int width = 0;
  std::vector<Vertex> order;
  TreeDecomposition td;
  std::uint64_t nodes = 0;
};

constexpr int kDefaultTreewidthCap = 30;

/// Multiplicities are ignored. Throws CapExceeded above `cap` vertices.
TreewidthResult exact_treewidth(const Multigraph& g, int cap = kDefaultTreewidthCap);

/// A bound promised by the conversion did not hold.
class ConstructionDefect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TdToTcdReport {
  TreeCutDecomposition tcd;
  int width = 0;
  int max_degree = 0;
  std::int64_t adhesion = 0;
  std::int64_t adhesion_bound = 0;  // (2w+2) * max degree
  int torso_max = 0;                // largest torso vertex count
  int torso_bound = 0;              // (max degree + 1)(w + 1)
};

/// Roots the tree at bag 0 and puts each vertex in the root-most bag holding
/// it; subtrees with no vertices are dropped. Both bounds are checked and a
/// ConstructionDefect is thrown when one fails.
TdToTcdReport td_to_tcd(const Multigraph& g, const TreeDecomposition& td);

}  // namespace thinwall
