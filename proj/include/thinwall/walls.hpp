#pragma once

// Walls W_ell: the ell x 2ell grid (columns 1..2ell, rows 1..ell) with every
// other vertical rung removed and the two arising degree-1 corners deleted.
// Vertex labels are "(c,r)".

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thinwall/multigraph.hpp"
#include "thinwall/paths.hpp"

namespace thinwall {

struct Wall {
  int ell = 0;
  Multigraph graph;
  std::vector<std::pair<int, int>> coord;  // (column, row) per vertex

  std::optional<Vertex> at(int column, int row) const;
};

struct WallPathSystem {
  std::vector<Path> vertical;    // V_j: columns 2j-1 and 2j
  std::vector<Path> horizontal;  // H_j: row j
};

std::string wall_label(int column, int row);

Wall build_wall(int ell);

/// Recovers a wall from a graph whose labels are "(c,r)" (e.g. read from JSON).
Wall wall_from_graph(const Multigraph& g);

WallPathSystem path_system(const Wall& w);

/// The degree-3 vertices of the top row; |Z| = ell - 2.
VertexSet well_linked_set(const Wall& w);

struct LinkageViolation {
  VertexSet a, b;
  VertexSet separator;  // |separator| < |a|
};

struct WellLinkedReport {
  bool certified = false;
  bool exhaustive = true;
  std::size_t pairs_checked = 0;
  std::size_t pairs_total = 0;  // 0 when sampling
  std::optional<LinkageViolation> violation;
  // One path system per checked (A, B) pair, in enumeration order.
  std::vector<std::vector<Path>> systems;
};

/// Checks every pair of disjoint equal-size subsets A, B of z for |A|
/// vertex-disjoint A-B paths when |z| <= exhaustive_cap; otherwise checks
/// `samples` random pairs drawn from `seed`.
WellLinkedReport certify_well_linked(const Multigraph& g, const VertexSet& z, int exhaustive_cap = 8,
                                     std::size_t samples = 200, unsigned seed = 1);

struct PairViolation {
  Vertex u, v;
  VertexSet separator;
};

struct ThreeConnectedReport {
  bool certified = false;
  std::size_t pairs_checked = 0;
  std::optional<PairViolation> violation;
  std::vector<std::vector<Path>> systems;  // 3 internally disjoint u-v paths per pair
};

/// Every pair of z joined by three internally vertex-disjoint paths.
ThreeConnectedReport certify_three_connected_pairs(const Multigraph& g, const VertexSet& z);

}  // namespace thinwall
