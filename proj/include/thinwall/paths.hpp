#pragma once

// Menger-style path packing on multigraphs via unit augmenting paths.

#include <optional>
#include <vector>

#include "thinwall/multigraph.hpp"

namespace thinwall {

/// Vertex sequence; consecutive vertices are adjacent. A single vertex is a
/// trivial path.
using Path = std::vector<Vertex>;

struct EdgePacking {
  std::vector<Path> paths;     // filled when k paths exist
  std::optional<EdgeCut> cut;  // absence witness: |cut| < k, A on the `side`
  bool found() const { return !cut.has_value(); }
};

struct VertexPacking {
  std::vector<Path> paths;
  std::optional<VertexSet> separator;  // |X| < k, meets every A-B path
  bool found() const { return !separator.has_value(); }
};

/// k pairwise edge-disjoint A-B paths (each meets A only in its first and B
/// only in its last vertex), or a cut of size < k separating A from B.
EdgePacking edge_disjoint_paths(const Multigraph& g, const VertexSet& a, const VertexSet& b, int k);

/// k pairwise vertex-disjoint A-B paths, or a vertex set of size < k meeting
/// all A-B paths.
VertexPacking vertex_disjoint_paths(const Multigraph& g, const VertexSet& a, const VertexSet& b, int k);

/// k internally vertex-disjoint u-v paths (parallel uv edges count as separate
/// paths), or the vertex separator of a minimum cut when fewer exist.
VertexPacking internally_disjoint_paths(const Multigraph& g, Vertex u, Vertex v, int k);

/// Like edge_disjoint_paths, but vertices in `capped` lie on at most one path
/// in total. A and B must be subsets of `capped` for distinct endpoints.
EdgePacking edge_disjoint_paths_capped(const Multigraph& g, const VertexSet& a, const VertexSet& b, int k,
                                       const VertexSet& capped);

/// Maximum number of internally disjoint paths from `centre` to distinct
/// vertices of `targets` (a fan). Returns the paths of a maximum fan.
std::vector<Path> max_fan(const Multigraph& g, Vertex centre, const VertexSet& targets);

/// True if the paths use every vertex pair no more often than its multiplicity.
bool respects_multiplicity(const Multigraph& g, const std::vector<Path>& paths);
bool is_path(const Multigraph& g, const Path& p);

}  // namespace thinwall
