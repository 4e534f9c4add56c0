#pragma once

// Strong and weak immersions. A strong immersion of H in G maps V(H)
// injectively to V(G) and each edge of H to a path of G between the images
// of its ends; the paths are pairwise edge-disjoint (up to multiplicity) and,
// in strong mode, avoid all branch vertices internally.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "thinwall/multigraph.hpp"
#include "thinwall/paths.hpp"
#include "thinwall/treecut.hpp"

namespace thinwall {

enum class ImmersionMode { Strong, Weak };

struct RoutedEdge {
  Vertex hu = 0, hv = 0;  // edge of H (one copy of a parallel class)
  Path path;              // from branch[hu] to branch[hv] in G
};

struct ImmersionEmbedding {
  ImmersionMode mode = ImmersionMode::Strong;
  std::vector<Vertex> branch;     // H vertex -> G vertex
  std::vector<RoutedEdge> paths;  // one per edge copy of H
};

/// Empty when `e` is a valid immersion of h in g in its mode, otherwise the first problem found.
std::optional<std::string> check_embedding(const Multigraph& h, const Multigraph& g, const ImmersionEmbedding& e);

enum class SearchStatus { Present, Absent, Inconclusive };

struct ImmersionOptions {
  int max_pattern = 20;
  int max_host = 40;
  std::uint64_t node_budget = 50'000'000;
  double timeout_seconds = 600.0;
};

struct ImmersionResult {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<ImmersionEmbedding> embedding;
  std::uint64_t nodes = 0;
  std::string reason;  // why absent/inconclusive, e.g. "degree filter"
};

ImmersionResult find_immersion(const Multigraph& h, const Multigraph& g, ImmersionMode mode,
                               const ImmersionOptions& opts = {});

/// e2 o e1 for e1: H -> G and e2: G -> K. Strong composed with strong is strong.
ImmersionEmbedding compose(const Multigraph& h, const Multigraph& g, const ImmersionEmbedding& e1,
                           const Multigraph& k, const ImmersionEmbedding& e2);

/// S_{k,n}: hub "x" (vertex 0) and "v1".."vn", each joined to the hub by k parallel edges.
Multigraph spider_graph(int k, int n);

/// P_n * v: path "p0".."pn" with n edges plus apex "v" (the last vertex) adjacent to all of it.
Multigraph apex_path(int n);

/// Greedy strong embedding of h into S_{k,n}: vertex i goes to v_{i+1}, an
/// edge uw to v_u - x - v_w.
ImmersionEmbedding embed_in_spider(const Multigraph& h, int k, int n);

struct SpiderSubdivision {
  int k = 0;
  Multigraph host;           // P_{3k-1} * v
  Vertex hub = 0;
  std::vector<Vertex> leaves;             // one per spider leaf
  std::vector<std::vector<Path>> legs;    // legs[i]: 3 hub-to-leaf paths
};

/// The S_{3,k} subdivision in P_{3k-1} * v obtained by deleting every third path edge.
SpiderSubdivision apex_to_spider_subdivision(int k);

/// Checks that the legs form a subdivision of S_{3,n} in `host`: internally
/// vertex-disjoint hub-leaf paths, three per leaf, avoiding hub and leaves inside.
std::optional<std::string> check_spider_subdivision(const Multigraph& host, Vertex hub, const std::vector<Vertex>& leaves,
                                                    const std::vector<std::vector<Path>>& legs);

/// Reads a subdivision of S_{3,n} as a strong immersion of spider_graph(3, n).
ImmersionEmbedding subdivision_immersion(const SpiderSubdivision& s);

struct PropertyStarReport {
  bool holds = true;
  bool exhaustive = true;
  std::size_t pairs_checked = 0;
  std::optional<VertexSet> fail_a, fail_b;
  std::optional<EdgeCut> cut;  // side of a blocking cut when one was found
};

/// For disjoint A, B of zU with |A| = |B| = k: k edge-disjoint A-B paths
/// through each vertex of U at most once in total. Exhaustive for |zU| <= 6,
/// otherwise `samples` random pairs.
PropertyStarReport verify_property_star(const Multigraph& g, const VertexSet& zU, const VertexSet& u,
                                        std::size_t samples = 200, unsigned seed = 1);

/// A hypothesis of the orientation argument does not hold for the input.
class HypothesisFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TerminalOrientation {
  std::map<TreeEdge, Node> head;  // each tree edge points to this endpoint
  Node sink = 0;
};

/// Orients each tree edge towards the side holding at least alpha+1 terminals.
TerminalOrientation orient_by_terminals(const Multigraph& g, const TreeCutDecomposition& d, const VertexSet& zU,
                                        std::int64_t alpha);

nlohmann::json embedding_to_json(const Multigraph& h, const Multigraph& g, const ImmersionEmbedding& e);

}  // namespace thinwall
