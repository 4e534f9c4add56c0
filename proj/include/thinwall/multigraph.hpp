#pragma once

// Loopless multigraphs with multiplicity counters on unordered vertex pairs.
//
// Vertices are dense indices 0..n-1 carrying unique string labels. Every
// operation that removes or merges vertices returns a new graph and keeps the
// labels of surviving vertices, so labels are the stable identity across
// derived graphs. Ties are always broken by vertex index.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace thinwall {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate free

/// A desk-scale size cap was exceeded; the answer is unknown, not negative.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex u;
  Vertex v;
  int mult;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::vector<std::string> labels);

  /// Edgeless graph on n vertices labelled "0".."n-1".
  static Multigraph with_vertices(int n);

  Vertex add_vertex(std::string label);
  /// Adds `mult` parallel copies of uv. Loops are rejected.
  void add_edge(Vertex u, Vertex v, int mult = 1);
  /// Sets the multiplicity of uv (0 removes the pair).
  void set_multiplicity(Vertex u, Vertex v, int mult);

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  std::int64_t num_edges() const { return edge_total_; }
  bool contains(Vertex v) const { return v >= 0 && v < num_vertices(); }

  int multiplicity(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  int neighbour_count(Vertex v) const;
  const std::map<Vertex, int>& adjacency(Vertex v) const;
  int max_degree() const;

  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  Vertex at(std::string_view label) const;

  /// All pairs with positive multiplicity, u < v, sorted.
  std::vector<Edge> edges() const;

  /// Equality of labelled multigraphs: same label set and the same
  /// multiplicity on every label pair, independent of vertex order.
  bool same_labelled(const Multigraph& other) const;

 private:
  void check(Vertex v) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::map<Vertex, int>> adj_;
  std::int64_t edge_total_ = 0;
};

struct EdgeCut {
  VertexSet side;
  std::vector<Edge> crossing;
  std::int64_t size = 0;
};

struct ContractResult {
  Multigraph graph;
  std::vector<Vertex> vertex_of_part;  // part index -> new vertex
  std::vector<Vertex> part_of_vertex;  // old vertex -> part index
};

struct SubgraphResult {
  Multigraph graph;
  std::vector<Vertex> old_of_new;
  std::vector<Vertex> new_of_old;  // -1 for removed vertices
};

// Set helpers.
VertexSet make_set(std::vector<Vertex> vs);
bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet all_vertices(const Multigraph& g);

int degree(const Multigraph& g, Vertex v);

/// All edges with exactly one end in `a`, with multiplicity.
EdgeCut edge_cut(const Multigraph& g, const VertexSet& a);

/// One vertex per part; cross-part multiplicities summed, intra-part edges
/// dropped. Part labels default to the label of the part's smallest member.
ContractResult contract(const Multigraph& g, const std::vector<VertexSet>& parts,
                        const std::vector<std::string>& part_labels = {});

/// Removes a degree-2 vertex; joins its two neighbours, or drops the arising
/// loop when both edges lead to the same neighbour.
Multigraph suppress(const Multigraph& g, Vertex v);

SubgraphResult remove_vertices(const Multigraph& g, const VertexSet& drop);
SubgraphResult induced_subgraph(const Multigraph& g, const VertexSet& keep);

/// Global minimum edge cut (Stoer-Wagner). Disconnected graphs yield a
/// size-0 cut whose side is the component of vertex 0.
EdgeCut min_edge_cut(const Multigraph& g);

std::vector<VertexSet> components(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Vertex classes of the graph after deleting all bridges.
std::vector<VertexSet> two_edge_connected_classes(const Multigraph& g);

/// Same vertex set, every multiplicity set to 1.
Multigraph underlying_simple(const Multigraph& g);

}  // namespace thinwall
