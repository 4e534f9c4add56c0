#pragma once

// Tree-cut decompositions: a tree whose nodes carry a near-partition of V(G).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thinwall/multigraph.hpp"
#include "thinwall/thinness.hpp"

namespace thinwall {

using Node = int;
using TreeEdge = std::pair<Node, Node>;  // stored with first < second

struct TreeCutDecomposition {
  std::vector<TreeEdge> tree;    // nodes are 0..parts.size()-1
  std::vector<VertexSet> parts;  // X_t, possibly empty

  int num_nodes() const { return static_cast<int>(parts.size()); }
  std::vector<std::vector<Node>> tree_adjacency() const;
  /// Nodes on the side of `from` after deleting the tree edge {from, to}.
  std::vector<Node> side(Node from, Node to) const;
  /// Union of the parts of `nodes`.
  VertexSet union_of(const std::vector<Node>& nodes) const;
  /// Node whose part contains v, or -1.
  Node node_of(Vertex v) const;
};

/// Every vertex of g in its own decomposition with a single node.
TreeCutDecomposition trivial_decomposition(const Multigraph& g);

/// Empty when valid; otherwise one message per violation.
std::vector<std::string> validate(const Multigraph& g, const TreeCutDecomposition& d);

struct AdhesionReport {
  std::int64_t max = 0;
  std::map<TreeEdge, std::int64_t> per_edge;
};

AdhesionReport adhesion(const Multigraph& g, const TreeCutDecomposition& d);

struct Torso {
  Multigraph graph;
  Node node = 0;
  VertexSet core;                     // torso ids of X_t
  std::map<Vertex, Node> peripheral;  // torso id -> neighbouring tree node whose branch it stands for
  std::vector<Vertex> torso_of;       // original vertex -> torso id
};

/// Label used for the peripheral vertex of node t towards neighbour s.
std::string peripheral_label(Node t, Node s);

Torso torso(const Multigraph& g, const TreeCutDecomposition& d, Node t);

struct ThreeCentre {
  Multigraph graph;     // labels are those of the reduced graph
  VertexSet protected_;  // ids in `graph`
};

/// Maximal deletion of degree <= 1 and suppression of degree-2 vertices
/// outside `protected_set`. Picks the smallest candidate each step, or a
/// uniformly random one when `rng` is given; the result does not depend on it.
ThreeCentre three_centre(const Multigraph& h, const VertexSet& protected_set, std::mt19937* rng = nullptr);

/// How each torso is reduced before the almost-thinness test.
enum class CentreMode {
  ThreeCentre,             // 3-centre protecting the core
  Torso,                   // the raw torso
  PeripheralLeafDeletion,  // only repeatedly delete peripheral vertices of degree <= 1
};

struct NodeCertificate {
  Node node = 0;
  Multigraph reduced;  // the 3-centre (or the mode's stand-in)
  AlmostThinWitness witness;  // vertex ids in `reduced`
};

struct WidthCertificate {
  std::int64_t alpha = 0;
  AdhesionReport adhesion;
  std::vector<NodeCertificate> nodes;
};

struct WidthViolation {
  enum class Kind { Invalid, Adhesion, Torso } kind = Kind::Invalid;
  std::optional<TreeEdge> edge;
  std::optional<Node> node;
  std::string detail;
};

struct CertifyResult {
  std::optional<WidthCertificate> certificate;
  std::optional<WidthViolation> violation;
  bool ok() const { return certificate.has_value(); }
};

Multigraph reduce_torso(const Torso& t, CentreMode mode);

/// Adhesion at most alpha and every reduced torso almost-alpha-thin. The first
/// violation found (edges first, then nodes in order) is reported.
CertifyResult certify_width(const Multigraph& g, const TreeCutDecomposition& d, std::int64_t alpha,
                            CentreMode mode = CentreMode::ThreeCentre, int cap = kDefaultThinCap);

/// Independent re-check of a certificate.
bool check_certificate(const Multigraph& g, const TreeCutDecomposition& d, const WidthCertificate& c,
                       CentreMode mode = CentreMode::ThreeCentre);

/// Joins a decomposition of gA (with marker b standing for V(gB) - a) and one
/// of gB (with marker a standing for V(gA) - b) into a decomposition of g.
/// Vertices are matched by label. dA's nodes keep their ids; dB's are shifted.
TreeCutDecomposition glue(const Multigraph& g, const Multigraph& gA, const TreeCutDecomposition& dA,
                          const Multigraph& gB, const TreeCutDecomposition& dB, Vertex b, Vertex a);

/// Adds a new leaf node holding {v} next to `parent`; returns its id.
Node attach_leaf(TreeCutDecomposition& d, Node parent, Vertex v);

/// All unlabelled trees on exactly n nodes, one edge list each (canonical representatives).
std::vector<std::vector<TreeEdge>> free_trees(int n);

struct TcdSearchStats {
  std::uint64_t assignments = 0;  // complete, normalised assignments examined
  std::uint64_t trees = 0;
};

/// Calls f for every decomposition over at most max_nodes nodes (on
/// unlabelled trees) with leaves nonempty, no two adjacent empty parts and
/// adhesion at most max_adhesion. Stops when f returns true; returns whether
/// it did.
bool enumerate_tcds(const Multigraph& g, int max_nodes, std::int64_t max_adhesion,
                    const std::function<bool(const TreeCutDecomposition&)>& f, TcdSearchStats* stats = nullptr);

/// {"tree": [[s, t], ...], "parts": {"t": [labels...]}}.
nlohmann::json tcd_to_json(const Multigraph& g, const TreeCutDecomposition& d);
TreeCutDecomposition tcd_from_json(const Multigraph& g, const nlohmann::json& j);

nlohmann::json certificate_to_json(const WidthCertificate& c);

}  // namespace thinwall
