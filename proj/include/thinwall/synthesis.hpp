#pragma once

// End-to-end construction: either a tree-cut decomposition certified at the
// smallest passing alpha, or a strong immersion of the wall W_ell.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thinwall/immersion.hpp"
#include "thinwall/multigraph.hpp"
#include "thinwall/parameters.hpp"
#include "thinwall/structures.hpp"
#include "thinwall/treecut.hpp"
#include "thinwall/treewidth.hpp"

namespace thinwall {

/// Simple graph A on V(g): uv is an edge iff g has more than `threshold` uv edges.
struct AuxiliaryGraph {
  Multigraph a;
  std::vector<VertexSet> components;
  std::int64_t threshold = 0;
};

AuxiliaryGraph build_auxiliary(const Multigraph& g, const Parameters& params);
AuxiliaryGraph build_auxiliary(const Multigraph& g, std::int64_t threshold);

struct WallWitness {
  std::string route;  // "direct-search", "degree", "star-minor", "comb", "apex-path"
  ImmersionEmbedding embedding;  // of build_wall(ell).graph in the input graph
};

struct SynthesisOptions {
  ExternalConstants constants;
  bool direct_search = true;  // try find_immersion(W_ell, g) first
  ImmersionOptions search{};
  int thin_cap = kDefaultThinCap;
  int treewidth_cap = kDefaultTreewidthCap;
};

/// What happened to one 3-edge-connected piece.
struct PieceReport {
  int split_node = 0;
  int vertices = 0;
  int contracted_vertices = 0;  // after contracting components of A
  int treewidth = 0;
  int max_degree = 0;
  std::int64_t adhesion = 0;
  std::int64_t adhesion_bound = 0;
  int torso_max = 0;
  int torso_bound = 0;
  bool torsos_equal_centres = true;
  // The constructive witness per node: deletion set from linear-forest covers
  // and the interval enumeration; its almost-thin parameter is reported here.
  std::int64_t constructive_alpha = 0;
};

struct SynthesisResult {
  enum class Outcome { Certificate, Wall, Partial } outcome = Outcome::Partial;
  Parameters params;
  std::optional<TreeCutDecomposition> decomposition;
  std::optional<WidthCertificate> certificate;
  std::int64_t instance_alpha = 0;
  std::optional<WallWitness> wall;
  std::vector<PieceReport> pieces;
  std::vector<std::string> trace;
};

SynthesisResult synthesize(const Multigraph& g, int ell, const SynthesisOptions& opts = {});

/// W_ell in g from a vertex joined to 2 ell^2 others by at least 3 edges each.
ImmersionEmbedding wall_from_spider(const Multigraph& g, int ell, Vertex centre, const VertexSet& leaves);

/// W_ell in g from an immersion of P_{6 ell^2 - 1} * v given by the apex, the
/// 6 ell^2 path vertices in order, routes between consecutive ones and routes
/// from the apex to each.
ImmersionEmbedding wall_from_apex_path(const Multigraph& g, int ell, Vertex apex, const std::vector<Vertex>& teeth,
                                       const std::vector<Path>& between, const std::vector<Path>& from_apex);

nlohmann::json synthesis_to_json(const Multigraph& g, const SynthesisResult& r);

}  // namespace thinwall
