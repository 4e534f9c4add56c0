#pragma once

// Star-comb and excluded-star finders used by the synthesis pipeline.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinwall/multigraph.hpp"
#include "thinwall/paths.hpp"

namespace thinwall {

/// Subdivided star: paths from the centre, disjoint apart from it, ending at distinct leaves in U.
struct StarWitness {
  Vertex centre = 0;
  std::vector<Path> legs;
};

/// Comb: a spine path and disjoint legs meeting the spine exactly in their
/// first vertex; the last vertex of each leg is a tooth in U. Legs may be trivial.
struct CombWitness {
  Path spine;
  std::vector<Path> legs;  // ordered along the spine
};

std::optional<std::string> check_star(const Multigraph& g, const VertexSet& u, int s, const StarWitness& w);
std::optional<std::string> check_comb(const Multigraph& g, const VertexSet& u, int t, const CombWitness& w);

struct StarCombResult {
  std::optional<StarWitness> star;
  std::optional<CombWitness> comb;
  bool exhaustive = true;  // false when the spine search ran out of budget
  bool neither() const { return !star && !comb; }
};

/// Exact for stars (a fan from each centre). Combs are searched over maximal
/// spines, a superset spine never carrying fewer teeth.
StarCombResult find_star_or_comb(const Multigraph& g, const VertexSet& u, int s, int t,
                                 std::uint64_t budget = 2'000'000);

/// Connected set with at least k distinct neighbours: a K_{1,k} minor.
struct StarMinorWitness {
  VertexSet branch;
  VertexSet neighbours;
};

struct LinearForestCover {
  VertexSet x;
  std::vector<Path> paths;  // components of g - x, each from its smaller end
};

struct CoverResult {
  std::optional<LinearForestCover> cover;
  std::optional<StarMinorWitness> minor;
};

constexpr int kDefaultCoverCap = 40;

/// Smallest set whose deletion leaves a disjoint union of paths.
VertexSet min_linear_forest_deletion(const Multigraph& g);

/// Minor witness if one exists; otherwise an optimal cover, whose size is
/// checked against 4k (a ConstructionDefect-style runtime_error otherwise).
CoverResult linear_forest_cover(const Multigraph& g, int k, int cap = kDefaultCoverCap);

std::optional<StarMinorWitness> find_star_minor(const Multigraph& g, int k, int cap = kDefaultCoverCap);

}  // namespace thinwall
