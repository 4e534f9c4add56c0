#pragma once

// alpha-thin and almost-alpha-thin graphs.
//
// An enumeration v_1..v_n is alpha-thin when, for every i, at most alpha edges
// join {v_1..v_{i-1}} and {v_{i+1}..v_n}. Edges at v_i itself never count;
// that is what separates thinness from cutwidth (a path with heavy parallel
// edges is 0-thin).

#include <cstdint>
#include <optional>
#include <vector>

#include "thinwall/multigraph.hpp"

namespace thinwall {

inline constexpr int kDefaultThinCap = 20;

struct ThinOrdering {
  std::vector<Vertex> order;
  std::int64_t alpha = 0;  // max of jump_profile
  std::vector<std::int64_t> jump_profile;
};

struct AlmostThinWitness {
  VertexSet deleted;            // X, in the host graph
  std::vector<Vertex> order;    // enumeration of G - X, host vertex ids
  std::vector<std::int64_t> jump_profile;
};

struct AlmostThinResult {
  std::optional<AlmostThinWitness> witness;
  std::uint64_t candidates_tried = 0;  // deletion sets examined
  std::uint64_t candidates_total = 0;  // size of the deletion-set search space
};

std::vector<std::int64_t> jump_profile(const Multigraph& g, const std::vector<Vertex>& order);

/// Minimum alpha over all enumerations, with the lexicographically least
/// optimal enumeration. Subset DP over prefixes; throws CapExceeded beyond cap.
ThinOrdering min_thinness(const Multigraph& g, int cap = kDefaultThinCap);

/// Lexicographically least alpha-thin enumeration, or nullopt (exact).
std::optional<ThinOrdering> is_alpha_thin(const Multigraph& g, std::int64_t alpha, int cap = kDefaultThinCap);

/// Deletion sets range over vertices with at most alpha distinct neighbours,
/// smallest sets first, lexicographic within a size.
AlmostThinResult is_almost_alpha_thin(const Multigraph& g, std::int64_t alpha, int cap = kDefaultThinCap);

/// Smallest alpha >= 0 for which g is almost-alpha-thin, with its witness.
std::pair<std::int64_t, AlmostThinWitness> min_almost_thinness(const Multigraph& g, int cap = kDefaultThinCap);

/// Checks a witness against the definition without trusting the search.
bool valid_almost_thin_witness(const Multigraph& g, std::int64_t alpha, const AlmostThinWitness& w);

struct SuppressionReport {
  std::int64_t thin_before = 0, thin_after = 0;
  std::int64_t almost_before = 0, almost_after = 0;
  bool holds() const { return thin_after <= thin_before && almost_after <= almost_before; }
};

/// Compares both minimal parameters before and after suppressing a degree-2 vertex.
SuppressionReport check_suppression_preserves(const Multigraph& g, Vertex v, int cap = kDefaultThinCap);

}  // namespace thinwall
