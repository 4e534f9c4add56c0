#include "thinwall/thinness.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace thinwall {

std::vector<std::int64_t> jump_profile(const Multigraph& g, const std::vector<Vertex>& order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) throw GraphError("jump_profile: not a permutation");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!g.contains(order[i]) || pos[order[i]] != -1) throw GraphError("jump_profile: not a permutation");
    pos[order[i]] = i;
  }
  // An edge at positions p < q is counted at every i strictly between them.
  std::vector<std::int64_t> diff(n + 1, 0);
  for (const Edge& e : g.edges()) {
    int p = std::min(pos[e.u], pos[e.v]), q = std::max(pos[e.u], pos[e.v]);
    if (q - p >= 2) {
      diff[p + 1] += e.mult;
      diff[q] -= e.mult;
    }
  }
  std::vector<std::int64_t> out(n);
  std::int64_t run = 0;
  for (int i = 0; i < n; ++i) out[i] = run += diff[i];
  return out;
}

namespace {

// Prefix DP tables for one graph.
struct PrefixTables {
  int n = 0;
  std::vector<std::uint32_t> nbr;          // neighbour bitmask
  std::vector<std::vector<std::int64_t>> w;  // multiplicities
  std::vector<std::int64_t> cut;           // |E(S, V - S)|
  std::vector<std::int64_t> best;          // best max-jump over completions of prefix S

  std::int64_t weight_into(std::uint32_t s, int v) const {
    std::int64_t acc = 0;
    for (std::uint32_t m = s & nbr[v]; m; m &= m - 1) acc += w[std::countr_zero(m)][v];
    return acc;
  }
};

PrefixTables build_tables(const Multigraph& g, int cap) {
  const int n = g.num_vertices();
  if (n > cap || n > 30)
    throw CapExceeded("thinness: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  PrefixTables t;
  t.n = n;
  t.nbr.assign(n, 0);
  t.w.assign(n, std::vector<std::int64_t>(n, 0));
  for (const Edge& e : g.edges()) {
    t.w[e.u][e.v] = t.w[e.v][e.u] = e.mult;
    t.nbr[e.u] |= 1u << e.v;
    t.nbr[e.v] |= 1u << e.u;
  }
  const std::uint32_t full = n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1);
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::int64_t> deg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) deg[v] += t.w[v][u];
  t.cut.assign(states, 0);
  for (std::size_t s = 1; s < states; ++s) {
    int v = std::countr_zero(static_cast<std::uint32_t>(s));
    std::uint32_t rest = static_cast<std::uint32_t>(s) & (static_cast<std::uint32_t>(s) - 1);
    t.cut[s] = t.cut[rest] + deg[v] - 2 * t.weight_into(rest, v);
  }
  t.best.assign(states, std::numeric_limits<std::int64_t>::max());
  t.best[full] = 0;
  for (std::size_t si = states - 1; si-- > 0;) {
    std::uint32_t s = static_cast<std::uint32_t>(si);
    std::int64_t b = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t m = full & ~s; m; m &= m - 1) {
      int v = std::countr_zero(m);
      std::int64_t jump = t.cut[s] - t.weight_into(s, v);
      b = std::min(b, std::max(jump, t.best[s | (1u << v)]));
    }
    t.best[s] = b;
  }
  return t;
}

ThinOrdering greedy_order(const Multigraph& g, const PrefixTables& t, std::int64_t alpha) {
  ThinOrdering o;
  std::uint32_t s = 0;
  for (int i = 0; i < t.n; ++i) {
    for (int v = 0; v < t.n; ++v) {
      if (s >> v & 1u) continue;
      std::int64_t jump = t.cut[s] - t.weight_into(s, v);
      if (std::max(jump, t.best[s | (1u << v)]) <= alpha) {
        o.order.push_back(v);
        s |= 1u << v;
        break;
      }
    }
  }
  o.jump_profile = jump_profile(g, o.order);
  o.alpha = o.jump_profile.empty() ? 0 : *std::max_element(o.jump_profile.begin(), o.jump_profile.end());
  return o;
}

}  // namespace

ThinOrdering min_thinness(const Multigraph& g, int cap) {
  auto t = build_tables(g, cap);
  return greedy_order(g, t, t.best[0]);
}

std::optional<ThinOrdering> is_alpha_thin(const Multigraph& g, std::int64_t alpha, int cap) {
  auto t = build_tables(g, cap);
  if (t.best[0] > alpha) return std::nullopt;
  return greedy_order(g, t, alpha);
}

AlmostThinResult is_almost_alpha_thin(const Multigraph& g, std::int64_t alpha, int cap) {
  const int n = g.num_vertices();
  if (n > cap) throw CapExceeded("almost-thinness: " + std::to_string(n) + " vertices exceeds cap " +
                                 std::to_string(cap));
  AlmostThinResult res;
  VertexSet eligible;
  for (Vertex v = 0; v < n; ++v)
    if (g.neighbour_count(v) <= alpha) eligible.push_back(v);
  const int m = static_cast<int>(eligible.size());
  const int max_size = static_cast<int>(std::min<std::int64_t>(alpha, m));

  auto binom = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  for (int k = 0; k <= max_size; ++k) res.candidates_total += binom(m, k);

  for (int k = 0; k <= max_size; ++k) {
    // Lexicographic k-subsets of `eligible`.
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      VertexSet x;
      for (int i : idx) x.push_back(eligible[i]);
      ++res.candidates_tried;
      auto sub = remove_vertices(g, x);
      if (auto o = is_alpha_thin(sub.graph, alpha, cap)) {
        AlmostThinWitness w;
        w.deleted = x;
        for (Vertex v : o->order) w.order.push_back(sub.old_of_new[v]);
        w.jump_profile = o->jump_profile;
        res.witness = std::move(w);
        return res;
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return res;
}

std::pair<std::int64_t, AlmostThinWitness> min_almost_thinness(const Multigraph& g, int cap) {
  // Monotone in alpha; the plain thinness bounds it from above.
  std::int64_t hi = min_thinness(g, cap).alpha;
  std::int64_t lo = 0;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (is_almost_alpha_thin(g, mid, cap).witness)
      hi = mid;
    else
      lo = mid + 1;
  }
  return {lo, *is_almost_alpha_thin(g, lo, cap).witness};
}

bool valid_almost_thin_witness(const Multigraph& g, std::int64_t alpha, const AlmostThinWitness& w) {
  if (static_cast<std::int64_t>(w.deleted.size()) > alpha) return false;
  for (Vertex x : w.deleted)
    if (!g.contains(x) || g.neighbour_count(x) > alpha) return false;
  auto sub = remove_vertices(g, make_set(w.deleted));
  if (static_cast<int>(w.order.size()) != sub.graph.num_vertices()) return false;
  std::vector<Vertex> local;
  for (Vertex v : w.order) {
    if (!g.contains(v) || sub.new_of_old[v] == -1) return false;
    local.push_back(sub.new_of_old[v]);
  }
  try {
    auto prof = jump_profile(sub.graph, local);
    return std::all_of(prof.begin(), prof.end(), [&](std::int64_t j) { return j <= alpha; });
  } catch (const GraphError&) {
    return false;
  }
}

SuppressionReport check_suppression_preserves(const Multigraph& g, Vertex v, int cap) {
  Multigraph h = suppress(g, v);
  SuppressionReport r;
  r.thin_before = min_thinness(g, cap).alpha;
  r.thin_after = min_thinness(h, cap).alpha;
  r.almost_before = min_almost_thinness(g, cap).first;
  r.almost_after = min_almost_thinness(h, cap).first;
  return r;
}

}  // namespace thinwall
