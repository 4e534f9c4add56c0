#pragma once

// Brute-force reference implementations used only by tests. Each one follows
// the textbook definition directly and shares no code with the library search.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "thinwall/multigraph.hpp"
#include "thinwall/paths.hpp"

namespace oracle {

using thinwall::Multigraph;
using thinwall::Vertex;
using thinwall::VertexSet;

inline Multigraph random_multigraph(int n, double p, int max_mult, std::mt19937& rng) {
  Multigraph g = Multigraph::with_vertices(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> mult(1, max_mult);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v, mult(rng));
  return g;
}

inline Multigraph random_connected_multigraph(int n, double p, int max_mult, std::mt19937& rng) {
  Multigraph g = random_multigraph(n, p, max_mult, rng);
  std::uniform_int_distribution<int> mult(1, max_mult);
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    if (g.multiplicity(u, v) == 0) g.add_edge(u, v, mult(rng));
  }
  return g;
}

inline std::int64_t count_cut(const Multigraph& g, const std::vector<char>& in_a) {
  std::int64_t c = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v = u + 1; v < g.num_vertices(); ++v)
      if (in_a[u] != in_a[v]) c += g.multiplicity(u, v);
  return c;
}

/// Minimum over all bipartitions into two nonempty sides.
inline std::int64_t min_cut_bruteforce(const Multigraph& g) {
  const int n = g.num_vertices();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<char> in(n, 0);
    for (int i = 0; i < n - 1; ++i) in[i] = (mask >> i) & 1u;
    best = std::min(best, count_cut(g, in));
  }
  return best;
}

/// Minimum edge cut separating A from B (A on one side, B on the other).
inline std::int64_t ab_cut_bruteforce(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
  const int n = g.num_vertices();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<char> in(n, 0);
    bool ok = true;
    for (int i = 0; i < n; ++i) in[i] = (mask >> i) & 1u;
    for (Vertex v : a) ok = ok && in[v];
    for (Vertex v : b) ok = ok && !in[v];
    if (ok) best = std::min(best, count_cut(g, in));
  }
  return best;
}

/// Thinness by trying every permutation.
inline std::int64_t thinness_bruteforce(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    std::int64_t worst = 0;
    for (int i = 0; i < n; ++i) {
      std::int64_t c = 0;
      for (int p = 0; p < i; ++p)
        for (int q = i + 1; q < n; ++q) c += g.multiplicity(perm[p], perm[q]);
      worst = std::max(worst, c);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0 : best;
}

/// Almost-thinness by trying every admissible deletion set and every permutation.
inline bool almost_thin_bruteforce(const Multigraph& g, std::int64_t alpha) {
  const int n = g.num_vertices();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > alpha) continue;
    bool ok = true;
    for (int v = 0; v < n; ++v)
      if ((mask >> v & 1u) && static_cast<std::int64_t>(g.adjacency(v).size()) > alpha) ok = false;
    if (!ok) continue;
    std::vector<Vertex> rest;
    for (int v = 0; v < n; ++v)
      if (!(mask >> v & 1u)) rest.push_back(v);
    do {
      std::int64_t worst = 0;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        std::int64_t c = 0;
        for (std::size_t p = 0; p < i; ++p)
          for (std::size_t q = i + 1; q < rest.size(); ++q) c += g.multiplicity(rest[p], rest[q]);
        worst = std::max(worst, c);
      }
      if (worst <= alpha) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return false;
}

/// All simple paths that start in A, end in B and meet A and B only there.
inline std::vector<thinwall::Path> ab_paths(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<thinwall::Path> out;
  auto in = [](const VertexSet& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); };
  std::vector<char> used(g.num_vertices(), 0);
  thinwall::Path cur;
  std::function<void(Vertex)> go = [&](Vertex x) {
    cur.push_back(x);
    used[x] = 1;
    if (in(b, x)) {
      out.push_back(cur);
    } else {
      for (auto [y, m] : g.adjacency(x))
        if (!used[y] && !in(a, y)) go(y);
    }
    used[x] = 0;
    cur.pop_back();
  };
  for (Vertex s : a) go(s);
  return out;
}

/// Largest number of pairwise vertex-disjoint A-B paths, by exhaustive search.
inline int max_vertex_disjoint_bruteforce(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
  auto paths = ab_paths(g, a, b);
  int best = 0;
  std::vector<char> used(g.num_vertices(), 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int cnt) {
    best = std::max(best, cnt);
    for (std::size_t j = i; j < paths.size(); ++j) {
      bool free = std::all_of(paths[j].begin(), paths[j].end(), [&](Vertex v) { return !used[v]; });
      if (!free) continue;
      for (Vertex v : paths[j]) used[v] = 1;
      go(j + 1, cnt + 1);
      for (Vertex v : paths[j]) used[v] = 0;
    }
  };
  go(0, 0);
  return best;
}

/// Direct edge-list degree census.
inline std::map<int, int> degree_census(const Multigraph& g) {
  std::map<int, int> c;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int d = 0;
    for (const auto& e : g.edges())
      if (e.u == v || e.v == v) d += e.mult;
    ++c[d];
  }
  return c;
}


// Immersion by exhaustive search: injective maps, then one simple path per
// edge copy from all simple paths, checked for edge budget and (strong) branch avoidance.
inline bool immersion_bruteforce(const Multigraph& h, const Multigraph& g, bool strong) {
  const int nh = h.num_vertices(), ng = g.num_vertices();
  if (nh > ng) return false;
  std::vector<std::pair<Vertex, Vertex>> copies;
  for (const auto& e : h.edges())
    for (int i = 0; i < e.mult; ++i) copies.push_back({e.u, e.v});
  std::vector<Vertex> map(nh);
  std::vector<char> used(ng, 0);
  std::function<bool(int)> assign = [&](int i) -> bool {
    if (i == nh) {
      std::vector<char> branch(ng, 0);
      for (Vertex x : map) branch[x] = 1;
      std::vector<std::vector<thinwall::Path>> options;
      for (auto [u, v] : copies) {
        std::vector<thinwall::Path> opts;
        for (auto& p : ab_paths(g, {map[u]}, {map[v]})) {
          if (p.front() != map[u]) std::reverse(p.begin(), p.end());
          if (p.front() != map[u] || p.back() != map[v]) continue;
          bool ok = true;
          for (std::size_t j = 1; strong && j + 1 < p.size(); ++j) ok = ok && !branch[p[j]];
          if (ok) opts.push_back(p);
        }
        options.push_back(std::move(opts));
      }
      std::map<std::pair<Vertex, Vertex>, int> load;
      std::function<bool(std::size_t)> pick = [&](std::size_t j) -> bool {
        if (j == copies.size()) return true;
        for (const auto& p : options[j]) {
          bool ok = true;
          std::size_t k = 0;
          for (; k + 1 < p.size(); ++k) {
            auto key = std::minmax(p[k], p[k + 1]);
            if (++load[key] > g.multiplicity(key.first, key.second)) {
              ok = false;
              ++k;
              break;
            }
          }
          if (ok && pick(j + 1)) return true;
          for (std::size_t t = 0; t < k; ++t) --load[std::minmax(p[t], p[t + 1])];
        }
        return false;
      };
      return pick(0);
    }
    for (Vertex x = 0; x < ng; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      map[i] = x;
      if (assign(i + 1)) return true;
      used[x] = 0;
    }
    return false;
  };
  return assign(0);
}

/// Tree-width as the minimum elimination width over all orderings.
inline int treewidth_bruteforce(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return -1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    std::vector<std::set<Vertex>> adj(n);
    for (const auto& e : g.edges()) {
      adj[e.u].insert(e.v);
      adj[e.v].insert(e.u);
    }
    std::vector<char> gone(n, 0);
    int width = 0;
    for (Vertex v : perm) {
      std::vector<Vertex> nb;
      for (Vertex y : adj[v])
        if (!gone[y]) nb.push_back(y);
      width = std::max(width, static_cast<int>(nb.size()));
      for (Vertex a : nb)
        for (Vertex b : nb)
          if (a != b) adj[a].insert(b);
      gone[v] = 1;
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Tree-width by the subset recurrence TW(S) = min_v max(TW(S - v), |Q(S - v, v)|),
/// where Q(S, v) are the vertices outside S + v reachable from v through S.
inline int treewidth_subset_dp(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  auto q = [&](std::uint32_t s, int v) {
    std::uint32_t seen = 1u << v, frontier = 1u << v, out = 0;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      for (std::uint32_t m = adj[x] & ~seen; m; m &= m - 1) {
        int y = std::countr_zero(m);
        seen |= 1u << y;
        if (s >> y & 1u)
          frontier |= 1u << y;
        else
          out |= 1u << y;
      }
    }
    return std::popcount(out);
  };
  std::vector<int> tw(std::size_t{1} << n, n);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= all; ++s)
    for (std::uint32_t m = s; m; m &= m - 1) {
      int v = std::countr_zero(m);
      std::uint32_t rest = s & ~(1u << v);
      tw[s] = std::min(tw[s], std::max(tw[rest], q(rest, v)));
    }
  return tw[all];
}

inline bool is_linear_forest(const Multigraph& g, const std::vector<char>& gone) {
  const int n = g.num_vertices();
  int vertices = 0, edges = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (gone[v]) continue;
    ++vertices;
    int d = 0;
    for (auto [y, m] : g.adjacency(v))
      if (!gone[y]) ++d;
    if (d > 2) return false;
    edges += d;
  }
  edges /= 2;
  // Acyclic iff edges = vertices - components.
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (gone[v] || seen[v]) continue;
    ++comps;
    std::vector<Vertex> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (auto [y, m] : g.adjacency(x))
        if (!gone[y] && !seen[y]) seen[y] = 1, stack.push_back(y);
    }
  }
  return edges == vertices - comps;
}

/// Size of a smallest deletion set leaving a linear forest (simple graphs).
inline int linear_forest_deletion_bruteforce(const Multigraph& g) {
  const int n = g.num_vertices();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) >= best) continue;
    std::vector<char> gone(n, 0);
    for (int i = 0; i < n; ++i) gone[i] = mask >> i & 1u;
    if (is_linear_forest(g, gone)) best = std::popcount(mask);
  }
  return best;
}

/// Whether some connected vertex set has at least k neighbours outside it.
inline bool star_minor_bruteforce(const Multigraph& g, int k) {
  const int n = g.num_vertices();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int start = std::countr_zero(mask);
    std::uint32_t seen = 1u << start;
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (auto [y, m] : g.adjacency(x))
        if ((mask >> y & 1u) && !(seen >> y & 1u)) seen |= 1u << y, stack.push_back(y);
    }
    if (seen != mask) continue;
    std::uint32_t nb = 0;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1u)
        for (auto [y, m] : g.adjacency(x))
          if (!(mask >> y & 1u)) nb |= 1u << y;
    if (std::popcount(nb) >= k) return true;
  }
  return false;
}

/// In a tree: largest subdivided star with leaves in U (legs nontrivial).
inline int tree_star_bruteforce(const Multigraph& t, const VertexSet& u) {
  const int n = t.num_vertices();
  std::vector<char> in_u(n, 0);
  for (Vertex x : u) in_u[x] = 1;
  int best = 0;
  for (Vertex c = 0; c < n; ++c) {
    int legs = 0;
    for (auto [y, m] : t.adjacency(c)) {
      // Does the branch through y contain a vertex of U?
      std::vector<Vertex> stack{y};
      std::vector<char> seen(n, 0);
      seen[c] = seen[y] = 1;
      bool hit = false;
      while (!stack.empty() && !hit) {
        Vertex x = stack.back();
        stack.pop_back();
        hit = in_u[x];
        for (auto [z, mm] : t.adjacency(x))
          if (!seen[z]) seen[z] = 1, stack.push_back(z);
      }
      legs += hit;
    }
    best = std::max(best, legs);
  }
  return best;
}

/// In a tree: largest comb with teeth in U, over all spines.
inline int tree_comb_bruteforce(const Multigraph& t, const VertexSet& u) {
  const int n = t.num_vertices();
  std::vector<char> in_u(n, 0);
  for (Vertex x : u) in_u[x] = 1;
  int best = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a; b < n; ++b) {
      // The unique a-b path.
      std::vector<Vertex> parent(n, -1);
      std::vector<Vertex> stack{a};
      parent[a] = a;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (auto [y, m] : t.adjacency(x))
          if (parent[y] == -1) parent[y] = x, stack.push_back(y);
      }
      std::vector<char> on(n, 0);
      for (Vertex x = b;; x = parent[x]) {
        on[x] = 1;
        if (x == a) break;
      }
      int teeth = 0;
      for (Vertex s = 0; s < n; ++s) {
        if (!on[s]) continue;
        bool hit = in_u[s];
        std::vector<Vertex> st{s};
        std::vector<char> seen = on;
        while (!st.empty() && !hit) {
          Vertex x = st.back();
          st.pop_back();
          for (auto [y, m] : t.adjacency(x))
            if (!seen[y]) {
              seen[y] = 1;
              hit = hit || in_u[y];
              st.push_back(y);
            }
        }
        teeth += hit;
      }
      best = std::max(best, teeth);
    }
  return best;
}

inline Multigraph random_tree(int n, std::mt19937& rng) {
  Multigraph t = Multigraph::with_vertices(n);
  for (int v = 1; v < n; ++v) t.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return t;
}

}  // namespace oracle
