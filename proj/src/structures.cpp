#include "thinwall/structures.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "thinwall/treewidth.hpp"

namespace thinwall {

std::optional<std::string> check_star(const Multigraph& g, const VertexSet& u, int s, const StarWitness& w) {
  if (!g.contains(w.centre)) return "centre not in graph";
  if (static_cast<int>(w.legs.size()) < s) return "star has fewer than s legs";
  std::vector<char> used(g.num_vertices(), 0);
  used[w.centre] = 1;
  for (const Path& p : w.legs) {
    if (p.size() < 2 || !is_path(g, p)) return "leg is not a nontrivial path";
    if (p.front() != w.centre) return "leg does not start at the centre";
    if (!set_contains(u, p.back())) return "leaf '" + g.label(p.back()) + "' is not in U";
    for (std::size_t i = 1; i < p.size(); ++i)
      if (used[p[i]]++) return "legs meet at '" + g.label(p[i]) + "'";
  }
  return std::nullopt;
}

std::optional<std::string> check_comb(const Multigraph& g, const VertexSet& u, int t, const CombWitness& w) {
  if (!is_path(g, w.spine)) return "spine is not a path";
  if (static_cast<int>(w.legs.size()) < t) return "comb has fewer than t teeth";
  std::vector<char> on_spine(g.num_vertices(), 0), used(g.num_vertices(), 0);
  for (Vertex v : w.spine) on_spine[v] = 1;
  for (const Path& p : w.legs) {
    if (!is_path(g, p)) return "leg is not a path";
    if (!on_spine[p.front()]) return "leg does not start on the spine";
    for (std::size_t i = 1; i < p.size(); ++i)
      if (on_spine[p[i]]) return "leg meets the spine twice";
    if (!set_contains(u, p.back())) return "tooth '" + g.label(p.back()) + "' is not in U";
    for (Vertex v : p)
      if (used[v]++) return "legs meet at '" + g.label(v) + "'";
  }
  return std::nullopt;
}

namespace {

// Cuts a path at the first vertex of `stop` after position `from`.
Path cut_at(const Path& p, std::size_t from, const std::vector<char>& stop) {
  std::size_t j = from;
  while (j < p.size() && !stop[p[j]]) ++j;
  if (j == p.size()) return {};
  return Path(p.begin() + static_cast<long>(from), p.begin() + static_cast<long>(j) + 1);
}

}  // namespace

StarCombResult find_star_or_comb(const Multigraph& g, const VertexSet& u_in, int s, int t, std::uint64_t budget) {
  if (!is_connected(g)) throw GraphError("find_star_or_comb: graph is not connected");
  VertexSet u = make_set(u_in);
  for (Vertex x : u)
    if (!g.contains(x)) throw GraphError("find_star_or_comb: U is not a vertex subset");
  StarCombResult r;
  const int n = g.num_vertices();
  std::vector<char> in_u(n, 0);
  for (Vertex x : u) in_u[x] = 1;

  if (s <= 0 && n > 0) {
    r.star = StarWitness{0, {}};
    return r;
  }
  for (Vertex c = 0; c < n; ++c) {
    auto fan = max_fan(g, c, u);
    if (static_cast<int>(fan.size()) < s) continue;
    StarWitness w{c, {}};
    std::vector<char> stop = in_u;
    stop[c] = 0;
    for (const Path& p : fan) {
      Path leg = cut_at(p, 1, stop);
      leg.insert(leg.begin(), c);
      w.legs.push_back(std::move(leg));
    }
    std::sort(w.legs.begin(), w.legs.end(), [](const Path& a, const Path& b) { return a.back() < b.back(); });
    w.legs.resize(s);
    if (auto err = check_star(g, u, s, w)) throw ConstructionDefect("find_star_or_comb: bad star: " + *err);
    r.star = std::move(w);
    return r;
  }

  if (t <= 0 && n > 0) {
    r.comb = CombWitness{{0}, {}};
    return r;
  }
  if (static_cast<int>(u.size()) < t) return r;
  std::uint64_t nodes = 0;
  std::vector<char> on(n, 0);
  Path spine;
  auto evaluate = [&]() -> bool {
    // Spine vertices in U are trivial legs; the rest come from a path packing
    // that avoids them.
    VertexSet trivial, rest_spine, rest_u;
    std::vector<char> on_spine(n, 0);
    for (Vertex v : spine) on_spine[v] = 1;
    for (Vertex v : spine) (in_u[v] ? trivial : rest_spine).push_back(v);
    for (Vertex v : u)
      if (!on_spine[v]) rest_u.push_back(v);
    std::vector<Path> legs;
    for (Vertex v : trivial) legs.push_back({v});
    int need = t - static_cast<int>(trivial.size());
    if (need > 0) {
      if (rest_spine.empty() || static_cast<int>(rest_u.size()) < need) return false;
      auto sub = remove_vertices(g, make_set(trivial));
      VertexSet a, b;
      for (Vertex v : rest_spine) a.push_back(sub.new_of_old[v]);
      for (Vertex v : rest_u) b.push_back(sub.new_of_old[v]);
      auto vp = vertex_disjoint_paths(sub.graph, make_set(a), make_set(b), need);
      if (!vp.found()) return false;
      for (Path p : vp.paths) {
        for (Vertex& v : p) v = sub.old_of_new[v];
        legs.push_back(std::move(p));
      }
    }
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < spine.size(); ++i) pos[spine[i]] = static_cast<int>(i);
    CombWitness w;
    w.spine = spine;
    for (const Path& p : legs) {
      std::size_t last = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (pos[p[i]] != -1) last = i;
      w.legs.push_back(cut_at(p, last, in_u));
    }
    std::sort(w.legs.begin(), w.legs.end(),
              [&](const Path& a, const Path& b) { return pos[a.front()] < pos[b.front()]; });
    w.legs.resize(t);
    if (auto err = check_comb(g, u, t, w)) throw ConstructionDefect("find_star_or_comb: bad comb: " + *err);
    r.comb = std::move(w);
    return true;
  };
  auto extendable = [&](Vertex x) {
    for (auto [y, m] : g.adjacency(x))
      if (!on[y]) return true;
    return false;
  };
  std::function<bool()> grow = [&]() -> bool {
    if (++nodes > budget) {
      r.exhaustive = false;
      return true;
    }
    Vertex tail = spine.back();
    bool extended = false;
    for (auto [y, m] : g.adjacency(tail)) {
      if (on[y]) continue;
      extended = true;
      on[y] = 1;
      spine.push_back(y);
      bool stop = grow();
      spine.pop_back();
      on[y] = 0;
      if (stop) return true;
    }
    if (!extended && !extendable(spine.front()) && spine.front() <= spine.back()) return evaluate();
    return false;
  };
  for (Vertex v = 0; v < n; ++v) {
    on[v] = 1;
    spine = {v};
    bool stop = grow();
    on[v] = 0;
    if (stop) break;
  }
  return r;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> simple_masks(const Multigraph& g, int cap, const char* what) {
  if (g.num_vertices() > cap || g.num_vertices() > 64)
    throw CapExceeded(std::string(what) + ": " + std::to_string(g.num_vertices()) + " vertices exceeds cap " +
                      std::to_string(cap));
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

VertexSet mask_to_set(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
  return s;
}

}  // namespace

std::optional<StarMinorWitness> find_star_minor(const Multigraph& g, int k, int cap) {
  auto adj = simple_masks(g, cap, "find_star_minor");
  const int n = g.num_vertices();
  if (k <= 0 && n > 0) return StarMinorWitness{{0}, {}};
  for (Vertex v = 0; v < n; ++v)
    if (std::popcount(adj[v]) >= k) return StarMinorWitness{{v}, mask_to_set(adj[v])};
  std::optional<StarMinorWitness> found;
  // Each connected set is generated once, from its smallest vertex.
  std::function<void(Mask, Mask, Mask, Mask)> rec = [&](Mask d, Mask nb, Mask allowed, Mask banned) {
    if (found) return;
    Mask outside = nb & ~d;
    if (std::popcount(outside) >= k) {
      found = StarMinorWitness{mask_to_set(d), mask_to_set(outside)};
      return;
    }
    Mask cand = outside & allowed & ~banned;
    for (Mask m = cand; m && !found; m &= m - 1) {
      int w = std::countr_zero(m);
      rec(d | (Mask{1} << w), nb | adj[w], allowed, banned);
      banned |= Mask{1} << w;
    }
  };
  for (Vertex v = 0; v < n && !found; ++v) {
    Mask allowed = ~((Mask{1} << v) - 1) & ~(Mask{1} << v);
    if (v == 63) allowed = 0;
    rec(Mask{1} << v, adj[v], allowed, 0);
  }
  return found;
}

VertexSet min_linear_forest_deletion(const Multigraph& g) {
  auto adj = simple_masks(g, 64, "min_linear_forest_deletion");
  const int n = g.num_vertices();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  // With maximum degree <= 2 every cycle component costs exactly one vertex.
  auto cycles = [&](Mask alive) {
    VertexSet pick;
    Mask seen = 0;
    for (Mask m = alive; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (seen >> v & 1) continue;
      Mask comp = Mask{1} << v, frontier = comp;
      while (frontier) {
        int x = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask nx = adj[x] & alive & ~comp;
        comp |= nx;
        frontier |= nx;
      }
      seen |= comp;
      bool all_two = true;
      for (Mask q = comp; q; q &= q - 1)
        if (std::popcount(adj[std::countr_zero(q)] & alive) != 2) all_two = false;
      if (all_two) pick.push_back(std::countr_zero(comp));
    }
    return pick;
  };
  std::vector<Vertex> chosen;
  std::function<bool(Mask, int)> solve = [&](Mask alive, int budget) -> bool {
    int branch_v = -1, best_deg = 2;
    for (Mask m = alive; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int d = std::popcount(adj[v] & alive);
      if (d > best_deg) best_deg = d, branch_v = v;
    }
    if (branch_v == -1) {
      auto c = cycles(alive);
      if (static_cast<int>(c.size()) > budget) return false;
      chosen.insert(chosen.end(), c.begin(), c.end());
      return true;
    }
    if (budget == 0) return false;
    // A claw at branch_v: one of these four vertices must go.
    std::vector<int> opts{branch_v};
    for (Mask q = adj[branch_v] & alive; q && opts.size() < 4; q &= q - 1) opts.push_back(std::countr_zero(q));
    for (int x : opts) {
      chosen.push_back(x);
      if (solve(alive & ~(Mask{1} << x), budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int b = 0; b <= n; ++b) {
    chosen.clear();
    if (solve(all, b)) return make_set(chosen);
  }
  return all_vertices(g);
}

CoverResult linear_forest_cover(const Multigraph& g, int k, int cap) {
  for (const Edge& e : g.edges())
    if (e.mult > 1) throw GraphError("linear_forest_cover: graph must be simple");
  if (g.num_vertices() > 0 && !is_connected(g)) throw GraphError("linear_forest_cover: graph must be connected");
  CoverResult r;
  if (auto m = find_star_minor(g, k, cap)) {
    r.minor = std::move(m);
    return r;
  }
  LinearForestCover c;
  c.x = min_linear_forest_deletion(g);
  if (static_cast<std::int64_t>(c.x.size()) > 4 * static_cast<std::int64_t>(k))
    throw ConstructionDefect("linear_forest_cover: " + std::to_string(c.x.size()) + " deletions exceed 4k = " +
                             std::to_string(4 * k) + " without a star minor");
  auto sub = remove_vertices(g, c.x);
  for (const VertexSet& comp : components(sub.graph)) {
    Vertex start = -1;
    for (Vertex v : comp)
      if (sub.graph.neighbour_count(v) <= 1 && (start == -1 || v < start)) start = v;
    Path p{start};
    Vertex prev = -1;
    while (true) {
      Vertex next = -1;
      for (auto [y, m] : sub.graph.adjacency(p.back()))
        if (y != prev) next = y;
      if (next == -1) break;
      prev = p.back();
      p.push_back(next);
    }
    for (Vertex& v : p) v = sub.old_of_new[v];
    c.paths.push_back(std::move(p));
  }
  std::sort(c.paths.begin(), c.paths.end());
  r.cover = std::move(c);
  return r;
}

}  // namespace thinwall
