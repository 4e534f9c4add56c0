#include "thinwall/paths.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace thinwall {
namespace {

constexpr int kUnlimited = 1 << 28;

// Directed network with paired reverse arcs; augmentation by BFS in arc
// insertion order, one unit at a time.
class Network {
 public:
  explicit Network(int nodes) : head_(nodes) {}

  int add_arc(int from, int to, int cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    head_[from].push_back(id);
    to_.push_back(from);
    cap_.push_back(0);
    head_[to].push_back(id + 1);
    return id;
  }

  bool augment(int s, int t) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty() && !seen[t]) {
      int x = q.front();
      q.pop();
      for (int id : head_[x]) {
        int y = to_[id];
        if (!seen[y] && cap_[id] > 0) {
          seen[y] = 1;
          via[y] = id;
          q.push(y);
        }
      }
    }
    if (!seen[t]) return false;
    for (int y = t; y != s; y = to_[via[y] ^ 1]) {
      cap_[via[y]] -= 1;
      cap_[via[y] ^ 1] += 1;
    }
    return true;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int id : head_[x])
        if (cap_[id] > 0 && !seen[to_[id]]) {
          seen[to_[id]] = 1;
          st.push_back(to_[id]);
        }
    }
    return seen;
  }

  // Flow on a forward arc = residual capacity of its reverse twin.
  int flow(int arc) const { return cap_[arc + 1]; }

 private:
  std::vector<std::vector<int>> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
};

struct FlowOutcome {
  int value = 0;
  std::vector<Path> paths;
  std::vector<char> reach_in, reach_out;  // per original vertex
};

// vertex_cap[v] == 0 means unlimited. edge_cap_unlimited ignores multiplicities.
FlowOutcome run_flow(const Multigraph& g, const VertexSet& a, const VertexSet& b, int k,
                     const std::vector<int>& vertex_cap, bool edge_cap_unlimited) {
  const int n = g.num_vertices();
  for (Vertex v : a)
    if (!g.contains(v)) throw GraphError("path packing: A is not a subset of the graph");
  for (Vertex v : b)
    if (!g.contains(v)) throw GraphError("path packing: B is not a subset of the graph");
  for (Vertex v : a)
    if (set_contains(b, v)) throw GraphError("path packing: A and B must be disjoint");

  auto in = [](Vertex v) { return v; };
  auto out = [&](Vertex v) { return vertex_cap[v] ? n + v : v; };
  const int source = 2 * n, sink = 2 * n + 1;
  Network net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v)
    if (vertex_cap[v]) net.add_arc(in(v), out(v), vertex_cap[v]);

  struct PairArcs {
    Vertex u, v;
    int fwd, bwd;
  };
  std::vector<PairArcs> pair_arcs;
  for (const Edge& e : g.edges()) {
    int cap = edge_cap_unlimited ? kUnlimited : e.mult;
    pair_arcs.push_back({e.u, e.v, net.add_arc(out(e.u), in(e.v), cap), net.add_arc(out(e.v), in(e.u), cap)});
  }
  std::map<Vertex, int> src_arc, snk_arc;
  for (Vertex v : a) src_arc[v] = net.add_arc(source, in(v), kUnlimited);
  for (Vertex v : b) snk_arc[v] = net.add_arc(out(v), sink, kUnlimited);

  FlowOutcome r;
  while (r.value < k && net.augment(source, sink)) ++r.value;

  auto reach = net.reachable(source);
  r.reach_in.assign(n, 0);
  r.reach_out.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    r.reach_in[v] = reach[in(v)];
    r.reach_out[v] = reach[out(v)];
  }
  if (r.value < k) return r;

  // Decompose the net flow into paths.
  std::vector<std::map<Vertex, int>> net_flow(n);
  for (const auto& pa : pair_arcs) {
    int f = net.flow(pa.fwd) - net.flow(pa.bwd);
    if (f > 0) net_flow[pa.u][pa.v] += f;
    if (f < 0) net_flow[pa.v][pa.u] += -f;
  }
  std::map<Vertex, int> starts, ends;
  for (auto [v, id] : src_arc) starts[v] = net.flow(id);
  for (auto [v, id] : snk_arc) ends[v] = net.flow(id);

  for (auto& [s, cnt] : starts) {
    while (cnt > 0) {
      --cnt;
      Path p{s};
      std::vector<int> pos(n, -1);
      pos[s] = 0;
      while (true) {
        Vertex x = p.back();
        auto e = ends.find(x);
        if (e != ends.end() && e->second > 0) {
          --e->second;
          break;
        }
        Vertex next = -1;
        for (auto& [y, f] : net_flow[x])
          if (f > 0) {
            next = y;
            --f;
            break;
          }
        if (next == -1) throw std::logic_error("flow decomposition stalled");
        if (pos[next] != -1) {
          for (std::size_t i = pos[next] + 1; i < p.size(); ++i) pos[p[i]] = -1;
          p.resize(pos[next] + 1);
        } else {
          pos[next] = static_cast<int>(p.size());
          p.push_back(next);
        }
      }
      // Trim to an A-B path.
      std::size_t i = 0;
      for (std::size_t j = 0; j < p.size(); ++j)
        if (set_contains(a, p[j])) i = j;
      std::size_t j = i;
      while (!set_contains(b, p[j])) ++j;
      r.paths.emplace_back(p.begin() + i, p.begin() + j + 1);
    }
  }
  return r;
}

}  // namespace

EdgePacking edge_disjoint_paths(const Multigraph& g, const VertexSet& a, const VertexSet& b, int k) {
  return edge_disjoint_paths_capped(g, a, b, k, {});
}

EdgePacking edge_disjoint_paths_capped(const Multigraph& g, const VertexSet& a, const VertexSet& b, int k,
                                       const VertexSet& capped) {
  std::vector<int> cap(g.num_vertices(), 0);
  for (Vertex v : capped) cap.at(v) = 1;
  EdgePacking res;
  if (k <= 0) return res;
  auto r = run_flow(g, make_set(a), make_set(b), k, cap, false);
  if (r.value >= k) {
    res.paths = std::move(r.paths);
    return res;
  }
  // Min cut: vertices whose (in-copy) is reachable form the source side. With
  // vertex capacities the cut is reported on the graph edges leaving that side,
  // and its size is the flow value only when no vertex capacity is saturated.
  VertexSet side;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (r.reach_in[v]) side.push_back(v);
  EdgeCut c = edge_cut(g, side);
  c.size = capped.empty() ? c.size : r.value;
  res.cut = std::move(c);
  return res;
}

VertexPacking vertex_disjoint_paths(const Multigraph& g, const VertexSet& a, const VertexSet& b, int k) {
  std::vector<int> cap(g.num_vertices(), 1);
  VertexPacking res;
  if (k <= 0) return res;
  auto r = run_flow(g, make_set(a), make_set(b), k, cap, true);
  if (r.value >= k) {
    res.paths = std::move(r.paths);
    return res;
  }
  VertexSet x;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (r.reach_in[v] && !r.reach_out[v]) x.push_back(v);
  res.separator = std::move(x);
  return res;
}

VertexPacking internally_disjoint_paths(const Multigraph& g, Vertex u, Vertex v, int k) {
  if (u == v) throw GraphError("internally_disjoint_paths: endpoints coincide");
  VertexPacking res;
  if (k <= 0) return res;
  // Direct uv edges are paths with no interior; route the rest through others.
  const int direct = std::min(k, g.multiplicity(u, v));
  for (int i = 0; i < direct; ++i) res.paths.push_back({u, v});
  if (direct == k) return res;
  Multigraph h = g;
  h.set_multiplicity(u, v, 0);
  std::vector<int> cap(g.num_vertices(), 1);
  cap.at(u) = 0;
  cap.at(v) = 0;
  auto r = run_flow(h, {u}, {v}, k - direct, cap, true);
  if (r.value >= k - direct) {
    for (auto& p : r.paths) res.paths.push_back(std::move(p));
    return res;
  }
  res.paths.clear();
  VertexSet x;
  for (Vertex w = 0; w < g.num_vertices(); ++w)
    if (cap[w] && r.reach_in[w] && !r.reach_out[w]) x.push_back(w);
  res.separator = std::move(x);
  return res;
}

std::vector<Path> max_fan(const Multigraph& g, Vertex centre, const VertexSet& targets) {
  std::vector<int> cap(g.num_vertices(), 1);
  cap.at(centre) = 0;
  VertexSet t = set_difference(make_set(targets), {centre});
  if (t.empty()) return {};
  // Run once to learn the maximum, then again to decompose it.
  int limit = static_cast<int>(t.size());
  auto probe = run_flow(g, {centre}, t, limit, cap, true);
  if (probe.value == 0) return {};
  return run_flow(g, {centre}, t, probe.value, cap, true).paths;
}

bool is_path(const Multigraph& g, const Path& p) {
  if (p.empty()) return false;
  std::vector<Vertex> seen(p);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (Vertex v : p)
    if (!g.contains(v)) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (g.multiplicity(p[i], p[i + 1]) == 0) return false;
  return true;
}

bool respects_multiplicity(const Multigraph& g, const std::vector<Path>& paths) {
  std::map<std::pair<Vertex, Vertex>, int> used;
  for (const Path& p : paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      auto key = std::minmax(p[i], p[i + 1]);
      if (++used[{key.first, key.second}] > g.multiplicity(key.first, key.second)) return false;
    }
  return true;
}

}  // namespace thinwall
