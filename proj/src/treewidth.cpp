#include "thinwall/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <unordered_map>

namespace thinwall {

int TreeDecomposition::width() const {
  std::size_t m = 0;
  for (const auto& b : bags) m = std::max(m, b.size());
  return m == 0 ? 0 : static_cast<int>(m) - 1;
}

std::vector<std::string> validate_td(const Multigraph& g, const TreeDecomposition& td) {
  std::vector<std::string> errs;
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) {
    if (g.num_vertices() > 0) errs.push_back("no bags for a nonempty graph");
    return errs;
  }
  if (static_cast<int>(td.tree.size()) != nb - 1) errs.push_back("tree has the wrong number of edges");
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : td.tree) {
    if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) {
      errs.push_back("tree edge with bad endpoints");
      return errs;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(nb, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (int y : adj[x])
      if (!seen[y]) seen[y] = 1, stack.push_back(y);
  }
  if (count != nb) errs.push_back("tree is not connected");
  if (!errs.empty()) return errs;
  std::vector<std::vector<int>> holding(g.num_vertices());
  for (int b = 0; b < nb; ++b)
    for (Vertex v : td.bags[b]) {
      if (!g.contains(v)) {
        errs.push_back("bag " + std::to_string(b) + " holds an unknown vertex");
        return errs;
      }
      holding[v].push_back(b);
    }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (holding[v].empty()) {
      errs.push_back("vertex '" + g.label(v) + "' is in no bag");
      continue;
    }
    // Bags holding v must induce a connected subtree.
    std::vector<char> in(nb, 0), vis(nb, 0);
    for (int b : holding[v]) in[b] = 1;
    std::vector<int> st{holding[v][0]};
    vis[holding[v][0]] = 1;
    std::size_t reached = 0;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      ++reached;
      for (int y : adj[x])
        if (in[y] && !vis[y]) vis[y] = 1, st.push_back(y);
    }
    if (reached != holding[v].size()) errs.push_back("bags holding '" + g.label(v) + "' are not connected");
  }
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (int b : holding[e.u])
      if (set_contains(td.bags[b], e.v)) covered = true;
    if (!covered) errs.push_back("edge " + g.label(e.u) + "-" + g.label(e.v) + " is in no bag");
  }
  return errs;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Multigraph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

// Eliminates v from the fill-in graph restricted to `alive`.
void eliminate(std::vector<Mask>& adj, Mask alive, int v) {
  Mask nb = adj[v] & alive & ~(Mask{1} << v);
  for (Mask m = nb; m; m &= m - 1) {
    int u = std::countr_zero(m);
    adj[u] |= nb & ~(Mask{1} << u);
  }
}

void check_size(const Multigraph& g, int cap) {
  if (g.num_vertices() > cap || g.num_vertices() > 64)
    throw CapExceeded("tree-width: " + std::to_string(g.num_vertices()) + " vertices exceeds cap " +
                      std::to_string(cap));
}

}  // namespace

int elimination_width(const Multigraph& g, const std::vector<Vertex>& order) {
  check_size(g, 64);
  auto adj = adjacency_masks(g);
  Mask alive = g.num_vertices() == 64 ? ~Mask{0} : (Mask{1} << g.num_vertices()) - 1;
  int w = 0;
  for (Vertex v : order) {
    w = std::max(w, std::popcount(adj[v] & alive & ~(Mask{1} << v)));
    eliminate(adj, alive, v);
    alive &= ~(Mask{1} << v);
  }
  return w;
}

TreeDecomposition td_from_elimination(const Multigraph& g, const std::vector<Vertex>& order) {
  check_size(g, 64);
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) throw GraphError("td_from_elimination: not a permutation");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!g.contains(order[i]) || pos[order[i]] != -1) throw GraphError("td_from_elimination: not a permutation");
    pos[order[i]] = i;
  }
  auto adj = adjacency_masks(g);
  Mask alive = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  TreeDecomposition td;
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    Mask higher = adj[v] & alive & ~(Mask{1} << v);
    VertexSet bag{v};
    int first = n;
    for (Mask m = higher; m; m &= m - 1) {
      int u = std::countr_zero(m);
      bag.push_back(u);
      first = std::min(first, pos[u]);
    }
    td.bags.push_back(make_set(std::move(bag)));
    parent[i] = first == n ? -1 : first;
    eliminate(adj, alive, v);
    alive &= ~(Mask{1} << v);
  }
  // Roots of a disconnected graph are chained to keep one tree.
  int last_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[i] != -1)
      td.tree.push_back({std::min(i, parent[i]), std::max(i, parent[i])});
    else {
      if (last_root != -1) td.tree.push_back({last_root, i});
      last_root = i;
    }
  }
  return td;
}

namespace {

class TwSearch {
 public:
  explicit TwSearch(const Multigraph& g) : n_(g.num_vertices()), adj0_(adjacency_masks(g)) {}

  TreewidthResult run() {
    TreewidthResult r;
    Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    greedy_min_fill(all);
    std::vector<Vertex> cur;
    search(adj0_, all, 0, cur);
    r.width = best_;
    r.order = best_order_;
    r.nodes = nodes_;
    return r;
  }

 private:
  void greedy_min_fill(Mask all) {
    auto adj = adj0_;
    Mask alive = all;
    int w = 0;
    best_order_.clear();
    while (alive) {
      int pick = -1;
      long best_fill = -1;
      for (Mask m = alive; m; m &= m - 1) {
        int v = std::countr_zero(m);
        Mask nb = adj[v] & alive & ~(Mask{1} << v);
        long fill = 0;
        for (Mask q = nb; q; q &= q - 1) {
          int u = std::countr_zero(q);
          fill += std::popcount(nb & ~adj[u] & ~(Mask{1} << u));
        }
        if (pick == -1 || fill < best_fill) pick = v, best_fill = fill;
      }
      w = std::max(w, std::popcount(adj[pick] & alive & ~(Mask{1} << pick)));
      eliminate(adj, alive, pick);
      alive &= ~(Mask{1} << pick);
      best_order_.push_back(pick);
    }
    best_ = w;
  }

  // Minimum-degree lower bound over repeatedly shrunk subgraphs.
  static int mmd(const std::vector<Mask>& adj, Mask alive) {
    int lb = 0;
    while (std::popcount(alive) > 1) {
      int pick = -1, dmin = 65;
      for (Mask m = alive; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int d = std::popcount(adj[v] & alive & ~(Mask{1} << v));
        if (d < dmin) dmin = d, pick = v;
      }
      lb = std::max(lb, dmin);
      alive &= ~(Mask{1} << pick);
    }
    return lb;
  }

  void search(const std::vector<Mask>& adj, Mask alive, int width, std::vector<Vertex>& cur) {
    ++nodes_;
    int left = std::popcount(alive);
    if (std::max(width, left - 1) < best_) {
      // Any completion works; keep the remaining vertices in id order.
      best_ = std::max(width, left - 1);
      best_order_ = cur;
      for (Mask m = alive; m; m &= m - 1) best_order_.push_back(std::countr_zero(m));
    }
    if (left <= 1 || width >= best_) return;
    if (std::max(width, mmd(adj, alive)) >= best_) return;
    auto it = memo_.find(alive);
    if (it != memo_.end() && it->second <= width) return;
    memo_[alive] = width;

    // A simplicial vertex can always be eliminated first.
    for (Mask m = alive; m; m &= m - 1) {
      int v = std::countr_zero(m);
      Mask nb = adj[v] & alive & ~(Mask{1} << v);
      bool clique = true;
      for (Mask q = nb; q && clique; q &= q - 1) {
        int u = std::countr_zero(q);
        if ((nb & ~(Mask{1} << u) & ~adj[u]) != 0) clique = false;
      }
      if (clique) {
        auto next = adj;
        eliminate(next, alive, v);
        cur.push_back(v);
        search(next, alive & ~(Mask{1} << v), std::max(width, std::popcount(nb)), cur);
        cur.pop_back();
        return;
      }
    }
    std::vector<std::pair<int, int>> cand;
    for (Mask m = alive; m; m &= m - 1) {
      int v = std::countr_zero(m);
      cand.push_back({std::popcount(adj[v] & alive & ~(Mask{1} << v)), v});
    }
    std::sort(cand.begin(), cand.end());
    for (auto [d, v] : cand) {
      int w = std::max(width, d);
      if (w >= best_) continue;
      auto next = adj;
      eliminate(next, alive, v);
      cur.push_back(v);
      search(next, alive & ~(Mask{1} << v), w, cur);
      cur.pop_back();
    }
  }

  int n_;
  std::vector<Mask> adj0_;
  int best_ = 0;
  std::vector<Vertex> best_order_;
  std::unordered_map<Mask, int> memo_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

TreewidthResult exact_treewidth(const Multigraph& g, int cap) {
  check_size(g, cap);
  TreewidthResult r;
  if (g.num_vertices() == 0) return r;
  r = TwSearch(g).run();
  r.td = td_from_elimination(g, r.order);
  if (r.td.width() != r.width) throw ConstructionDefect("tree-width: decomposition width differs from search value");
  return r;
}

TdToTcdReport td_to_tcd(const Multigraph& g, const TreeDecomposition& td) {
  if (auto errs = validate_td(g, td); !errs.empty()) throw GraphError("td_to_tcd: invalid tree-decomposition: " + errs.front());
  TdToTcdReport rep;
  rep.width = td.width();
  rep.max_degree = g.max_degree();
  rep.adhesion_bound = static_cast<std::int64_t>(2 * rep.width + 2) * rep.max_degree;
  rep.torso_bound = (rep.max_degree + 1) * (rep.width + 1);
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) return rep;

  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : td.tree) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(nb, -1), depth(nb, 0), bfs{0};
  std::vector<char> seen(nb, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (int y : adj[bfs[i]])
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = bfs[i];
        depth[y] = depth[bfs[i]] + 1;
        bfs.push_back(y);
      }
  std::vector<VertexSet> parts(nb);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int home = -1;
    for (int b = 0; b < nb; ++b)
      if (set_contains(td.bags[b], v) && (home == -1 || depth[b] < depth[home])) home = b;
    parts[home].push_back(v);
  }
  // Keep a bag iff its subtree holds a vertex.
  std::vector<int> load(nb, 0);
  for (int b = 0; b < nb; ++b) load[b] = static_cast<int>(parts[b].size());
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it)
    if (parent[*it] != -1) load[parent[*it]] += load[*it];
  std::vector<int> id(nb, -1);
  for (int b : bfs)
    if (load[b] > 0 || b == 0) {
      id[b] = rep.tcd.num_nodes();
      rep.tcd.parts.push_back(make_set(parts[b]));
    }
  for (int b : bfs)
    if (parent[b] != -1 && id[b] != -1) rep.tcd.tree.push_back({std::min(id[b], id[parent[b]]), std::max(id[b], id[parent[b]])});

  if (auto errs = validate(g, rep.tcd); !errs.empty()) throw ConstructionDefect("td_to_tcd: invalid result: " + errs.front());
  rep.adhesion = adhesion(g, rep.tcd).max;
  for (Node t = 0; t < rep.tcd.num_nodes(); ++t)
    rep.torso_max = std::max(rep.torso_max, torso(g, rep.tcd, t).graph.num_vertices());
  if (rep.adhesion > rep.adhesion_bound)
    throw ConstructionDefect("td_to_tcd: adhesion " + std::to_string(rep.adhesion) + " exceeds (2w+2)d = " +
                             std::to_string(rep.adhesion_bound));
  if (rep.torso_max > rep.torso_bound)
    throw ConstructionDefect("td_to_tcd: torso with " + std::to_string(rep.torso_max) + " vertices exceeds (d+1)(w+1) = " +
                             std::to_string(rep.torso_bound));
  return rep;
}

}  // namespace thinwall
