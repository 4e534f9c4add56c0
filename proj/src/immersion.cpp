#include "thinwall/immersion.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace thinwall {

std::optional<std::string> check_embedding(const Multigraph& h, const Multigraph& g, const ImmersionEmbedding& e) {
  const int nh = h.num_vertices();
  if (static_cast<int>(e.branch.size()) != nh) return "branch map has the wrong size";
  std::vector<int> owner(g.num_vertices(), -1);
  for (Vertex v = 0; v < nh; ++v) {
    Vertex x = e.branch[v];
    if (!g.contains(x)) return "branch vertex of '" + h.label(v) + "' is not in the host";
    if (owner[x] != -1) return "branch map is not injective at '" + g.label(x) + "'";
    owner[x] = v;
  }
  std::map<std::pair<Vertex, Vertex>, int> copies;
  std::map<std::pair<Vertex, Vertex>, int> used;
  for (const RoutedEdge& r : e.paths) {
    if (!h.contains(r.hu) || !h.contains(r.hv)) return "routed edge names an unknown pattern vertex";
    auto key = std::minmax(r.hu, r.hv);
    ++copies[key];
    if (!is_path(g, r.path)) return "route of " + h.label(r.hu) + "-" + h.label(r.hv) + " is not a path";
    if (r.path.front() != e.branch[r.hu] || r.path.back() != e.branch[r.hv])
      return "route of " + h.label(r.hu) + "-" + h.label(r.hv) + " has wrong ends";
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
      auto k = std::minmax(r.path[i], r.path[i + 1]);
      if (++used[k] > g.multiplicity(k.first, k.second))
        return "host edge " + g.label(k.first) + "-" + g.label(k.second) + " used beyond its multiplicity";
    }
    if (e.mode == ImmersionMode::Strong)
      for (std::size_t i = 1; i + 1 < r.path.size(); ++i)
        if (owner[r.path[i]] != -1)
          return "route of " + h.label(r.hu) + "-" + h.label(r.hv) + " passes through branch vertex '" +
                 g.label(r.path[i]) + "'";
  }
  for (const Edge& ed : h.edges())
    if (copies[{ed.u, ed.v}] != ed.mult)
      return "pattern edge " + h.label(ed.u) + "-" + h.label(ed.v) + " routed " +
             std::to_string(copies[{ed.u, ed.v}]) + " times, needs " + std::to_string(ed.mult);
  for (auto [k, c] : copies)
    if (h.multiplicity(k.first, k.second) == 0) return "route for a non-edge of the pattern";
  return std::nullopt;
}

namespace {

std::vector<int> class_ids(const Multigraph& g, std::vector<int>* sizes) {
  std::vector<int> id(g.num_vertices(), -1);
  auto cls = two_edge_connected_classes(g);
  for (std::size_t c = 0; c < cls.size(); ++c)
    for (Vertex v : cls[c]) id[v] = static_cast<int>(c);
  if (sizes) {
    sizes->clear();
    for (const auto& c : cls) sizes->push_back(static_cast<int>(c.size()));
  }
  return id;
}

// Degree sequence domination: the i-th largest pattern degree fits the i-th largest host degree.
bool dominated(std::vector<int> need, std::vector<int> have) {
  if (need.size() > have.size()) return false;
  std::sort(need.rbegin(), need.rend());
  std::sort(have.rbegin(), have.rend());
  for (std::size_t i = 0; i < need.size(); ++i)
    if (need[i] > have[i]) return false;
  return true;
}

class Searcher {
 public:
  Searcher(const Multigraph& h, const Multigraph& g, ImmersionMode mode, const ImmersionOptions& opts)
      : h_(h), g_(g), mode_(mode), opts_(opts), nh_(h.num_vertices()), ng_(g.num_vertices()) {
    res_.assign(ng_, std::vector<int>(ng_, 0));
    free_deg_.assign(ng_, 0);
    gnbr_.assign(ng_, {});
    for (Vertex x = 0; x < ng_; ++x)
      for (auto [y, m] : g.adjacency(x)) {
        res_[x][y] = m;
        free_deg_[x] += m;
        gnbr_[x].push_back(y);
      }
    hdeg_.assign(nh_, 0);
    unrouted_.assign(nh_, 0);
    for (Vertex v = 0; v < nh_; ++v) unrouted_[v] = hdeg_[v] = h.degree(v);
    std::vector<int> hsizes;
    hclass_ = class_ids(h, &hsizes);
    for (Vertex v = 0; v < nh_; ++v)
      if (hsizes[hclass_[v]] < 2) hclass_[v] = -1;  // no constraint for singletons
    gclass_ = class_ids(g, nullptr);
    class_target_.assign(hsizes.size(), -1);
    class_count_.assign(hsizes.size(), 0);

    // Descending degree; ties to the most already-ordered neighbours, then the smaller id.
    std::vector<char> done(nh_, 0);
    for (int i = 0; i < nh_; ++i) {
      Vertex best = -1;
      int best_links = -1;
      for (Vertex v = 0; v < nh_; ++v) {
        if (done[v]) continue;
        int links = 0;
        for (auto [u, m] : h.adjacency(v)) links += done[u];
        if (best == -1 || hdeg_[v] > hdeg_[best] || (hdeg_[v] == hdeg_[best] && links > best_links)) {
          best = v;
          best_links = links;
        }
      }
      done[best] = 1;
      order_.push_back(best);
    }
    branch_.assign(nh_, -1);
    owner_.assign(ng_, -1);
    internal_.assign(ng_, 0);
    by_degree_.resize(ng_);
    std::iota(by_degree_.begin(), by_degree_.end(), 0);
    std::stable_sort(by_degree_.begin(), by_degree_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    start_ = std::chrono::steady_clock::now();
  }

  ImmersionResult run() {
    ImmersionResult r;
    bool found = place(0);
    r.nodes = nodes_;
    if (found) {
      r.status = SearchStatus::Present;
      ImmersionEmbedding e;
      e.mode = mode_;
      e.branch = branch_;
      e.paths = routed_;
      r.embedding = std::move(e);
    } else if (aborted_) {
      r.status = SearchStatus::Inconclusive;
      r.reason = abort_reason_;
    } else {
      r.status = SearchStatus::Absent;
      r.reason = "exhaustive search";
    }
    return r;
  }

 private:
  bool tick() {
    if (aborted_) return false;
    ++nodes_;
    if (nodes_ > opts_.node_budget) {
      aborted_ = true;
      abort_reason_ = "node budget exhausted";
      return false;
    }
    if ((nodes_ & 1023) == 0) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (secs > opts_.timeout_seconds) {
        aborted_ = true;
        abort_reason_ = "timeout";
        return false;
      }
    }
    return true;
  }

  bool available(Vertex x) const {
    if (owner_[x] != -1) return false;
    return mode_ == ImmersionMode::Weak || internal_[x] == 0;
  }

  bool feasible(int placed) const {
    for (int i = 0; i < placed; ++i) {
      Vertex v = order_[i];
      if (free_deg_[branch_[v]] < unrouted_[v]) return false;
    }
    std::vector<int> need, have;
    for (int i = placed; i < nh_; ++i) need.push_back(hdeg_[order_[i]]);
    if (need.empty()) return true;
    for (Vertex x = 0; x < ng_; ++x)
      if (available(x)) have.push_back(free_deg_[x]);
    return dominated(need, have);
  }

  bool place(int idx) {
    if (!tick()) return false;
    if (idx == nh_) return true;
    Vertex v = order_[idx];
    for (Vertex c : by_degree_) {
      if (!available(c) || free_deg_[c] < hdeg_[v]) continue;
      int hc = hclass_[v];
      if (hc != -1 && class_target_[hc] != -1 && class_target_[hc] != gclass_[c]) continue;
      branch_[v] = c;
      owner_[c] = v;
      if (hc != -1 && class_count_[hc]++ == 0) class_target_[hc] = gclass_[c];
      // Edge copies towards already placed neighbours.
      std::vector<Vertex> todo;
      for (auto [u, m] : h_.adjacency(v))
        if (branch_[u] != -1 && u != v)
          for (int i = 0; i < m; ++i) todo.push_back(u);
      bool ok = feasible(idx + 1) && route(idx, v, todo, 0);
      if (ok) return true;
      if (hc != -1 && --class_count_[hc] == 0) class_target_[hc] = -1;
      owner_[c] = -1;
      branch_[v] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  void apply(const Path& p, Vertex hu, Vertex hv, int sign) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      res_[p[i]][p[i + 1]] -= sign;
      res_[p[i + 1]][p[i]] -= sign;
      free_deg_[p[i]] -= sign;
      free_deg_[p[i + 1]] -= sign;
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) internal_[p[i]] += sign;
    unrouted_[hu] -= sign;
    unrouted_[hv] -= sign;
  }

  bool route(int idx, Vertex v, const std::vector<Vertex>& todo, std::size_t j) {
    if (j == todo.size()) return place(idx + 1);
    Vertex u = todo[j];
    std::optional<Path> lower;  // parallel copies are routed in lexicographic order
    if (j > 0 && todo[j - 1] == u) lower = routed_.back().path;
    Vertex s = branch_[v], t = branch_[u];
    Path cur{s};
    std::vector<char> on(ng_, 0);
    on[s] = 1;
    bool found = false;
    std::function<void(Vertex, bool)> dfs = [&](Vertex x, bool tight) {
      if (found || aborted_) return;
      for (Vertex y : gnbr_[x]) {
        if (res_[x][y] <= 0 || on[y]) continue;
        bool next_tight = false;
        if (tight && lower) {
          std::size_t k = cur.size();
          if (k < lower->size()) {
            if (y < (*lower)[k]) continue;
            next_tight = (y == (*lower)[k]);
          }
        }
        if (y == t) {
          cur.push_back(y);
          if (!tick()) return;
          apply(cur, v, u, +1);
          routed_.push_back({v, u, cur});
          if (feasible(idx + 1) && route(idx, v, todo, j + 1)) {
            found = true;
            return;
          }
          routed_.pop_back();
          apply(cur, v, u, -1);
          cur.pop_back();
          if (aborted_) return;
          continue;
        }
        if (mode_ == ImmersionMode::Strong && owner_[y] != -1) continue;
        if (free_deg_[y] < 2) continue;
        on[y] = 1;
        cur.push_back(y);
        dfs(y, next_tight);
        if (found) return;
        cur.pop_back();
        on[y] = 0;
      }
    };
    dfs(s, lower.has_value());
    return found;
  }

  const Multigraph& h_;
  const Multigraph& g_;
  ImmersionMode mode_;
  ImmersionOptions opts_;
  int nh_, ng_;
  std::vector<std::vector<int>> res_;
  std::vector<std::vector<Vertex>> gnbr_;
  std::vector<int> free_deg_, hdeg_, unrouted_, hclass_, gclass_, class_target_, class_count_;
  std::vector<Vertex> order_, branch_, owner_, by_degree_;
  std::vector<int> internal_;
  std::vector<RoutedEdge> routed_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::string abort_reason_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

ImmersionResult find_immersion(const Multigraph& h, const Multigraph& g, ImmersionMode mode,
                               const ImmersionOptions& opts) {
  ImmersionResult r;
  if (h.num_vertices() > opts.max_pattern || g.num_vertices() > opts.max_host) {
    r.status = SearchStatus::Inconclusive;
    r.reason = "size cap exceeded (pattern " + std::to_string(h.num_vertices()) + "/" +
               std::to_string(opts.max_pattern) + ", host " + std::to_string(g.num_vertices()) + "/" +
               std::to_string(opts.max_host) + ")";
    return r;
  }
  if (h.num_vertices() > g.num_vertices()) {
    r.status = SearchStatus::Absent;
    r.reason = "pattern has more vertices than host";
    return r;
  }
  if (h.num_edges() > g.num_edges()) {
    r.status = SearchStatus::Absent;
    r.reason = "pattern has more edges than host";
    return r;
  }
  std::vector<int> hd, gd;
  for (Vertex v = 0; v < h.num_vertices(); ++v) hd.push_back(h.degree(v));
  for (Vertex v = 0; v < g.num_vertices(); ++v) gd.push_back(g.degree(v));
  if (!dominated(hd, gd)) {
    r.status = SearchStatus::Absent;
    r.reason = "degree filter";
    return r;
  }
  std::vector<int> hs, gs;
  class_ids(h, &hs);
  class_ids(g, &gs);
  int hmax = hs.empty() ? 0 : *std::max_element(hs.begin(), hs.end());
  int gmax = gs.empty() ? 0 : *std::max_element(gs.begin(), gs.end());
  if (hmax >= 2 && hmax > gmax) {
    r.status = SearchStatus::Absent;
    r.reason = "2-edge-connected class filter";
    return r;
  }
  Searcher s(h, g, mode, opts);
  return s.run();
}

ImmersionEmbedding compose(const Multigraph& h, const Multigraph& g, const ImmersionEmbedding& e1,
                           const Multigraph& k, const ImmersionEmbedding& e2) {
  if (auto err = check_embedding(h, g, e1)) throw GraphError("compose: first embedding invalid: " + *err);
  if (auto err = check_embedding(g, k, e2)) throw GraphError("compose: second embedding invalid: " + *err);
  // Each G edge copy owns one K path; hand them out in order.
  std::map<std::pair<Vertex, Vertex>, std::deque<Path>> pool;
  for (const RoutedEdge& r : e2.paths) {
    Path p = r.path;
    if (r.hu > r.hv) std::reverse(p.begin(), p.end());
    pool[std::minmax(r.hu, r.hv)].push_back(std::move(p));
  }
  ImmersionEmbedding out;
  out.mode = (e1.mode == ImmersionMode::Strong && e2.mode == ImmersionMode::Strong) ? ImmersionMode::Strong
                                                                                      : ImmersionMode::Weak;
  for (Vertex v = 0; v < h.num_vertices(); ++v) out.branch.push_back(e2.branch[e1.branch[v]]);
  for (const RoutedEdge& r : e1.paths) {
    Path walk{e2.branch[r.path.front()]};
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
      Vertex x = r.path[i], y = r.path[i + 1];
      auto& q = pool[std::minmax(x, y)];
      Path seg = q.front();
      q.pop_front();
      if (x > y) std::reverse(seg.begin(), seg.end());
      walk.insert(walk.end(), seg.begin() + 1, seg.end());
    }
    // Shortcut repeated vertices to obtain a path.
    Path p;
    std::map<Vertex, std::size_t> at;
    for (Vertex x : walk) {
      auto it = at.find(x);
      if (it != at.end()) {
        for (std::size_t i = it->second + 1; i < p.size(); ++i) at.erase(p[i]);
        p.resize(it->second + 1);
      } else {
        at[x] = p.size();
        p.push_back(x);
      }
    }
    out.paths.push_back({r.hu, r.hv, std::move(p)});
  }
  return out;
}

Multigraph spider_graph(int k, int n) {
  if (k < 0 || n < 0) throw GraphError("spider_graph: negative parameter");
  Multigraph g;
  g.add_vertex("x");
  for (int i = 1; i <= n; ++i) {
    Vertex v = g.add_vertex("v" + std::to_string(i));
    g.add_edge(0, v, k);
  }
  return g;
}

Multigraph apex_path(int n) {
  if (n < 0) throw GraphError("apex_path: negative length");
  Multigraph g;
  for (int i = 0; i <= n; ++i) g.add_vertex("p" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge(i, i + 1);
  Vertex apex = g.add_vertex("v");
  for (int i = 0; i <= n; ++i) g.add_edge(apex, i);
  return g;
}

ImmersionEmbedding embed_in_spider(const Multigraph& h, int k, int n) {
  if (h.num_vertices() > n)
    throw GraphError("embed_in_spider: " + std::to_string(h.num_vertices()) + " vertices exceed n = " +
                     std::to_string(n));
  if (h.max_degree() > k)
    throw GraphError("embed_in_spider: maximum degree " + std::to_string(h.max_degree()) + " exceeds k = " +
                     std::to_string(k));
  ImmersionEmbedding e;
  e.mode = ImmersionMode::Strong;
  for (Vertex v = 0; v < h.num_vertices(); ++v) e.branch.push_back(v + 1);
  for (const Edge& ed : h.edges())
    for (int i = 0; i < ed.mult; ++i) e.paths.push_back({ed.u, ed.v, {ed.u + 1, 0, ed.v + 1}});
  return e;
}

SpiderSubdivision apex_to_spider_subdivision(int k) {
  if (k < 1) throw GraphError("apex_to_spider_subdivision: k must be positive");
  SpiderSubdivision s;
  s.k = k;
  s.host = apex_path(3 * k - 1);
  s.hub = s.host.at("v");
  // Deleting path edges 3, 6, ... leaves segments (p_{3i}, p_{3i+1}, p_{3i+2}).
  for (int i = 0; i < k; ++i) {
    Vertex a = 3 * i, m = 3 * i + 1, b = 3 * i + 2;
    s.leaves.push_back(m);
    s.legs.push_back({{s.hub, m}, {s.hub, a, m}, {s.hub, b, m}});
  }
  return s;
}

std::optional<std::string> check_spider_subdivision(const Multigraph& host, Vertex hub, const std::vector<Vertex>& leaves,
                                                    const std::vector<std::vector<Path>>& legs) {
  if (!host.contains(hub)) return "hub not in host";
  if (legs.size() != leaves.size()) return "one leg triple per leaf required";
  std::vector<int> seen(host.num_vertices(), 0);
  seen[hub] = 1;
  for (Vertex l : leaves) {
    if (!host.contains(l)) return "leaf not in host";
    if (seen[l]++) return "hub and leaves must be distinct";
  }
  std::vector<Path> all;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (legs[i].size() != 3) return "leaf " + std::to_string(i) + " needs exactly three legs";
    for (const Path& p : legs[i]) {
      if (!is_path(host, p)) return "leg is not a path";
      if (p.front() != hub || p.back() != leaves[i]) return "leg has wrong ends";
      for (std::size_t j = 1; j + 1 < p.size(); ++j)
        if (seen[p[j]]++) return "legs share or cross vertex '" + host.label(p[j]) + "'";
      all.push_back(p);
    }
  }
  if (!respects_multiplicity(host, all)) return "legs reuse an edge";
  return std::nullopt;
}

ImmersionEmbedding subdivision_immersion(const SpiderSubdivision& s) {
  ImmersionEmbedding e;
  e.mode = ImmersionMode::Strong;
  e.branch.push_back(s.hub);
  for (Vertex l : s.leaves) e.branch.push_back(l);
  for (std::size_t i = 0; i < s.leaves.size(); ++i)
    for (const Path& p : s.legs[i]) e.paths.push_back({0, static_cast<Vertex>(i + 1), p});
  return e;
}

PropertyStarReport verify_property_star(const Multigraph& g, const VertexSet& zU_in, const VertexSet& u_in,
                                        std::size_t samples, unsigned seed) {
  VertexSet zU = make_set(zU_in), u = make_set(u_in);
  for (Vertex z : zU)
    if (!set_contains(u, z)) throw GraphError("verify_property_star: zU must be a subset of U");
  for (Vertex x : u)
    if (!g.contains(x)) throw GraphError("verify_property_star: U must be a subset of the graph");
  PropertyStarReport rep;
  auto check = [&](const VertexSet& a, const VertexSet& b) {
    ++rep.pairs_checked;
    auto r = edge_disjoint_paths_capped(g, a, b, static_cast<int>(a.size()), u);
    if (!r.found()) {
      rep.holds = false;
      rep.fail_a = a;
      rep.fail_b = b;
      rep.cut = r.cut;
      return false;
    }
    return true;
  };
  const int m = static_cast<int>(zU.size());
  if (m <= 6) {
    rep.exhaustive = true;
    std::size_t total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (std::size_t code = 0; code < total && rep.holds; ++code) {
      VertexSet a, b;
      std::size_t c = code;
      int first = -1;
      for (int i = 0; i < m; ++i, c /= 3) {
        int lab = static_cast<int>(c % 3);
        if (lab != 0 && first == -1) first = lab;
        if (lab == 1) a.push_back(zU[i]);
        if (lab == 2) b.push_back(zU[i]);
      }
      if (a.empty() || a.size() != b.size() || first != 1) continue;
      check(a, b);
    }
  } else {
    rep.exhaustive = false;
    std::mt19937 rng(seed);
    for (std::size_t s = 0; s < samples && rep.holds; ++s) {
      VertexSet perm = zU;
      std::shuffle(perm.begin(), perm.end(), rng);
      int k = std::uniform_int_distribution<int>(1, m / 2)(rng);
      check(make_set(VertexSet(perm.begin(), perm.begin() + k)), make_set(VertexSet(perm.begin() + k, perm.begin() + 2 * k)));
    }
  }
  return rep;
}

TerminalOrientation orient_by_terminals(const Multigraph& g, const TreeCutDecomposition& d, const VertexSet& zU_in,
                                        std::int64_t alpha) {
  VertexSet zU = make_set(zU_in);
  if (static_cast<std::int64_t>(zU.size()) < 2 * (alpha + 1))
    throw HypothesisFailure("need at least 2(alpha+1) terminals, have " + std::to_string(zU.size()));
  auto adh = adhesion(g, d);
  if (adh.max > alpha) throw HypothesisFailure("adhesion " + std::to_string(adh.max) + " exceeds alpha");
  for (std::size_t i = 0; i < zU.size(); ++i)
    for (std::size_t j = i + 1; j < zU.size(); ++j)
      if (!edge_disjoint_paths(g, {zU[i]}, {zU[j]}, 3).found())
        throw HypothesisFailure("terminals '" + g.label(zU[i]) + "' and '" + g.label(zU[j]) +
                                "' are not joined by 3 edge-disjoint paths");
  TerminalOrientation o;
  std::vector<int> outdeg(d.num_nodes(), 0);
  for (auto [s, t] : d.tree) {
    auto side_s = d.union_of(d.side(s, t));
    std::int64_t on_s = 0;
    for (Vertex z : zU) on_s += set_contains(side_s, z);
    std::int64_t on_t = static_cast<std::int64_t>(zU.size()) - on_s;
    bool big_s = on_s >= alpha + 1, big_t = on_t >= alpha + 1;
    if (big_s == big_t)
      throw HypothesisFailure("tree edge " + std::to_string(s) + "-" + std::to_string(t) +
                              (big_s ? " has alpha+1 terminals on both sides" : " has few terminals on both sides"));
    Node head = big_s ? s : t;
    o.head[std::minmax(s, t)] = head;
    ++outdeg[head == s ? t : s];
  }
  std::vector<Node> sinks;
  for (Node t = 0; t < d.num_nodes(); ++t)
    if (outdeg[t] == 0) sinks.push_back(t);
  if (sinks.size() != 1) throw HypothesisFailure("orientation has " + std::to_string(sinks.size()) + " sinks");
  o.sink = sinks.front();
  return o;
}

nlohmann::json embedding_to_json(const Multigraph& h, const Multigraph& g, const ImmersionEmbedding& e) {
  nlohmann::json j;
  j["mode"] = e.mode == ImmersionMode::Strong ? "strong" : "weak";
  j["branch"] = nlohmann::json::object();
  for (Vertex v = 0; v < h.num_vertices(); ++v) j["branch"][h.label(v)] = g.label(e.branch[v]);
  j["paths"] = nlohmann::json::array();
  for (const RoutedEdge& r : e.paths) {
    nlohmann::json p = nlohmann::json::array();
    for (Vertex x : r.path) p.push_back(g.label(x));
    j["paths"].push_back({{"edge", {h.label(r.hu), h.label(r.hv)}}, {"path", p}});
  }
  return j;
}

}  // namespace thinwall
