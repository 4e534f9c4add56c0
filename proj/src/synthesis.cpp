#include "thinwall/synthesis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "thinwall/reduction.hpp"
#include "thinwall/walls.hpp"

namespace thinwall {

AuxiliaryGraph build_auxiliary(const Multigraph& g, std::int64_t threshold) {
  AuxiliaryGraph r;
  r.threshold = threshold;
  r.a = Multigraph(g.labels());
  for (const Edge& e : g.edges())
    if (e.mult > threshold) r.a.add_edge(e.u, e.v, 1);
  r.components = components(r.a);
  return r;
}

AuxiliaryGraph build_auxiliary(const Multigraph& g, const Parameters& params) {
  return build_auxiliary(g, params.p.convert_to<std::int64_t>());
}

namespace {

int spider_legs(int ell) { return 2 * ell * ell; }
int apex_teeth(int ell) { return 6 * ell * ell; }

// Shortest path from `src` to `dst` using only vertices with allowed[v].
Path bfs_path(const Multigraph& g, Vertex src, Vertex dst, const std::vector<char>& allowed) {
  std::vector<Vertex> parent(g.num_vertices(), -1);
  std::deque<Vertex> q{src};
  parent[src] = src;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    if (x == dst) break;
    for (auto [y, m] : g.adjacency(x))
      if (allowed[y] && parent[y] == -1) {
        parent[y] = x;
        q.push_back(y);
      }
  }
  if (parent[dst] == -1) return {};
  Path p{dst};
  while (p.back() != src) p.push_back(parent[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<char> indicator(int n, const VertexSet& s) {
  std::vector<char> in(n, 0);
  for (Vertex v : s) in[v] = 1;
  return in;
}

ImmersionEmbedding wall_via_spider(const Multigraph& g, int ell, Vertex centre, const std::vector<Path>& legs) {
  const int n = spider_legs(ell);
  if (static_cast<int>(legs.size()) < n) throw GraphError("spider route: fewer than 2 ell^2 legs");
  Multigraph s = spider_graph(3, n);
  ImmersionEmbedding e2;
  e2.branch.push_back(centre);
  for (int i = 0; i < n; ++i) {
    e2.branch.push_back(legs[i].back());
    for (int c = 0; c < 3; ++c) e2.paths.push_back({0, i + 1, legs[i]});
  }
  if (auto err = check_embedding(s, g, e2)) throw ConstructionDefect("spider route: " + *err);
  Multigraph w = build_wall(ell).graph;
  return compose(w, s, embed_in_spider(w, 3, n), g, e2);
}

}  // namespace

ImmersionEmbedding wall_from_spider(const Multigraph& g, int ell, Vertex centre, const VertexSet& leaves) {
  std::vector<Path> legs;
  for (Vertex y : leaves) legs.push_back({centre, y});
  return wall_via_spider(g, ell, centre, legs);
}

ImmersionEmbedding wall_from_apex_path(const Multigraph& g, int ell, Vertex apex, const std::vector<Vertex>& teeth,
                                       const std::vector<Path>& between, const std::vector<Path>& from_apex) {
  const int m = apex_teeth(ell);
  if (static_cast<int>(teeth.size()) < m || static_cast<int>(between.size()) < m - 1 ||
      static_cast<int>(from_apex.size()) < m)
    throw GraphError("apex route: fewer than 6 ell^2 teeth");
  Multigraph p = apex_path(m - 1);
  ImmersionEmbedding e3;
  for (int i = 0; i < m; ++i) e3.branch.push_back(teeth[i]);
  e3.branch.push_back(apex);
  for (int i = 0; i + 1 < m; ++i) e3.paths.push_back({i, i + 1, between[i]});
  for (int i = 0; i < m; ++i) e3.paths.push_back({m, i, from_apex[i]});
  if (auto err = check_embedding(p, g, e3)) throw ConstructionDefect("apex route: " + *err);
  SpiderSubdivision sub = apex_to_spider_subdivision(2 * ell * ell);
  Multigraph s = spider_graph(3, 2 * ell * ell);
  Multigraph w = build_wall(ell).graph;
  ImmersionEmbedding w_in_p = compose(w, s, embed_in_spider(w, 3, 2 * ell * ell), sub.host, subdivision_immersion(sub));
  return compose(w, p, w_in_p, g, e3);
}

namespace {

// An embedding keyed by labels so that it survives re-indexing.
struct LabelledEmbedding {
  std::vector<std::string> branch;
  std::vector<std::tuple<Vertex, Vertex, std::vector<std::string>>> paths;
};

LabelledEmbedding to_labels(const Multigraph& g, const ImmersionEmbedding& e) {
  LabelledEmbedding l;
  for (Vertex v : e.branch) l.branch.push_back(g.label(v));
  for (const RoutedEdge& r : e.paths) {
    std::vector<std::string> p;
    for (Vertex v : r.path) p.push_back(g.label(v));
    l.paths.emplace_back(r.hu, r.hv, std::move(p));
  }
  return l;
}

ImmersionEmbedding from_labels(const Multigraph& g, const LabelledEmbedding& l) {
  ImmersionEmbedding e;
  for (const auto& s : l.branch) e.branch.push_back(g.at(s));
  for (const auto& [hu, hv, p] : l.paths) {
    Path q;
    for (const auto& s : p) q.push_back(g.at(s));
    e.paths.push_back({hu, hv, std::move(q)});
  }
  return e;
}

// Undoes suppressions: a path hop uw that exceeds the multiplicity before the
// step is rerouted through the suppressed vertex.
void lift_through_reduction(const Multigraph& input, const Reduction& r, LabelledEmbedding& e) {
  std::vector<Multigraph> graphs{input};
  for (const ReductionStep& s : r.steps) {
    const Multigraph& h = graphs.back();
    Vertex v = h.at(s.vertex);
    graphs.push_back(s.kind == ReductionStep::Kind::Suppress ? suppress(h, v) : remove_vertices(h, {v}).graph);
  }
  for (std::size_t i = r.steps.size(); i-- > 0;) {
    const ReductionStep& s = r.steps[i];
    if (s.kind != ReductionStep::Kind::Suppress || s.anchor == s.other) continue;
    const Multigraph& before = graphs[i];
    int allowed = before.multiplicity(before.at(s.anchor), before.at(s.other));
    int used = 0;
    std::vector<std::string>* first = nullptr;
    std::size_t at = 0;
    for (auto& [hu, hv, p] : e.paths)
      for (std::size_t j = 0; j + 1 < p.size(); ++j)
        if ((p[j] == s.anchor && p[j + 1] == s.other) || (p[j] == s.other && p[j + 1] == s.anchor)) {
          if (!first) first = &p, at = j;
          ++used;
        }
    if (used > allowed) first->insert(first->begin() + static_cast<long>(at) + 1, s.vertex);
  }
}

// Replaces the marker of the far side by vertices of that side.
void lift_through_split(const SplitNode& parent, bool from_a, LabelledEmbedding& e) {
  const Multigraph& h = parent.reduction.graph;
  const EdgeCut& cut = *parent.cut;
  std::vector<char> far(h.num_vertices(), from_a ? 1 : 0);
  for (Vertex v : cut.side) far[v] = from_a ? 0 : 1;
  const std::string& marker = from_a ? parent.marker_b : parent.marker_a;
  struct CutEdge {
    std::string near, far;
    bool used = false;
  };
  std::vector<CutEdge> crossing;
  for (const Edge& c : cut.crossing) {
    Vertex n = far[c.u] ? c.v : c.u, f = far[c.u] ? c.u : c.v;
    for (int i = 0; i < c.mult; ++i) crossing.push_back({h.label(n), h.label(f)});
  }
  auto take = [&](const std::string& x) {
    for (CutEdge& c : crossing)
      if (!c.used && c.near == x) {
        c.used = true;
        return c.far;
      }
    throw ConstructionDefect("lift: no unused cut edge at '" + x + "'");
  };
  auto far_path = [&](const std::string& y1, const std::string& y2) {
    Path p = bfs_path(h, h.at(y1), h.at(y2), far);
    if (p.empty()) throw ConstructionDefect("lift: far side is not connected");
    std::vector<std::string> out;
    for (Vertex v : p) out.push_back(h.label(v));
    return out;
  };
  auto hb = std::find(e.branch.begin(), e.branch.end(), marker);
  if (hb == e.branch.end()) {
    for (auto& [hu, hv, p] : e.paths) {
      auto it = std::find(p.begin(), p.end(), marker);
      if (it == p.end()) continue;
      if (it == p.begin() || it + 1 == p.end()) throw ConstructionDefect("lift: marker ends a path");
      auto seg = far_path(take(*(it - 1)), take(*(it + 1)));
      it = p.erase(it);
      p.insert(it, seg.begin(), seg.end());
    }
    return;
  }
  std::optional<std::string> z;
  // The first hop fixes the image; later hops walk inside the far side to it.
  auto route = [&](const std::string& x) {
    std::string y = take(x);
    if (!z) {
      z = y;
      return std::vector<std::string>{y};
    }
    return far_path(y, *z);
  };
  for (auto& [hu, hv, p] : e.paths) {
    if (p.front() == marker) {
      auto seg = route(p[1]);
      std::reverse(seg.begin(), seg.end());
      p.erase(p.begin());
      p.insert(p.begin(), seg.begin(), seg.end());
    } else if (p.back() == marker) {
      auto seg = route(p[p.size() - 2]);
      p.pop_back();
      p.insert(p.end(), seg.begin(), seg.end());
    }
  }
  if (!z)
    for (Vertex v = 0; v < h.num_vertices() && !z; ++v)
      if (far[v]) z = h.label(v);
  *hb = *z;
}

struct PieceOutcome {
  std::optional<TreeCutDecomposition> tcd;
  std::optional<WallWitness> wall;  // in the piece's reduced graph
  PieceReport report;
};

class PieceSolver {
 public:
  PieceSolver(const Multigraph& piece, int ell, std::int64_t threshold, const SynthesisOptions& opts,
              std::vector<std::string>& trace)
      : p_(piece), ell_(ell), opts_(opts), trace_(trace), aux_(build_auxiliary(piece, threshold)) {}

  PieceOutcome run() {
    PieceOutcome out;
    out.report.vertices = p_.num_vertices();
    if (p_.num_vertices() <= 1) {
      out.tcd = trivial_decomposition(p_);
      out.report.contracted_vertices = p_.num_vertices();
      return out;
    }
    if ((out.wall = degree_route())) return out;
    for (std::size_t c = 0; c < aux_.components.size(); ++c)
      if ((out.wall = cover_component(c))) return out;
    if ((out.wall = comb_route())) return out;
    decompose(out);
    return out;
  }

 private:
  std::optional<WallWitness> degree_route() {
    const Multigraph& a = aux_.a;
    for (Vertex v = 0; v < a.num_vertices(); ++v) {
      if (a.neighbour_count(v) < spider_legs(ell_)) continue;
      VertexSet leaves;
      for (auto [y, m] : a.adjacency(v)) leaves.push_back(y);
      leaves.resize(spider_legs(ell_));
      trace_.push_back("'" + p_.label(v) + "' has " + std::to_string(a.neighbour_count(v)) +
                       " heavy neighbours: spider route");
      return WallWitness{"degree", wall_from_spider(p_, ell_, v, leaves)};
    }
    return std::nullopt;
  }

  std::optional<WallWitness> cover_component(std::size_t c) {
    const VertexSet& comp = aux_.components[c];
    if (comp.size() == 1) {
      covers_.push_back(LinearForestCover{{}, {{comp[0]}}});
      return std::nullopt;
    }
    auto sub = induced_subgraph(aux_.a, comp);
    CoverResult r = linear_forest_cover(sub.graph, spider_legs(ell_));
    if (r.minor) {
      VertexSet branch, nbrs;
      for (Vertex v : r.minor->branch) branch.push_back(sub.old_of_new[v]);
      for (Vertex v : r.minor->neighbours) nbrs.push_back(sub.old_of_new[v]);
      trace_.push_back("heavy component of '" + p_.label(comp[0]) + "' has a K_{1," +
                       std::to_string(spider_legs(ell_)) + "} minor");
      return WallWitness{"star-minor", star_minor_wall(make_set(branch), make_set(nbrs))};
    }
    LinearForestCover cover;
    for (Vertex v : r.cover->x) cover.x.push_back(sub.old_of_new[v]);
    cover.x = make_set(cover.x);
    for (const Path& q : r.cover->paths) {
      Path mapped;
      for (Vertex v : q) mapped.push_back(sub.old_of_new[v]);
      cover.paths.push_back(std::move(mapped));
    }
    std::sort(cover.paths.begin(), cover.paths.end());
    covers_.push_back(std::move(cover));
    return std::nullopt;
  }

  ImmersionEmbedding star_minor_wall(const VertexSet& branch, const VertexSet& nbrs) {
    const Multigraph& a = aux_.a;
    auto in_branch = indicator(a.num_vertices(), branch);
    Vertex centre = branch.front();
    std::vector<Path> legs;
    for (Vertex y : nbrs) {
      if (static_cast<int>(legs.size()) == spider_legs(ell_)) break;
      Vertex d = -1;
      for (auto [x, m] : a.adjacency(y))
        if (in_branch[x]) {
          d = x;
          break;
        }
      Path leg = bfs_path(a, centre, d, in_branch);
      leg.push_back(y);
      legs.push_back(std::move(leg));
    }
    return wall_via_spider(p_, ell_, centre, legs);
  }

  std::optional<WallWitness> comb_route() {
    const Multigraph& a = aux_.a;
    const int t = apex_teeth(ell_), s = spider_legs(ell_);
    for (std::size_t i = 0; i < aux_.components.size(); ++i) {
      const VertexSet& c = aux_.components[i];
      if (static_cast<int>(c.size()) < t) continue;
      auto in_c = indicator(p_.num_vertices(), c);
      for (std::size_t j = 0; j < aux_.components.size(); ++j) {
        if (i == j) continue;
        const VertexSet& c2 = aux_.components[j];
        auto in_c2 = indicator(p_.num_vertices(), c2);
        VertexSet u;
        for (Vertex x : c)
          for (auto [y, m] : p_.adjacency(x))
            if (in_c2[y]) {
              u.push_back(x);
              break;
            }
        if (static_cast<int>(u.size()) < t) continue;
        auto sub = induced_subgraph(a, c);
        VertexSet lu;
        for (Vertex x : u) lu.push_back(sub.new_of_old[x]);
        StarCombResult r = find_star_or_comb(sub.graph, make_set(lu), s, t);
        auto back = [&](Path q) {
          for (Vertex& v : q) v = sub.old_of_new[v];
          return q;
        };
        if (r.star) {
          std::vector<Path> legs;
          for (const Path& q : r.star->legs) legs.push_back(back(q));
          trace_.push_back("star in the heavy component of '" + p_.label(c[0]) + "'");
          return WallWitness{"star", wall_via_spider(p_, ell_, sub.old_of_new[r.star->centre], legs)};
        }
        if (!r.comb) {
          if (!r.exhaustive) trace_.push_back("comb search budget exhausted; continuing");
          continue;
        }
        Path spine = back(r.comb->spine);
        std::vector<Path> legs;
        for (const Path& q : r.comb->legs) legs.push_back(back(q));
        std::map<Vertex, std::size_t> pos;
        for (std::size_t k = 0; k < spine.size(); ++k) pos[spine[k]] = k;
        std::vector<Vertex> teeth;
        std::vector<Path> between, from_apex;
        Vertex apex = c2.front();
        for (int k = 0; k < t; ++k) {
          teeth.push_back(legs[k].back());
          Vertex w = -1;
          for (auto [y, m] : p_.adjacency(teeth.back()))
            if (in_c2[y]) {
              w = y;
              break;
            }
          Path q = bfs_path(a, apex, w, in_c2);
          q.push_back(teeth.back());
          from_apex.push_back(std::move(q));
          if (k + 1 < t) {
            Path b(legs[k].rbegin(), legs[k].rend());
            for (std::size_t z = pos[legs[k].front()] + 1; z <= pos[legs[k + 1].front()]; ++z) b.push_back(spine[z]);
            b.insert(b.end(), legs[k + 1].begin() + 1, legs[k + 1].end());
            between.push_back(std::move(b));
          }
        }
        trace_.push_back("comb in the heavy component of '" + p_.label(c[0]) + "' with apex side '" +
                         p_.label(apex) + "'");
        return WallWitness{"comb", wall_from_apex_path(p_, ell_, apex, teeth, between, from_apex)};
      }
    }
    return std::nullopt;
  }

  void decompose(PieceOutcome& out) {
    PieceReport& rep = out.report;
    auto con = contract(p_, aux_.components);
    const Multigraph& gc = con.graph;
    rep.contracted_vertices = gc.num_vertices();
    TreewidthResult tw = exact_treewidth(gc, opts_.treewidth_cap);
    TdToTcdReport conv = td_to_tcd(gc, tw.td);
    rep.treewidth = conv.width;
    rep.max_degree = conv.max_degree;
    rep.adhesion = conv.adhesion;
    rep.adhesion_bound = conv.adhesion_bound;
    rep.torso_max = conv.torso_max;
    rep.torso_bound = conv.torso_bound;
    std::vector<int> part_of_new(gc.num_vertices(), -1);
    for (std::size_t i = 0; i < con.vertex_of_part.size(); ++i) part_of_new[con.vertex_of_part[i]] = static_cast<int>(i);
    TreeCutDecomposition d;
    d.tree = conv.tcd.tree;
    for (const VertexSet& part : conv.tcd.parts) {
      VertexSet lifted;
      for (Vertex v : part) {
        const VertexSet& comp = aux_.components[part_of_new[v]];
        lifted.insert(lifted.end(), comp.begin(), comp.end());
      }
      d.parts.push_back(make_set(std::move(lifted)));
    }
    if (auto errs = validate(p_, d); !errs.empty())
      throw ConstructionDefect("lifting contracted parts: " + errs.front());
    rep.constructive_alpha = adhesion(p_, d).max;
    for (Node t = 0; t < d.num_nodes(); ++t) {
      Torso tor = torso(p_, d, t);
      Multigraph centre = reduce_torso(tor, CentreMode::ThreeCentre);
      if (centre.num_vertices() != tor.graph.num_vertices() || centre.num_edges() != tor.graph.num_edges())
        rep.torsos_equal_centres = false;
      if ((out.wall = apex_on_path(d, t))) return;
      rep.constructive_alpha = std::max(rep.constructive_alpha, constructive_witness(d, tor));
    }
    out.tcd = std::move(d);
  }

  // Deletion set and enumeration read off the covers of the node's components.
  std::int64_t constructive_witness(const TreeCutDecomposition& d, const Torso& tor) {
    const Multigraph& h = tor.graph;
    auto in_part = indicator(p_.num_vertices(), d.parts[tor.node]);
    AlmostThinWitness w;
    for (std::size_t c = 0; c < aux_.components.size(); ++c) {
      if (!in_part[aux_.components[c].front()]) continue;
      for (Vertex x : covers_[c].x) w.deleted.push_back(tor.torso_of[x]);
      for (const Path& q : covers_[c].paths)
        for (Vertex v : q) w.order.push_back(tor.torso_of[v]);
    }
    for (const auto& [v, s] : tor.peripheral) w.order.push_back(v);
    w.deleted = make_set(w.deleted);
    auto sub = remove_vertices(h, w.deleted);
    std::vector<Vertex> local;
    for (Vertex v : w.order) local.push_back(sub.new_of_old[v]);
    w.jump_profile = jump_profile(sub.graph, local);
    std::int64_t alpha = static_cast<std::int64_t>(w.deleted.size());
    for (Vertex x : w.deleted) alpha = std::max<std::int64_t>(alpha, h.neighbour_count(x));
    for (std::int64_t j : w.jump_profile) alpha = std::max(alpha, j);
    if (!valid_almost_thin_witness(h, alpha, w)) throw ConstructionDefect("constructive witness rejected");
    return alpha;
  }

  // A deleted vertex with 6 ell^2 neighbours on one cover path yields the apex path.
  std::optional<WallWitness> apex_on_path(const TreeCutDecomposition& d, Node t) {
    const int m = apex_teeth(ell_);
    auto in_part = indicator(p_.num_vertices(), d.parts[t]);
    for (std::size_t c = 0; c < aux_.components.size(); ++c) {
      if (!in_part[aux_.components[c].front()]) continue;
      for (Vertex x : covers_[c].x)
        for (std::size_t c2 = 0; c2 < aux_.components.size(); ++c2) {
          if (!in_part[aux_.components[c2].front()]) continue;
          for (const Path& q : covers_[c2].paths) {
            std::vector<std::size_t> hits;
            for (std::size_t i = 0; i < q.size(); ++i)
              if (p_.multiplicity(x, q[i]) > 0) hits.push_back(i);
            if (static_cast<int>(hits.size()) < m) continue;
            std::vector<Vertex> teeth;
            std::vector<Path> between, from_apex;
            for (int k = 0; k < m; ++k) {
              teeth.push_back(q[hits[k]]);
              from_apex.push_back({x, q[hits[k]]});
              if (k + 1 < m) between.emplace_back(q.begin() + static_cast<long>(hits[k]),
                                                  q.begin() + static_cast<long>(hits[k + 1]) + 1);
            }
            trace_.push_back("deleted vertex '" + p_.label(x) + "' sees " + std::to_string(hits.size()) +
                             " vertices of one cover path");
            return WallWitness{"apex-path", wall_from_apex_path(p_, ell_, x, teeth, between, from_apex)};
          }
        }
    }
    return std::nullopt;
  }

  const Multigraph& p_;
  int ell_;
  const SynthesisOptions& opts_;
  std::vector<std::string>& trace_;
  AuxiliaryGraph aux_;
  std::vector<LinearForestCover> covers_;  // per component of A, in P ids
};

}  // namespace

SynthesisResult synthesize(const Multigraph& g, int ell, const SynthesisOptions& opts) {
  if (ell < 2) throw GraphError("synthesize: ell must be at least 2");
  SynthesisResult res;
  res.params = make_parameters(ell, opts.constants);
  auto& trace = res.trace;
  const Multigraph wall = build_wall(ell).graph;
  std::optional<SearchStatus> direct;
  try {
    if (opts.direct_search) {
      ImmersionResult r = find_immersion(wall, g, ImmersionMode::Strong, opts.search);
      direct = r.status;
      if (r.status == SearchStatus::Present) {
        trace.push_back("direct search found W_" + std::to_string(ell) + " after " + std::to_string(r.nodes) +
                        " nodes");
        res.wall = WallWitness{"direct-search", *r.embedding};
        res.outcome = SynthesisResult::Outcome::Wall;
        return res;
      }
      trace.push_back(std::string("direct search: ") +
                      (r.status == SearchStatus::Absent ? "absent" : "inconclusive") +
                      (r.reason.empty() ? "" : " (" + r.reason + ")"));
    }

    SplitTree split = split_3ec(g);
    trace.push_back("split into " + std::to_string(split.pieces.size()) + " piece(s)");
    std::vector<int> parent(split.nodes.size(), -1);
    std::vector<char> is_a(split.nodes.size(), 0);
    for (std::size_t i = 0; i < split.nodes.size(); ++i)
      if (!split.nodes[i].is_piece()) {
        parent[split.nodes[i].child_a] = static_cast<int>(i);
        parent[split.nodes[i].child_b] = static_cast<int>(i);
        is_a[split.nodes[i].child_a] = 1;
      }
    const std::int64_t threshold = res.params.p.convert_to<std::int64_t>();
    std::map<int, TreeCutDecomposition> piece_tcds;
    for (int id : split.pieces) {
      const SplitNode& node = split.nodes[id];
      PieceSolver solver(node.reduction.graph, ell, threshold, opts, trace);
      PieceOutcome po = solver.run();
      po.report.split_node = id;
      res.pieces.push_back(po.report);
      if (po.wall) {
        LabelledEmbedding le = to_labels(node.reduction.graph, po.wall->embedding);
        for (int cur = id;; cur = parent[cur]) {
          lift_through_reduction(split.nodes[cur].input, split.nodes[cur].reduction, le);
          if (parent[cur] == -1) break;
          lift_through_split(split.nodes[parent[cur]], is_a[cur], le);
        }
        ImmersionEmbedding e = from_labels(g, le);
        if (auto err = check_embedding(wall, g, e)) throw ConstructionDefect("lifted wall invalid: " + *err);
        if (direct == SearchStatus::Absent)
          throw ConstructionDefect("route '" + po.wall->route + "' built a wall the exhaustive search ruled out");
        res.wall = WallWitness{po.wall->route, std::move(e)};
        res.outcome = SynthesisResult::Outcome::Wall;
        return res;
      }
      trace.push_back("piece " + std::to_string(id) + ": " + std::to_string(po.report.vertices) + " vertices, " +
                      std::to_string(po.report.contracted_vertices) + " after contraction, tree-width " +
                      std::to_string(po.report.treewidth));
      piece_tcds[id] = *po.tcd;
    }

    TreeCutDecomposition d = lift_split(split, piece_tcds);
    std::int64_t alpha = adhesion(g, d).max;
    for (Node t = 0; t < d.num_nodes(); ++t) {
      Multigraph c = reduce_torso(torso(g, d, t), CentreMode::ThreeCentre);
      alpha = std::max(alpha, min_almost_thinness(c, opts.thin_cap).first);
    }
    CertifyResult cr = certify_width(g, d, alpha, CentreMode::ThreeCentre, opts.thin_cap);
    if (!cr.ok()) throw ConstructionDefect("certify_width rejected alpha " + std::to_string(alpha) + ": " +
                                           cr.violation->detail);
    if (!check_certificate(g, d, *cr.certificate)) throw ConstructionDefect("certificate failed the re-check");
    trace.push_back("certified at alpha " + std::to_string(alpha));
    res.instance_alpha = alpha;
    res.decomposition = std::move(d);
    res.certificate = std::move(cr.certificate);
    res.outcome = SynthesisResult::Outcome::Certificate;
  } catch (const CapExceeded& e) {
    trace.push_back(std::string("cap exceeded: ") + e.what());
    res.outcome = SynthesisResult::Outcome::Partial;
  } catch (const ConstructionDefect& e) {
    trace.push_back(std::string("construction defect: ") + e.what());
    res.outcome = SynthesisResult::Outcome::Partial;
  }
  return res;
}

nlohmann::json synthesis_to_json(const Multigraph& g, const SynthesisResult& r) {
  nlohmann::json j;
  switch (r.outcome) {
    case SynthesisResult::Outcome::Certificate: j["outcome"] = "certificate"; break;
    case SynthesisResult::Outcome::Wall: j["outcome"] = "wall"; break;
    case SynthesisResult::Outcome::Partial: j["outcome"] = "partial"; break;
  }
  j["parameters"] = parameters_to_json(r.params);
  if (r.decomposition) {
    j["decomposition"] = tcd_to_json(g, *r.decomposition);
    j["alpha"] = r.instance_alpha;
  }
  if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
  if (r.wall) {
    j["wall"] = {{"route", r.wall->route},
                 {"embedding", embedding_to_json(build_wall(r.params.ell).graph, g, r.wall->embedding)}};
  }
  j["pieces"] = nlohmann::json::array();
  for (const PieceReport& p : r.pieces)
    j["pieces"].push_back({{"split_node", p.split_node},
                           {"vertices", p.vertices},
                           {"contracted_vertices", p.contracted_vertices},
                           {"treewidth", p.treewidth},
                           {"max_degree", p.max_degree},
                           {"adhesion", p.adhesion},
                           {"adhesion_bound", p.adhesion_bound},
                           {"torso_max", p.torso_max},
                           {"torso_bound", p.torso_bound},
                           {"torsos_equal_centres", p.torsos_equal_centres},
                           {"constructive_alpha", p.constructive_alpha}});
  j["trace"] = r.trace;
  return j;
}

}  // namespace thinwall
