#include "thinwall/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace thinwall {

Multigraph::Multigraph(std::vector<std::string> labels) {
  for (auto& l : labels) add_vertex(std::move(l));
}

Multigraph Multigraph::with_vertices(int n) {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  return g;
}

Vertex Multigraph::add_vertex(std::string label) {
  if (index_.count(label)) throw GraphError("duplicate vertex label '" + label + "'");
  Vertex v = num_vertices();
  index_.emplace(label, v);
  labels_.push_back(std::move(label));
  adj_.emplace_back();
  return v;
}

void Multigraph::check(Vertex v) const {
  if (!contains(v)) throw GraphError("unknown vertex " + std::to_string(v));
}

void Multigraph::add_edge(Vertex u, Vertex v, int mult) {
  check(u);
  check(v);
  if (u == v) throw GraphError("loop at vertex '" + labels_[u] + "'");
  if (mult < 0) throw GraphError("negative multiplicity");
  if (mult == 0) return;
  adj_[u][v] += mult;
  adj_[v][u] += mult;
  edge_total_ += mult;
}

void Multigraph::set_multiplicity(Vertex u, Vertex v, int mult) {
  check(u);
  check(v);
  if (u == v) throw GraphError("loop at vertex '" + labels_[u] + "'");
  if (mult < 0) throw GraphError("negative multiplicity");
  edge_total_ -= multiplicity(u, v);
  if (mult == 0) {
    adj_[u].erase(v);
    adj_[v].erase(u);
  } else {
    adj_[u][v] = mult;
    adj_[v][u] = mult;
    edge_total_ += mult;
  }
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  check(u);
  check(v);
  auto it = adj_[u].find(v);
  return it == adj_[u].end() ? 0 : it->second;
}

int Multigraph::degree(Vertex v) const {
  check(v);
  int d = 0;
  for (auto [w, m] : adj_[v]) d += m;
  return d;
}

int Multigraph::neighbour_count(Vertex v) const {
  check(v);
  return static_cast<int>(adj_[v].size());
}

const std::map<Vertex, int>& Multigraph::adjacency(Vertex v) const {
  check(v);
  return adj_[v];
}

int Multigraph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
  return d;
}

const std::string& Multigraph::label(Vertex v) const {
  check(v);
  return labels_[v];
}

std::optional<Vertex> Multigraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Multigraph::at(std::string_view label) const {
  auto v = find(label);
  if (!v) throw GraphError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

std::vector<Edge> Multigraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (auto [v, m] : adj_[u])
      if (u < v) out.push_back({u, v, m});
  return out;
}

bool Multigraph::same_labelled(const Multigraph& other) const {
  if (num_vertices() != other.num_vertices() || num_edges() != other.num_edges()) return false;
  for (Vertex v = 0; v < num_vertices(); ++v)
    if (!other.find(labels_[v])) return false;
  for (const Edge& e : edges()) {
    Vertex a = *other.find(labels_[e.u]);
    Vertex b = *other.find(labels_[e.v]);
    if (other.multiplicity(a, b) != e.mult) return false;
  }
  return true;
}

VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet all_vertices(const Multigraph& g) {
  VertexSet out(g.num_vertices());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

int degree(const Multigraph& g, Vertex v) { return g.degree(v); }

EdgeCut edge_cut(const Multigraph& g, const VertexSet& a) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : a) {
    if (!g.contains(v)) throw GraphError("cut side is not a subset of the graph");
    in[v] = 1;
  }
  EdgeCut cut;
  cut.side = make_set(a);
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) {
      cut.crossing.push_back(e);
      cut.size += e.mult;
    }
  }
  return cut;
}

ContractResult contract(const Multigraph& g, const std::vector<VertexSet>& parts,
                        const std::vector<std::string>& part_labels) {
  const int n = g.num_vertices();
  ContractResult r;
  r.part_of_vertex.assign(n, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw GraphError("contract: empty part");
    for (Vertex v : parts[p]) {
      if (!g.contains(v)) throw GraphError("contract: unknown vertex");
      if (r.part_of_vertex[v] != -1) throw GraphError("contract: parts overlap");
      r.part_of_vertex[v] = static_cast<Vertex>(p);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (r.part_of_vertex[v] == -1) throw GraphError("contract: parts do not cover the graph");
  if (!part_labels.empty() && part_labels.size() != parts.size())
    throw GraphError("contract: label count mismatch");

  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::string l = part_labels.empty() ? g.label(*std::min_element(parts[p].begin(), parts[p].end()))
                                        : part_labels[p];
    r.vertex_of_part.push_back(r.graph.add_vertex(std::move(l)));
  }
  for (const Edge& e : g.edges()) {
    Vertex a = r.part_of_vertex[e.u], b = r.part_of_vertex[e.v];
    if (a != b) r.graph.add_edge(r.vertex_of_part[a], r.vertex_of_part[b], e.mult);
  }
  return r;
}

SubgraphResult remove_vertices(const Multigraph& g, const VertexSet& drop) {
  SubgraphResult r;
  r.new_of_old.assign(g.num_vertices(), -1);
  std::vector<char> gone(g.num_vertices(), 0);
  for (Vertex v : drop) {
    if (!g.contains(v)) throw GraphError("remove_vertices: unknown vertex");
    gone[v] = 1;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (gone[v]) continue;
    r.new_of_old[v] = r.graph.add_vertex(g.label(v));
    r.old_of_new.push_back(v);
  }
  for (const Edge& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) r.graph.add_edge(r.new_of_old[e.u], r.new_of_old[e.v], e.mult);
  return r;
}

SubgraphResult induced_subgraph(const Multigraph& g, const VertexSet& keep) {
  std::vector<char> k(g.num_vertices(), 0);
  for (Vertex v : keep) {
    if (!g.contains(v)) throw GraphError("induced_subgraph: unknown vertex");
    k[v] = 1;
  }
  VertexSet drop;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!k[v]) drop.push_back(v);
  return remove_vertices(g, drop);
}

Multigraph suppress(const Multigraph& g, Vertex v) {
  if (!g.contains(v)) throw GraphError("suppress: unknown vertex");
  if (g.degree(v) != 2)
    throw GraphError("suppress: vertex '" + g.label(v) + "' has degree " + std::to_string(g.degree(v)));
  std::vector<Vertex> ends;
  for (auto [w, m] : g.adjacency(v))
    for (int i = 0; i < m; ++i) ends.push_back(w);
  auto sub = remove_vertices(g, {v});
  if (ends[0] != ends[1]) sub.graph.add_edge(sub.new_of_old[ends[0]], sub.new_of_old[ends[1]], 1);
  return std::move(sub.graph);
}

std::vector<VertexSet> components(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    VertexSet c;
    std::vector<Vertex> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      c.push_back(x);
      for (auto [y, m] : g.adjacency(x)) {
        if (comp[y] == -1) {
          comp[y] = comp[s];
          stack.push_back(y);
        }
      }
    }
    out.push_back(make_set(std::move(c)));
  }
  return out;
}

bool is_connected(const Multigraph& g) { return components(g).size() <= 1; }

std::vector<VertexSet> two_edge_connected_classes(const Multigraph& g) {
  // Bridges: simple pairs of multiplicity 1 that are tree edges with low[child] > disc[parent].
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<Vertex, Vertex>> bridges;
  int timer = 0;
  struct Frame {
    Vertex v, parent;
    std::map<Vertex, int>::const_iterator it;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    std::vector<Frame> st;
    disc[s] = low[s] = timer++;
    st.push_back({s, -1, g.adjacency(s).begin()});
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.it != g.adjacency(f.v).end()) {
        auto [w, m] = *f.it;
        ++f.it;
        if (w == f.parent && m == 1) continue;  // the tree edge itself
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          st.push_back({w, f.v, g.adjacency(w).begin()});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Vertex v = f.v, p = f.parent;
        st.pop_back();
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridges.push_back({p, v});
        }
      }
    }
  }
  Multigraph h = g;
  for (auto [a, b] : bridges) h.set_multiplicity(a, b, 0);
  return components(h);
}

Multigraph underlying_simple(const Multigraph& g) {
  Multigraph h(g.labels());
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v, 1);
  return h;
}

EdgeCut min_edge_cut(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n < 2) throw GraphError("min_edge_cut: fewer than 2 vertices");
  auto comps = components(g);
  if (comps.size() > 1) return edge_cut(g, comps[0]);

  // Stoer-Wagner on a dense weight matrix; merged groups track the original vertices.
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
  for (const Edge& e : g.edges()) w[e.u][e.v] = w[e.v][e.u] = e.mult;
  std::vector<VertexSet> group(n);
  for (Vertex v = 0; v < n; ++v) group[v] = {v};
  std::vector<char> merged(n, 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  VertexSet best_side;

  for (int phase = n; phase > 1; --phase) {
    std::vector<std::int64_t> key(n, 0);
    std::vector<char> added(n, 0);
    Vertex prev = -1, last = -1;
    for (int step = 0; step < phase; ++step) {
      Vertex sel = -1;
      for (Vertex v = 0; v < n; ++v)
        if (!merged[v] && !added[v] && (sel == -1 || key[v] > key[sel])) sel = v;
      added[sel] = 1;
      prev = last;
      last = sel;
      if (step == phase - 1) {
        if (key[sel] < best) {
          best = key[sel];
          best_side = group[sel];
        }
      }
      for (Vertex v = 0; v < n; ++v)
        if (!merged[v] && !added[v]) key[v] += w[sel][v];
    }
    // merge last into prev
    for (Vertex v = 0; v < n; ++v) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0;
    group[prev].insert(group[prev].end(), group[last].begin(), group[last].end());
    merged[last] = 1;
  }
  return edge_cut(g, make_set(best_side));
}

}  // namespace thinwall
