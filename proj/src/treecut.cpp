#include "thinwall/treecut.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace thinwall {

std::vector<std::vector<Node>> TreeCutDecomposition::tree_adjacency() const {
  std::vector<std::vector<Node>> adj(parts.size());
  for (auto [s, t] : tree) {
    adj.at(s).push_back(t);
    adj.at(t).push_back(s);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<Node> TreeCutDecomposition::side(Node from, Node to) const {
  auto adj = tree_adjacency();
  std::vector<char> seen(parts.size(), 0);
  seen.at(from) = 1;
  seen.at(to) = 1;
  std::vector<Node> out{from}, stack{from};
  while (!stack.empty()) {
    Node x = stack.back();
    stack.pop_back();
    for (Node y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet TreeCutDecomposition::union_of(const std::vector<Node>& nodes) const {
  VertexSet u;
  for (Node t : nodes) u.insert(u.end(), parts.at(t).begin(), parts.at(t).end());
  return make_set(std::move(u));
}

Node TreeCutDecomposition::node_of(Vertex v) const {
  for (Node t = 0; t < num_nodes(); ++t)
    if (set_contains(parts[t], v)) return t;
  return -1;
}

TreeCutDecomposition trivial_decomposition(const Multigraph& g) {
  TreeCutDecomposition d;
  d.parts.push_back(all_vertices(g));
  return d;
}

std::vector<std::string> validate(const Multigraph& g, const TreeCutDecomposition& d) {
  std::vector<std::string> bad;
  const int n = d.num_nodes();
  if (n == 0) bad.push_back("tree has no nodes");
  if (n > 0 && static_cast<int>(d.tree.size()) != n - 1)
    bad.push_back("tree has " + std::to_string(d.tree.size()) + " edges on " + std::to_string(n) + " nodes");
  bool ends_ok = true;
  std::set<TreeEdge> seen_edges;
  for (auto [s, t] : d.tree) {
    if (s < 0 || t < 0 || s >= n || t >= n || s == t) {
      bad.push_back("bad tree edge " + std::to_string(s) + "-" + std::to_string(t));
      ends_ok = false;
    } else if (!seen_edges.insert(std::minmax(s, t)).second) {
      bad.push_back("repeated tree edge " + std::to_string(s) + "-" + std::to_string(t));
    }
  }
  if (ends_ok && n > 0) {
    // Connected with n-1 edges means a tree.
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (auto [s, t] : d.tree) parent[root(s)] = root(t);
    for (int i = 1; i < n; ++i)
      if (root(i) != root(0)) {
        bad.push_back("tree is not connected");
        break;
      }
  }
  std::vector<int> owner(g.num_vertices(), -1);
  for (Node t = 0; t < n; ++t)
    for (Vertex v : d.parts[t]) {
      if (!g.contains(v)) {
        bad.push_back("node " + std::to_string(t) + " holds unknown vertex " + std::to_string(v));
        continue;
      }
      if (owner[v] != -1)
        bad.push_back("vertex '" + g.label(v) + "' in nodes " + std::to_string(owner[v]) + " and " +
                      std::to_string(t));
      else
        owner[v] = t;
    }
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (owner[v] == -1) bad.push_back("vertex '" + g.label(v) + "' is in no part");
  return bad;
}

namespace {
void require_valid(const Multigraph& g, const TreeCutDecomposition& d) {
  auto bad = validate(g, d);
  if (!bad.empty()) throw GraphError("invalid tree-cut decomposition: " + bad.front());
}
}  // namespace

AdhesionReport adhesion(const Multigraph& g, const TreeCutDecomposition& d) {
  require_valid(g, d);
  AdhesionReport r;
  for (auto [s, t] : d.tree) {
    auto size = edge_cut(g, d.union_of(d.side(s, t))).size;
    r.per_edge[std::minmax(s, t)] = size;
    r.max = std::max(r.max, size);
  }
  return r;
}

std::string peripheral_label(Node t, Node s) { return "@" + std::to_string(t) + ":" + std::to_string(s); }

Torso torso(const Multigraph& g, const TreeCutDecomposition& d, Node t) {
  require_valid(g, d);
  if (t < 0 || t >= d.num_nodes()) throw GraphError("torso: unknown node " + std::to_string(t));
  Torso r;
  r.node = t;
  r.torso_of.assign(g.num_vertices(), -1);
  for (Vertex v : d.parts[t]) {
    r.torso_of[v] = r.graph.add_vertex(g.label(v));
    r.core.push_back(r.torso_of[v]);
  }
  const auto adj = d.tree_adjacency();
  for (Node s : adj[t]) {
    Vertex p = r.graph.add_vertex(peripheral_label(t, s));
    r.peripheral[p] = s;
    for (Vertex v : d.union_of(d.side(s, t))) r.torso_of[v] = p;
  }
  for (const Edge& e : g.edges()) {
    Vertex a = r.torso_of[e.u], b = r.torso_of[e.v];
    if (a != b) r.graph.add_edge(a, b, e.mult);
  }
  return r;
}

ThreeCentre three_centre(const Multigraph& h, const VertexSet& protected_set, std::mt19937* rng) {
  for (Vertex v : protected_set)
    if (!h.contains(v)) throw GraphError("three_centre: protected vertex not in graph");
  const int n = h.num_vertices();
  Multigraph w = h;
  std::vector<char> alive(n, 1), prot(n, 0);
  for (Vertex v : protected_set) prot[v] = 1;
  while (true) {
    std::vector<Vertex> cand;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && !prot[v] && w.degree(v) <= 2) cand.push_back(v);
    if (cand.empty()) break;
    Vertex v = cand.front();
    if (rng) v = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(*rng)];
    std::vector<Vertex> ends;
    for (auto [u, m] : w.adjacency(v))
      for (int i = 0; i < m; ++i) ends.push_back(u);
    for (Vertex u : std::set<Vertex>(ends.begin(), ends.end())) w.set_multiplicity(v, u, 0);
    if (ends.size() == 2 && ends[0] != ends[1]) w.add_edge(ends[0], ends[1]);
    alive[v] = 0;
  }
  VertexSet dead;
  for (Vertex v = 0; v < n; ++v)
    if (!alive[v]) dead.push_back(v);
  auto sub = remove_vertices(w, dead);
  ThreeCentre c;
  c.graph = std::move(sub.graph);
  for (Vertex v : make_set(protected_set)) c.protected_.push_back(sub.new_of_old[v]);
  return c;
}

Multigraph reduce_torso(const Torso& t, CentreMode mode) {
  switch (mode) {
    case CentreMode::ThreeCentre:
      return three_centre(t.graph, t.core).graph;
    case CentreMode::Torso:
      return t.graph;
    case CentreMode::PeripheralLeafDeletion: {
      Multigraph w = t.graph;
      std::vector<char> gone(w.num_vertices(), 0);
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto [p, s] : t.peripheral)
          if (!gone[p] && w.degree(p) <= 1) {
            for (auto [u, m] : std::map<Vertex, int>(w.adjacency(p))) w.set_multiplicity(p, u, 0);
            gone[p] = 1;
            changed = true;
          }
      }
      VertexSet drop;
      for (Vertex v = 0; v < w.num_vertices(); ++v)
        if (gone[v]) drop.push_back(v);
      return remove_vertices(w, drop).graph;
    }
  }
  throw std::logic_error("unknown centre mode");
}

CertifyResult certify_width(const Multigraph& g, const TreeCutDecomposition& d, std::int64_t alpha,
                            CentreMode mode, int cap) {
  CertifyResult res;
  auto bad = validate(g, d);
  if (!bad.empty()) {
    res.violation = WidthViolation{WidthViolation::Kind::Invalid, std::nullopt, std::nullopt, bad.front()};
    return res;
  }
  WidthCertificate cert;
  cert.alpha = alpha;
  cert.adhesion = adhesion(g, d);
  for (auto [e, size] : cert.adhesion.per_edge)
    if (size > alpha) {
      res.violation = WidthViolation{WidthViolation::Kind::Adhesion, e, std::nullopt,
                                     "adhesion " + std::to_string(size) + " exceeds " + std::to_string(alpha)};
      return res;
    }
  for (Node t = 0; t < d.num_nodes(); ++t) {
    Multigraph reduced = reduce_torso(torso(g, d, t), mode);
    auto r = is_almost_alpha_thin(reduced, alpha, cap);
    if (!r.witness) {
      res.violation = WidthViolation{WidthViolation::Kind::Torso, std::nullopt, t,
                                     "reduced torso on " + std::to_string(reduced.num_vertices()) +
                                         " vertices is not almost-" + std::to_string(alpha) + "-thin"};
      return res;
    }
    cert.nodes.push_back({t, std::move(reduced), std::move(*r.witness)});
  }
  res.certificate = std::move(cert);
  return res;
}

bool check_certificate(const Multigraph& g, const TreeCutDecomposition& d, const WidthCertificate& c,
                       CentreMode mode) {
  if (!validate(g, d).empty()) return false;
  auto adh = adhesion(g, d);
  if (adh.max > c.alpha) return false;
  if (static_cast<int>(c.nodes.size()) != d.num_nodes()) return false;
  for (const auto& nc : c.nodes) {
    if (nc.node < 0 || nc.node >= d.num_nodes()) return false;
    Multigraph reduced = reduce_torso(torso(g, d, nc.node), mode);
    if (!reduced.same_labelled(nc.reduced)) return false;
    if (!valid_almost_thin_witness(nc.reduced, c.alpha, nc.witness)) return false;
  }
  return true;
}

TreeCutDecomposition glue(const Multigraph& g, const Multigraph& gA, const TreeCutDecomposition& dA,
                          const Multigraph& gB, const TreeCutDecomposition& dB, Vertex b, Vertex a) {
  require_valid(gA, dA);
  require_valid(gB, dB);
  if (!gA.contains(b) || !gB.contains(a)) throw GraphError("glue: missing marker vertex");
  Node tA = dA.node_of(b), tB = dB.node_of(a);
  const int shift = dA.num_nodes();
  TreeCutDecomposition d;
  d.tree = dA.tree;
  for (auto [s, t] : dB.tree) d.tree.push_back({s + shift, t + shift});
  d.tree.push_back({tA, tB + shift});
  auto map_parts = [&](const Multigraph& h, const TreeCutDecomposition& dh, Vertex marker) {
    for (const VertexSet& part : dh.parts) {
      VertexSet p;
      for (Vertex v : part)
        if (v != marker) {
          auto gv = g.find(h.label(v));
          if (!gv) throw GraphError("glue: vertex '" + h.label(v) + "' not in the glued graph");
          p.push_back(*gv);
        }
      d.parts.push_back(make_set(std::move(p)));
    }
  };
  map_parts(gA, dA, b);
  map_parts(gB, dB, a);
  require_valid(g, d);
  return d;
}

Node attach_leaf(TreeCutDecomposition& d, Node parent, Vertex v) {
  if (parent < 0 || parent >= d.num_nodes()) throw GraphError("attach_leaf: unknown node");
  Node t = d.num_nodes();
  d.parts.push_back({v});
  d.tree.push_back({parent, t});
  return t;
}

namespace {

std::string ahu(const std::vector<std::vector<Node>>& adj, Node x, Node parent) {
  std::vector<std::string> kids;
  for (Node y : adj[x])
    if (y != parent) kids.push_back(ahu(adj, y, x));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

std::vector<std::vector<TreeEdge>> free_trees(int n) {
  if (n < 1) throw GraphError("free_trees: need at least one node");
  if (n == 1) return {{}};
  if (n == 2) return {{{0, 1}}};
  std::map<std::string, std::vector<TreeEdge>> seen;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    // Decode the Pruefer sequence.
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<TreeEdge> edges;
    for (int x : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.push_back(std::minmax(leaf, x));
      --deg[leaf];
      --deg[x];
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 1) (u == -1 ? u : v) = i;
    edges.push_back({u, v});
    std::vector<std::vector<Node>> adj(n);
    for (auto [s, t] : edges) {
      adj[s].push_back(t);
      adj[t].push_back(s);
    }
    std::string key;
    for (Node r = 0; r < n; ++r) {
      auto c = ahu(adj, r, -1);
      if (key.empty() || c < key) key = c;
    }
    if (!seen.count(key)) {
      std::sort(edges.begin(), edges.end());
      seen[key] = edges;
    }
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  std::vector<std::vector<TreeEdge>> out;
  for (auto& [k, e] : seen) out.push_back(e);
  return out;
}

bool enumerate_tcds(const Multigraph& g, int max_nodes, std::int64_t max_adhesion,
                    const std::function<bool(const TreeCutDecomposition&)>& f, TcdSearchStats* stats) {
  const int n = g.num_vertices();
  for (int nodes = 1; nodes <= max_nodes; ++nodes) {
    for (const auto& tree : free_trees(nodes)) {
      if (stats) ++stats->trees;
      TreeCutDecomposition d;
      d.tree = tree;
      d.parts.assign(nodes, {});
      auto adj = d.tree_adjacency();
      const int m = static_cast<int>(tree.size());
      // flag[e][t]: node t lies on the first endpoint's side of tree edge e.
      std::vector<std::vector<char>> flag(m, std::vector<char>(nodes, 0));
      for (int e = 0; e < m; ++e)
        for (Node t : d.side(tree[e].first, tree[e].second)) flag[e][t] = 1;
      std::vector<char> is_leaf(nodes, 0);
      int leaves = 0;
      for (Node t = 0; t < nodes; ++t)
        if (nodes > 1 && adj[t].size() == 1) is_leaf[t] = 1, ++leaves;
      std::vector<std::int64_t> cut(m, 0);
      std::vector<Node> at(n, -1);
      std::vector<int> count(nodes, 0);
      int empty_leaves = leaves;

      std::function<bool(Vertex)> go = [&](Vertex v) -> bool {
        if (n - v < empty_leaves) return false;
        if (v == n) {
          for (auto [s, t] : tree)
            if (count[s] == 0 && count[t] == 0) return false;
          if (stats) ++stats->assignments;
          for (Node t = 0; t < nodes; ++t) d.parts[t].clear();
          for (Vertex x = 0; x < n; ++x) d.parts[at[x]].push_back(x);
          return f(d);
        }
        for (Node t = 0; t < nodes; ++t) {
          std::vector<int> touched;
          bool ok = true;
          for (auto [u, mult] : g.adjacency(v)) {
            if (u >= v) continue;
            Node s = at[u];
            if (s == t) continue;
            for (int e = 0; e < m; ++e)
              if (flag[e][s] != flag[e][t]) {
                cut[e] += mult;
                touched.push_back(e);
                touched.push_back(mult);
                if (cut[e] > max_adhesion) ok = false;
              }
          }
          if (ok) {
            at[v] = t;
            if (count[t]++ == 0 && is_leaf[t]) --empty_leaves;
            bool stop = go(v + 1);
            if (--count[t] == 0 && is_leaf[t]) ++empty_leaves;
            at[v] = -1;
            if (stop) return true;
          }
          for (std::size_t i = 0; i < touched.size(); i += 2) cut[touched[i]] -= touched[i + 1];
        }
        return false;
      };
      if (go(0)) return true;
    }
  }
  return false;
}

nlohmann::json tcd_to_json(const Multigraph& g, const TreeCutDecomposition& d) {
  nlohmann::json j;
  j["tree"] = nlohmann::json::array();
  auto edges = d.tree;
  for (auto& e : edges) e = std::minmax(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  for (auto [s, t] : edges) j["tree"].push_back({s, t});
  j["parts"] = nlohmann::json::object();
  for (Node t = 0; t < d.num_nodes(); ++t) {
    auto arr = nlohmann::json::array();
    for (Vertex v : d.parts[t]) arr.push_back(g.label(v));
    j["parts"][std::to_string(t)] = arr;
  }
  return j;
}

TreeCutDecomposition tcd_from_json(const Multigraph& g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("tree") || !j.contains("parts") || !j["tree"].is_array() ||
      !j["parts"].is_object())
    throw GraphError("decomposition JSON needs a \"tree\" array and a \"parts\" object");
  TreeCutDecomposition d;
  const int n = static_cast<int>(j["parts"].size());
  d.parts.assign(n, {});
  std::vector<char> have(n, 0);
  for (auto& [key, arr] : j["parts"].items()) {
    std::size_t used = 0;
    int t = -1;
    try {
      t = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || t < 0 || t >= n || have[t])
      throw GraphError("decomposition nodes must be 0.." + std::to_string(n - 1) + ", got '" + key + "'");
    have[t] = 1;
    if (!arr.is_array()) throw GraphError("part of node " + key + " is not an array");
    for (const auto& lab : arr) {
      if (!lab.is_string()) throw GraphError("part of node " + key + " holds a non-string");
      auto v = g.find(lab.get<std::string>());
      if (!v) throw GraphError("part of node " + key + " names unknown vertex '" + lab.get<std::string>() + "'");
      d.parts[t].push_back(*v);
    }
    std::sort(d.parts[t].begin(), d.parts[t].end());
  }
  for (const auto& e : j["tree"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw GraphError("tree edges must be [node, node] integer pairs");
    int s = e[0].get<int>(), t = e[1].get<int>();
    d.tree.push_back(std::minmax(s, t));
  }
  auto bad = validate(g, d);
  if (!bad.empty()) throw GraphError("invalid tree-cut decomposition: " + bad.front());
  return d;
}

nlohmann::json certificate_to_json(const WidthCertificate& c) {
  nlohmann::json j;
  j["alpha"] = c.alpha;
  j["adhesion"]["max"] = c.adhesion.max;
  j["adhesion"]["per_edge"] = nlohmann::json::array();
  for (auto [e, size] : c.adhesion.per_edge) j["adhesion"]["per_edge"].push_back({e.first, e.second, size});
  j["nodes"] = nlohmann::json::array();
  for (const auto& nc : c.nodes) {
    nlohmann::json x;
    x["node"] = nc.node;
    x["reduced_vertices"] = nc.reduced.num_vertices();
    x["deleted"] = nlohmann::json::array();
    for (Vertex v : nc.witness.deleted) x["deleted"].push_back(nc.reduced.label(v));
    x["order"] = nlohmann::json::array();
    for (Vertex v : nc.witness.order) x["order"].push_back(nc.reduced.label(v));
    x["jump_profile"] = nc.witness.jump_profile;
    j["nodes"].push_back(x);
  }
  return j;
}

}  // namespace thinwall
