#include "thinwall/reduction.hpp"

#include <functional>

namespace thinwall {

Reduction reduce_min_degree3(const Multigraph& g) {
  Reduction r;
  r.graph = g;
  while (r.graph.num_vertices() > 1) {
    const Multigraph& h = r.graph;
    Vertex v = -1;
    for (Vertex x = 0; x < h.num_vertices() && v == -1; ++x)
      if (h.degree(x) <= 2) v = x;
    if (v == -1) break;
    ReductionStep s;
    s.vertex = h.label(v);
    if (h.adjacency(v).empty())
      s.anchor = h.label(v == 0 ? 1 : 0);
    else
      s.anchor = h.label(h.adjacency(v).begin()->first);
    if (h.degree(v) == 2) {
      s.kind = ReductionStep::Kind::Suppress;
      s.other = h.label(h.adjacency(v).rbegin()->first);
      Multigraph next = suppress(h, v);
      r.graph = std::move(next);
    } else {
      s.kind = ReductionStep::Kind::Delete;
      Multigraph next = remove_vertices(h, {v}).graph;
      r.graph = std::move(next);
    }
    r.steps.push_back(std::move(s));
  }
  return r;
}

namespace {

// Re-indexes a decomposition of `from` onto `to` by labels.
TreeCutDecomposition relabel(const Multigraph& from, const Multigraph& to, const TreeCutDecomposition& d) {
  TreeCutDecomposition out;
  out.tree = d.tree;
  for (const VertexSet& part : d.parts) {
    VertexSet p;
    for (Vertex v : part) p.push_back(to.at(from.label(v)));
    out.parts.push_back(make_set(std::move(p)));
  }
  return out;
}

}  // namespace

TreeCutDecomposition lift_reduction(const Multigraph& g, const Reduction& r, const TreeCutDecomposition& reduced) {
  if (auto errs = validate(r.graph, reduced); !errs.empty())
    throw GraphError("lift_reduction: input decomposition invalid: " + errs.front());
  TreeCutDecomposition d = relabel(r.graph, g, reduced);
  for (auto it = r.steps.rbegin(); it != r.steps.rend(); ++it) {
    Vertex v = g.at(it->vertex), u = g.at(it->anchor);
    Node t = d.node_of(u);
    if (t < 0) throw GraphError("lift_reduction: anchor '" + it->anchor + "' not placed");
    attach_leaf(d, t, v);
  }
  if (auto errs = validate(g, d); !errs.empty()) throw GraphError("lift_reduction: lifted decomposition invalid: " + errs.front());
  return d;
}

namespace {

std::string fresh_label(const Multigraph& g, const std::string& base) {
  std::string l = base;
  while (g.find(l)) l += "'";
  return l;
}

// Contracts `side` of h into one vertex labelled `label`.
Multigraph contract_side(const Multigraph& h, const VertexSet& side, const std::string& label) {
  std::vector<VertexSet> parts;
  std::vector<std::string> labels;
  std::vector<char> in(h.num_vertices(), 0);
  for (Vertex v : side) in[v] = 1;
  for (Vertex v = 0; v < h.num_vertices(); ++v)
    if (!in[v]) {
      parts.push_back({v});
      labels.push_back(h.label(v));
    }
  parts.push_back(side);
  labels.push_back(label);
  return contract(h, parts, labels).graph;
}

}  // namespace

SplitTree split_3ec(const Multigraph& g) {
  SplitTree t;
  std::function<int(Multigraph)> build = [&](Multigraph input) -> int {
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back({});
    SplitNode node;
    node.input = std::move(input);
    node.reduction = reduce_min_degree3(node.input);
    const Multigraph& h = node.reduction.graph;
    if (h.num_vertices() > 1) {
      EdgeCut c = min_edge_cut(h);
      if (c.size <= 2) node.cut = c;
    }
    if (!node.cut) {
      t.nodes[id] = std::move(node);
      t.pieces.push_back(id);
      return id;
    }
    VertexSet a = node.cut->side;
    VertexSet b = set_difference(all_vertices(h), a);
    node.marker_b = fresh_label(h, "~B" + std::to_string(id));
    node.marker_a = fresh_label(h, "~A" + std::to_string(id));
    Multigraph ga = contract_side(h, b, node.marker_b);
    Multigraph gb = contract_side(h, a, node.marker_a);
    t.nodes[id] = node;
    int ca = build(std::move(ga));
    int cb = build(std::move(gb));
    t.nodes[id].child_a = ca;
    t.nodes[id].child_b = cb;
    return id;
  };
  build(g);
  return t;
}

TreeCutDecomposition lift_split(const SplitTree& t, const std::map<int, TreeCutDecomposition>& pieces) {
  std::function<TreeCutDecomposition(int)> lift = [&](int id) -> TreeCutDecomposition {
    const SplitNode& n = t.nodes.at(id);
    TreeCutDecomposition reduced;
    if (n.is_piece()) {
      auto it = pieces.find(id);
      if (it == pieces.end()) throw GraphError("lift_split: missing decomposition for piece " + std::to_string(id));
      reduced = it->second;
    } else {
      const SplitNode& na = t.nodes.at(n.child_a);
      const SplitNode& nb = t.nodes.at(n.child_b);
      TreeCutDecomposition da = lift(n.child_a), db = lift(n.child_b);
      reduced = glue(n.reduction.graph, na.input, da, nb.input, db, na.input.at(n.marker_b), nb.input.at(n.marker_a));
    }
    return lift_reduction(n.input, n.reduction, reduced);
  };
  return lift(0);
}

}  // namespace thinwall
