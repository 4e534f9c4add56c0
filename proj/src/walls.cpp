#include "thinwall/walls.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

namespace thinwall {

std::string wall_label(int column, int row) {
  return "(" + std::to_string(column) + "," + std::to_string(row) + ")";
}

std::optional<Vertex> Wall::at(int column, int row) const { return graph.find(wall_label(column, row)); }

Wall build_wall(int ell) {
  if (ell < 1) throw GraphError("build_wall: ell must be at least 1");
  const int cols = 2 * ell, rows = ell;
  Multigraph grid;
  auto id = [&](int c, int r) { return (r - 1) * cols + (c - 1); };
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) grid.add_vertex(wall_label(c, r));
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c < cols; ++c) grid.add_edge(id(c, r), id(c + 1, r));
  // Rung (c,r)-(c,r+1) survives iff c and r have equal parity.
  for (int r = 1; r < rows; ++r)
    for (int c = 1; c <= cols; ++c)
      if ((c - r) % 2 == 0) grid.add_edge(id(c, r), id(c, r + 1));

  VertexSet leaves;
  for (Vertex v = 0; v < grid.num_vertices(); ++v)
    if (grid.degree(v) == 1) leaves.push_back(v);
  auto sub = remove_vertices(grid, leaves);

  Wall w;
  w.ell = ell;
  w.graph = std::move(sub.graph);
  for (Vertex v : sub.old_of_new) w.coord.push_back({v % cols + 1, v / cols + 1});
  return w;
}

Wall wall_from_graph(const Multigraph& g) {
  Wall w;
  w.graph = g;
  int max_row = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int c = 0, r = 0;
    char tail = 0;
    if (std::sscanf(g.label(v).c_str(), "(%d,%d%c", &c, &r, &tail) != 3 || tail != ')')
      throw GraphError("not a wall vertex label: '" + g.label(v) + "'");
    w.coord.push_back({c, r});
    max_row = std::max(max_row, r);
  }
  w.ell = max_row;
  Wall ref = build_wall(std::max(1, max_row));
  if (g.num_vertices() == 0) {
    w.ell = 1;
    return w;
  }
  if (!ref.graph.same_labelled(g)) throw GraphError("graph is not the wall of size " + std::to_string(max_row));
  return w;
}

namespace {
// Orders the vertices of a vertex set inducing a path from one end to the other.
Path order_as_path(const Multigraph& g, const VertexSet& vs) {
  auto sub = induced_subgraph(g, vs);
  const Multigraph& h = sub.graph;
  if (h.num_vertices() == 0) return {};
  Vertex start = 0;
  for (Vertex v = 0; v < h.num_vertices(); ++v)
    if (h.degree(v) <= 1) {
      start = v;
      break;
    }
  Path p{start};
  Vertex prev = -1, cur = start;
  while (true) {
    Vertex next = -1;
    for (auto [y, m] : h.adjacency(cur))
      if (y != prev) next = y;
    if (next == -1 || next == start) break;
    p.push_back(next);
    prev = cur;
    cur = next;
  }
  for (Vertex& v : p) v = sub.old_of_new[v];
  return p;
}
}  // namespace

WallPathSystem path_system(const Wall& w) {
  WallPathSystem ps;
  for (int j = 1; j <= w.ell; ++j) {
    VertexSet vert, horiz;
    for (Vertex v = 0; v < w.graph.num_vertices(); ++v) {
      auto [c, r] = w.coord[v];
      if (c == 2 * j || c == 2 * j - 1) vert.push_back(v);
      if (r == j) horiz.push_back(v);
    }
    ps.vertical.push_back(order_as_path(w.graph, vert));
    ps.horizontal.push_back(order_as_path(w.graph, horiz));
  }
  return ps;
}

VertexSet well_linked_set(const Wall& w) {
  if (w.ell < 3) throw GraphError("well_linked_set: needs ell >= 3");
  VertexSet z;
  for (Vertex v = 0; v < w.graph.num_vertices(); ++v)
    if (w.coord[v].second == w.ell && w.graph.degree(v) == 3) z.push_back(v);
  return z;
}

namespace {

// Calls f(A, B) for every ordered-irrelevant pair of disjoint equal-size
// non-empty subsets; each unordered pair {A, B} is visited once. Stops early
// when f returns false.
template <class F>
bool for_each_subset_pair(const VertexSet& z, F&& f) {
  const int m = static_cast<int>(z.size());
  // Assign each element to A (1), B (2) or neither (0); canonical when the
  // smallest assigned element is in A.
  std::vector<int> lab(m, 0);
  std::size_t total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    int na = 0, nb = 0, first = -1;
    for (int i = 0; i < m; ++i) {
      lab[i] = static_cast<int>(c % 3);
      c /= 3;
      if (lab[i] == 1) ++na;
      if (lab[i] == 2) ++nb;
      if (lab[i] != 0 && first == -1) first = i;
    }
    if (na == 0 || na != nb || lab[first] != 1) continue;
    VertexSet a, b;
    for (int i = 0; i < m; ++i) {
      if (lab[i] == 1) a.push_back(z[i]);
      if (lab[i] == 2) b.push_back(z[i]);
    }
    if (!f(a, b)) return false;
  }
  return true;
}

}  // namespace

WellLinkedReport certify_well_linked(const Multigraph& g, const VertexSet& z_in, int exhaustive_cap,
                                     std::size_t samples, unsigned seed) {
  VertexSet z = make_set(z_in);
  WellLinkedReport rep;
  auto check = [&](const VertexSet& a, const VertexSet& b) {
    ++rep.pairs_checked;
    auto res = vertex_disjoint_paths(g, a, b, static_cast<int>(a.size()));
    if (!res.found()) {
      rep.violation = LinkageViolation{a, b, *res.separator};
      return false;
    }
    rep.systems.push_back(std::move(res.paths));
    return true;
  };

  if (static_cast<int>(z.size()) <= exhaustive_cap) {
    rep.exhaustive = true;
    for_each_subset_pair(z, [&](const VertexSet&, const VertexSet&) {
      ++rep.pairs_total;
      return true;
    });
    for_each_subset_pair(z, check);
  } else {
    rep.exhaustive = false;
    std::mt19937 rng(seed);
    for (std::size_t s = 0; s < samples && !rep.violation; ++s) {
      VertexSet perm = z;
      std::shuffle(perm.begin(), perm.end(), rng);
      int k = std::uniform_int_distribution<int>(1, static_cast<int>(z.size()) / 2)(rng);
      VertexSet a(perm.begin(), perm.begin() + k), b(perm.begin() + k, perm.begin() + 2 * k);
      check(make_set(a), make_set(b));
    }
  }
  rep.certified = !rep.violation.has_value();
  return rep;
}

ThreeConnectedReport certify_three_connected_pairs(const Multigraph& g, const VertexSet& z_in) {
  VertexSet z = make_set(z_in);
  ThreeConnectedReport rep;
  for (std::size_t i = 0; i < z.size() && !rep.violation; ++i)
    for (std::size_t j = i + 1; j < z.size() && !rep.violation; ++j) {
      ++rep.pairs_checked;
      auto res = internally_disjoint_paths(g, z[i], z[j], 3);
      if (!res.found())
        rep.violation = PairViolation{z[i], z[j], *res.separator};
      else
        rep.systems.push_back(std::move(res.paths));
    }
  rep.certified = !rep.violation.has_value();
  return rep;
}

}  // namespace thinwall
