// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// only for failures outside the known-red set listed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "thinwall/corpus.hpp"
#include "thinwall/immersion.hpp"
#include "thinwall/reduction.hpp"
#include "thinwall/synthesis.hpp"
#include "thinwall/thinness.hpp"
#include "thinwall/treecut.hpp"
#include "thinwall/treewidth.hpp"
#include "thinwall/walls.hpp"

using namespace thinwall;

namespace {

// Criterion 6 asks for zero violations of both suppression clauses; the
// almost-thin clause has counterexamples, so it is reported red.
const std::set<int> kKnownRed{6};

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

Multigraph with_degree2_vertex(std::mt19937& rng) {
  int n = std::uniform_int_distribution<int>(3, 9)(rng);
  Multigraph g = oracle::random_connected_multigraph(n - 1, 0.35, 2, rng);
  Vertex v = g.add_vertex(std::to_string(n - 1));
  Vertex a = std::uniform_int_distribution<int>(0, n - 2)(rng);
  Vertex b = std::uniform_int_distribution<int>(0, n - 2)(rng);
  if (a == b)
    g.add_edge(v, a, 2);
  else {
    g.add_edge(v, a);
    g.add_edge(v, b);
  }
  return g;
}

// A tree of small 2-edge-connected blobs joined by single edges.
Multigraph blob_tree(std::mt19937& rng, int max_n) {
  Multigraph g;
  std::vector<std::pair<Vertex, Vertex>> blobs;
  auto mult = [&]() {
    int r = std::uniform_int_distribution<int>(0, 9)(rng);
    return r < 6 ? 1 + r % 3 : std::uniform_int_distribution<int>(20, 32)(rng);
  };
  while (true) {
    int size = std::uniform_int_distribution<int>(1, 5)(rng);
    if (g.num_vertices() + size > max_n) break;
    Vertex base = g.num_vertices();
    for (int i = 0; i < size; ++i) g.add_vertex(std::to_string(base + i));
    if (size == 2) g.add_edge(base, base + 1, 1 + mult());
    if (size >= 3) {
      for (int i = 0; i < size; ++i) g.add_edge(base + i, base + (i + 1) % size, mult());
      for (int i = 0; i < size; ++i)
        for (int j = i + 2; j < size; ++j)
          if ((i + 1) % size != j && (j + 1) % size != i && rng() % 3 == 0) g.add_edge(base + i, base + j, mult());
    }
    if (!blobs.empty()) {
      auto [lo, hi] = blobs[std::uniform_int_distribution<std::size_t>(0, blobs.size() - 1)(rng)];
      Vertex x = std::uniform_int_distribution<int>(lo, hi)(rng);
      Vertex y = std::uniform_int_distribution<int>(base, base + size - 1)(rng);
      g.add_edge(x, y);
    }
    blobs.push_back({base, base + size - 1});
  }
  return g;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s);
  return buf;
}

Outcome wall_census() {
  std::ostringstream d;
  for (int ell = 2; ell <= 8; ++ell) {
    Multigraph w = build_wall(ell).graph;
    bool simple = true;
    for (const Edge& e : w.edges()) simple = simple && e.mult == 1;
    // W_2 is a 6-cycle, so its maximum degree is 2.
    int want = ell == 2 ? 2 : 3;
    if (w.num_vertices() != 2 * ell * ell - 2 || w.max_degree() != want || !is_connected(w) || !simple) {
      d << "ell=" << ell << " has " << w.num_vertices() << " vertices, max degree " << w.max_degree();
      return {false, d.str()};
    }
  }
  return {true, "ell 2..8: |V| = 2 ell^2 - 2, max degree 3 (2 for the 6-cycle W_2), connected, simple"};
}

Outcome well_linked() {
  std::ostringstream d;
  bool ok = true;
  for (int ell = 3; ell <= 5; ++ell) {
    Wall w = build_wall(ell);
    VertexSet z = well_linked_set(w);
    auto wl = certify_well_linked(w.graph, z);
    auto tc = certify_three_connected_pairs(w.graph, z);
    bool good = static_cast<int>(z.size()) == ell - 2 && wl.certified && wl.exhaustive && tc.certified;
    ok = ok && good;
    d << "ell=" << ell << ": |Z|=" << z.size() << ", " << wl.pairs_checked << "/" << wl.pairs_total
      << " pairs linked, " << tc.pairs_checked << " pairs 3-connected; ";
  }
  return {ok, d.str()};
}

Outcome thinness_oracle() {
  std::size_t checked = 0, mismatches = 0;
  auto check = [&](const Multigraph& g) {
    ++checked;
    if (min_thinness(g).alpha != oracle::thinness_bruteforce(g)) ++mismatches;
  };
  // n <= 5: every labelled connected multigraph with multiplicities up to 3.
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      Multigraph g = Multigraph::with_vertices(n);
      std::size_t c = code;
      for (auto [u, v] : pairs) {
        if (c % 4) g.add_edge(u, v, static_cast<int>(c % 4));
        c /= 4;
      }
      if (is_connected(g)) check(g);
    }
  }
  // n = 6: every labelled connected simple graph, and each again with random multiplicities.
  std::mt19937 rng(6);
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    Multigraph g = Multigraph::with_vertices(6), h = Multigraph::with_vertices(6);
    int bit = 0;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v, ++bit)
        if (mask >> bit & 1u) {
          g.add_edge(u, v);
          h.add_edge(u, v, std::uniform_int_distribution<int>(1, 4)(rng));
        }
    if (!is_connected(g)) continue;
    check(g);
    check(h);
  }
  std::mt19937 rng7(7);
  for (int i = 0; i < 100; ++i) check(oracle::random_connected_multigraph(7, 0.4, 3, rng7));
  return {mismatches == 0, std::to_string(checked) + " graphs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome corpus_family(const std::string& name, const std::vector<nlohmann::json>& params) {
  std::ostringstream d;
  bool ok = true;
  for (const auto& p : params) {
    FixtureReport r = run_fixture(fixture(name, p));
    ok = ok && r.ok();
    for (const VerdictOutcome& o : r.outcomes)
      d << p.dump() << " " << o.verdict.check << "=" << (o.observed ? "yes" : "no") << " (" << o.detail << "); ";
  }
  return {ok, d.str()};
}

Outcome double_star() {
  Outcome o = corpus_family("ex23-double-star", {{{"alpha", 1}}});
  // The suppressed graph must be the two centres joined by 6 parallel edges.
  Multigraph h = fixture("ex23-double-star").graph;
  while (true) {
    Vertex x = -1;
    for (Vertex y = 0; y < h.num_vertices() && x == -1; ++y)
      if (h.degree(y) == 2) x = y;
    if (x == -1) break;
    h = suppress(h, x);
  }
  bool two = h.num_vertices() == 2 && h.num_edges() == 6 && min_thinness(h).alpha == 0;
  o.pass = o.pass && two;
  o.detail += "suppressed to " + std::to_string(h.num_vertices()) + " vertices with " +
              std::to_string(h.num_edges()) + " parallel edges";
  return o;
}

Outcome suppression_sweep() {
  std::mt19937 rng(2024);
  int thin_bad = 0, almost_bad = 0;
  std::string first;
  for (int i = 0; i < 500; ++i) {
    Multigraph g = with_degree2_vertex(rng);
    Vertex v = g.num_vertices() - 1;
    SuppressionReport r = check_suppression_preserves(g, v);
    if (r.thin_after > r.thin_before) ++thin_bad;
    if (r.almost_after > r.almost_before) {
      ++almost_bad;
      if (first.empty()) first = "instance " + std::to_string(i) + ": almost " + std::to_string(r.almost_before) +
                                 " -> " + std::to_string(r.almost_after);
    }
  }
  std::string d = "500 instances: thinness increased " + std::to_string(thin_bad) +
                  " times, almost-thinness increased " + std::to_string(almost_bad) + " times";
  if (!first.empty()) d += " (first: " + first + ")";
  return {thin_bad == 0 && almost_bad == 0, d};
}

Outcome confluence() {
  std::mt19937 rng(77);
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    int n = std::uniform_int_distribution<int>(2, 10)(rng);
    Multigraph g = oracle::random_multigraph(n, 0.35, 3, rng);
    VertexSet prot;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 4 == 0) prot.push_back(v);
    std::mt19937 order(rng());
    if (!three_centre(g, prot, &order).graph.same_labelled(three_centre(g, prot).graph)) ++bad;
  }
  return {bad == 0, "500 triples, " + std::to_string(bad) + " order-dependent results"};
}

Outcome immersion_sanity() {
  std::ostringstream d;
  Multigraph k5 = Multigraph::with_vertices(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
  auto r1 = find_immersion(k5, build_wall(3).graph, ImmersionMode::Strong);
  bool a = r1.status == SearchStatus::Absent;
  d << "K5 in W_3: " << (a ? "absent" : "not absent") << " (" << r1.reason << "); ";

  Multigraph w2 = build_wall(2).graph, s = spider_graph(3, 8);
  auto r2 = find_immersion(w2, s, ImmersionMode::Strong);
  bool b = r2.status == SearchStatus::Present && !check_embedding(w2, s, *r2.embedding) &&
           !check_embedding(w2, s, embed_in_spider(w2, 3, 8));
  d << "W_2 in S_{3,8}: " << (b ? "validated witness" : "missing") << "; ";

  bool c = true;
  for (int k : {4, 8}) {
    SpiderSubdivision sub = apex_to_spider_subdivision(k);
    bool ok = sub.host.same_labelled(apex_path(3 * k - 1)) &&
              !check_spider_subdivision(sub.host, sub.hub, sub.leaves, sub.legs) &&
              !check_embedding(spider_graph(3, k), sub.host, subdivision_immersion(sub));
    c = c && ok;
    d << "S_{3," << k << "} subdivision in P_" << 3 * k - 1 << "*v: " << (ok ? "valid" : "invalid") << "; ";
  }
  Multigraph p23 = apex_path(23);
  SpiderSubdivision sub8 = apex_to_spider_subdivision(8);
  auto composed = compose(w2, s, embed_in_spider(w2, 3, 8), p23, subdivision_immersion(sub8));
  bool e = !check_embedding(w2, p23, composed);
  d << "W_2 in P_23*v by composition: " << (e ? "valid" : "invalid");
  return {a && b && c && e, d.str()};
}

Outcome star_example() {
  Fixture f = fixture("ex25-star", {{"alpha", 1}, {"ell", 2}, {"n", 6}});
  TcdSearchStats st;
  bool raw = enumerate_tcds(
      f.graph, 7, 1, [&](const TreeCutDecomposition& d) { return certify_width(f.graph, d, 1, CentreMode::Torso).ok(); },
      &st);
  auto wall = find_immersion(build_wall(2).graph, f.graph, ImmersionMode::Strong);
  bool centres = enumerate_tcds(f.graph, 7, 1, [&](const TreeCutDecomposition& d) {
    return certify_width(f.graph, d, 1, CentreMode::ThreeCentre).ok();
  });
  std::ostringstream d;
  d << st.assignments << " decompositions on " << st.trees << " trees: raw torsos "
    << (raw ? "certified" : "never certified") << "; W_2 " << (wall.status == SearchStatus::Absent ? "absent" : "not absent")
    << "; with 3-centres a certificate " << (centres ? "exists" : "does not exist");
  return {!raw && wall.status == SearchStatus::Absent, d.str()};
}

Outcome synthesis_end_to_end() {
  std::mt19937 rng(10);
  Multigraph w2 = build_wall(2).graph;
  int fixtures = 0, certified = 0, max_n = 0, attempts = 0;
  std::int64_t max_alpha = 0;
  std::ostringstream problems;
  Parameters params = make_parameters(2);
  while (fixtures < 20 && attempts < 200) {
    ++attempts;
    Multigraph g = blob_tree(rng, 20);
    if (g.num_vertices() < 6) continue;
    if (find_immersion(w2, g, ImmersionMode::Strong).status != SearchStatus::Absent) continue;
    ++fixtures;
    max_n = std::max(max_n, g.num_vertices());
    SynthesisResult r = synthesize(g, 2);
    bool bounds = true;
    for (const PieceReport& p : r.pieces)
      bounds = bounds && p.adhesion <= p.adhesion_bound && p.torso_max <= p.torso_bound;
    bool ok = r.outcome == SynthesisResult::Outcome::Certificate && bounds &&
              certify_width(g, *r.decomposition, r.instance_alpha).ok() &&
              check_certificate(g, *r.decomposition, *r.certificate);
    if (ok) {
      ++certified;
      max_alpha = std::max(max_alpha, r.instance_alpha);
    } else {
      problems << " fixture " << fixtures << ": " << (r.trace.empty() ? "?" : r.trace.back()) << ";";
    }
  }
  std::ostringstream d;
  d << certified << "/" << fixtures << " W_2-free fixtures (n <= " << max_n << ") certified, max instance alpha "
    << max_alpha << ", closed-form alpha(2) = " << params.alpha_expr << problems.str();
  return {fixtures == 20 && certified == 20, d.str()};
}

Outcome reduction_round_trips() {
  std::mt19937 rng(11);
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    Multigraph g = oracle::random_multigraph(n, 0.35, 3, rng);
    // Reduction alone, with an exact decomposition of the reduced graph.
    Reduction red = reduce_min_degree3(g);
    TreeCutDecomposition dr = is_connected(red.graph) && red.graph.num_vertices() <= 12
                                  ? td_to_tcd(red.graph, exact_treewidth(red.graph).td).tcd
                                  : trivial_decomposition(red.graph);
    TreeCutDecomposition lifted = lift_reduction(g, red, dr);
    if (!validate(g, lifted).empty() ||
        adhesion(g, lifted).max > std::max<std::int64_t>(2, adhesion(red.graph, dr).max))
      ++bad;
    // Splitting into pieces and gluing back.
    SplitTree t = split_3ec(g);
    std::map<int, TreeCutDecomposition> pieces;
    std::int64_t piece_max = 0;
    for (int id : t.pieces) {
      const Multigraph& h = t.nodes[id].reduction.graph;
      pieces[id] = h.num_vertices() > 1 ? td_to_tcd(h, exact_treewidth(h).td).tcd : trivial_decomposition(h);
      piece_max = std::max(piece_max, adhesion(h, pieces[id]).max);
    }
    TreeCutDecomposition d = lift_split(t, pieces);
    if (!validate(g, d).empty() || adhesion(g, d).max > std::max<std::int64_t>(2, piece_max)) ++bad;
  }
  return {bad == 0, "200 instances (reduction and split), " + std::to_string(bad) + " violations"};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "wall census", 1, wall_census},
      {2, "well-linked top row", 30, well_linked},
      {3, "thinness deciders vs permutation oracle", 300, thinness_oracle},
      {4, "star with 3a+3 leaves", 60,
       [] { return corpus_family("ex22-star", {{{"alpha", 1}}, {{"alpha", 2}}}); }},
      {5, "double star with identified leaves", 60, double_star},
      {6, "suppression preserves thinness and almost-thinness", 600, suppression_sweep},
      {7, "3-centre confluence", 120, confluence},
      {8, "immersion sanity", 120, immersion_sanity},
      {9, "spread star has no raw-torso certificate and no W_2", 600, star_example},
      {10, "synthesis end to end", 1200, synthesis_end_to_end},
      {11, "reduction round trips", 600, reduction_round_trips},
  };
  int unexpected = 0, red = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " [over time limit]";
    }
    bool known = kKnownRed.count(c.id) > 0;
    if (!o.pass) (known ? red : unexpected)++;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail << " (" << fmt(secs)
              << " s, limit " << fmt(c.limit_seconds) << " s)" << (!o.pass && known ? " [known red]" : "") << "\n"
              << std::flush;
  }
  std::cout << "summary: " << 11 - unexpected - red << " pass, " << red << " known red, " << unexpected
            << " unexpected failures\n";
  return unexpected == 0 ? 0 : 1;
}
