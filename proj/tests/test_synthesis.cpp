#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "thinwall/synthesis.hpp"
#include "thinwall/walls.hpp"

using namespace thinwall;

namespace {

constexpr int kHeavy = 25;  // above 6 ell^2 = 24 for ell = 2

SynthesisOptions claim_routes_only() {
  SynthesisOptions o;
  o.direct_search = false;
  return o;
}

void require_wall(const Multigraph& g, const SynthesisResult& r, const std::string& route) {
  REQUIRE(r.outcome == SynthesisResult::Outcome::Wall);
  REQUIRE(r.wall.has_value());
  CHECK(r.wall->route == route);
  CHECK(r.wall->embedding.mode == ImmersionMode::Strong);
  CHECK(check_embedding(build_wall(r.params.ell).graph, g, r.wall->embedding) == std::nullopt);
}

// Centre joined to 8 vertices by kHeavy edges each.
Multigraph heavy_star() {
  Multigraph g = Multigraph::with_vertices(9);
  for (int i = 1; i <= 8; ++i) g.add_edge(0, i, kHeavy);
  return g;
}

// Heavy tree: centre, 4 children, 2 grandchildren each. Maximum heavy degree 4,
// but the centre with its children sees 8 vertices.
Multigraph heavy_two_level_tree() {
  Multigraph g = Multigraph::with_vertices(13);
  for (int i = 1; i <= 4; ++i) {
    g.add_edge(0, i, kHeavy);
    g.add_edge(i, 4 + 2 * i - 1, kHeavy);
    g.add_edge(i, 4 + 2 * i, kHeavy);
  }
  return g;
}

// Heavy path q0..q23 and a vertex joined to each q_i by one edge.
Multigraph heavy_path_with_apex() {
  Multigraph g = Multigraph::with_vertices(25);
  for (int i = 0; i + 1 < 24; ++i) g.add_edge(i, i + 1, kHeavy);
  for (int i = 0; i < 24; ++i) g.add_edge(24, i, 1);
  return g;
}

// Heavy path plus a vertex x heavily tied to three inner path vertices and
// joined to every path vertex through a subdivided edge; some of those
// edges run through a K4 instead.
Multigraph deleted_apex_fixture(int blobs) {
  Multigraph g = Multigraph::with_vertices(25);
  const Vertex x = 24;
  for (int i = 0; i + 1 < 24; ++i) g.add_edge(i, i + 1, kHeavy);
  for (int i : {5, 12, 19}) g.add_edge(x, i, kHeavy);
  for (int i = 0; i < 24; ++i) {
    if (i < blobs) {
      Vertex b = g.num_vertices();
      for (int k = 0; k < 4; ++k) g.add_vertex("blob" + std::to_string(i) + "_" + std::to_string(k));
      for (int a = 0; a < 4; ++a)
        for (int c = a + 1; c < 4; ++c) g.add_edge(b + a, b + c);
      g.add_edge(x, b);
      g.add_edge(b + 1, i);
    } else {
      Vertex s = g.add_vertex("s" + std::to_string(i));
      g.add_edge(x, s);
      g.add_edge(s, i);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("auxiliary graph keeps only heavy pairs") {
  Multigraph g = Multigraph::with_vertices(4);
  g.add_edge(0, 1, 24);
  g.add_edge(1, 2, 25);
  g.add_edge(2, 3, 30);
  auto a = build_auxiliary(g, make_parameters(2));
  CHECK(a.threshold == 24);
  CHECK(a.a.multiplicity(0, 1) == 0);
  CHECK(a.a.multiplicity(1, 2) == 1);
  CHECK(a.a.multiplicity(2, 3) == 1);
  CHECK(a.components.size() == 2);
}

TEST_CASE("wall from a spider") {
  Multigraph s = spider_graph(3, 8);
  VertexSet leaves;
  for (int i = 1; i <= 8; ++i) leaves.push_back(i);
  auto e = wall_from_spider(s, 2, 0, leaves);
  CHECK(check_embedding(build_wall(2).graph, s, e) == std::nullopt);
  Multigraph thin = spider_graph(2, 8);
  CHECK_THROWS_AS(wall_from_spider(thin, 2, 0, leaves), ConstructionDefect);
}

TEST_CASE("wall from an apex path") {
  Multigraph p = apex_path(23);
  std::vector<Vertex> teeth;
  std::vector<Path> between, from_apex;
  for (int i = 0; i < 24; ++i) {
    teeth.push_back(i);
    from_apex.push_back({24, i});
    if (i + 1 < 24) between.push_back({i, i + 1});
  }
  auto e = wall_from_apex_path(p, 2, 24, teeth, between, from_apex);
  CHECK(check_embedding(build_wall(2).graph, p, e) == std::nullopt);
}

TEST_CASE("direct search finds the wall in itself") {
  Multigraph w = build_wall(2).graph;
  auto r = synthesize(w, 2);
  require_wall(w, r, "direct-search");
}

TEST_CASE("wall-free inputs are certified") {
  std::vector<Multigraph> inputs;
  Multigraph k4 = Multigraph::with_vertices(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  inputs.push_back(k4);
  Multigraph tree = Multigraph::with_vertices(7);
  for (int v = 1; v < 7; ++v) tree.add_edge((v - 1) / 2, v, 3);
  inputs.push_back(tree);
  for (const Multigraph& g : inputs) {
    auto r = synthesize(g, 2);
    REQUIRE(r.outcome == SynthesisResult::Outcome::Certificate);
    CHECK(validate(g, *r.decomposition).empty());
    CHECK(check_certificate(g, *r.decomposition, *r.certificate));
    CHECK(r.certificate->alpha == r.instance_alpha);
  }
}

TEST_CASE("certified alpha is the smallest the decomposition passes") {
  std::mt19937 rng(31);
  int certified = 0;
  for (int it = 0; it < 40; ++it) {
    int n = std::uniform_int_distribution<int>(1, 9)(rng);
    Multigraph g = oracle::random_connected_multigraph(n, 0.25, 3, rng);
    auto r = synthesize(g, 2);
    if (r.outcome == SynthesisResult::Outcome::Wall) {
      CHECK(check_embedding(build_wall(2).graph, g, r.wall->embedding) == std::nullopt);
      continue;
    }
    REQUIRE(r.outcome == SynthesisResult::Outcome::Certificate);
    ++certified;
    CHECK(certify_width(g, *r.decomposition, r.instance_alpha).ok());
    if (r.instance_alpha > 0) CHECK_FALSE(certify_width(g, *r.decomposition, r.instance_alpha - 1).ok());
  }
  CHECK(certified > 0);
}

TEST_CASE("heavy degree route") {
  Multigraph g = heavy_star();
  require_wall(g, synthesize(g, 2, claim_routes_only()), "degree");
}

TEST_CASE("star minor route") {
  Multigraph g = heavy_two_level_tree();
  require_wall(g, synthesize(g, 2, claim_routes_only()), "star-minor");
}

TEST_CASE("comb route") {
  Multigraph g = heavy_path_with_apex();
  require_wall(g, synthesize(g, 2, claim_routes_only()), "comb");
}

TEST_CASE("apex on a cover path, lifted through suppressions") {
  Multigraph g = deleted_apex_fixture(0);
  require_wall(g, synthesize(g, 2, claim_routes_only()), "apex-path");
}

TEST_CASE("apex on a cover path, lifted through splits") {
  Multigraph g = deleted_apex_fixture(3);
  auto r = synthesize(g, 2, claim_routes_only());
  require_wall(g, r, "apex-path");
  CHECK(r.pieces.size() >= 2);
}

TEST_CASE("piece reports on a certified input") {
  Multigraph g = Multigraph::with_vertices(8);
  for (int base : {0, 4})
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) g.add_edge(base + u, base + v, 2);
  g.add_edge(0, 4);
  auto r = synthesize(g, 2, claim_routes_only());
  REQUIRE(r.outcome == SynthesisResult::Outcome::Certificate);
  REQUIRE(r.pieces.size() == 2);
  for (const PieceReport& p : r.pieces) {
    CHECK(p.adhesion <= p.adhesion_bound);
    CHECK(p.torso_max <= p.torso_bound);
    CHECK(p.torsos_equal_centres);
    CHECK(p.constructive_alpha >= 0);
  }
  auto j = synthesis_to_json(g, r);
  CHECK(j["outcome"] == "certificate");
  CHECK(j["pieces"].size() == 2);
  CHECK(j["parameters"]["p"] == "24");
}

TEST_CASE("caps produce a partial outcome") {
  Multigraph g = Multigraph::with_vertices(26);
  for (int u = 0; u < 26; ++u)
    for (int v = u + 1; v < 26; ++v)
      if ((u * 7 + v * 3) % 5 == 0 || v == u + 1) g.add_edge(u, v, 2);
  SynthesisOptions o = claim_routes_only();
  o.treewidth_cap = 10;
  auto r = synthesize(g, 2, o);
  CHECK(r.outcome == SynthesisResult::Outcome::Partial);
  REQUIRE_FALSE(r.trace.empty());
  CHECK(r.trace.back().find("cap exceeded") == 0);
}

TEST_CASE("star K_{1,6} is certified at ell 2") {
  Multigraph g = Multigraph::with_vertices(7);
  for (int i = 1; i <= 6; ++i) g.add_edge(0, i);
  for (bool direct : {true, false}) {
    SynthesisOptions o;
    o.direct_search = direct;
    auto r = synthesize(g, 2, o);
    REQUIRE(r.outcome == SynthesisResult::Outcome::Certificate);
    CHECK(certify_width(g, *r.decomposition, r.instance_alpha).ok());
  }
}

TEST_CASE("contracting heavy components conserves cross multiplicities") {
  std::mt19937 rng(41);
  for (int it = 0; it < 100; ++it) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    Multigraph g = oracle::random_multigraph(n, 0.4, 40, rng);
    auto aux = build_auxiliary(g, 24);
    for (const Edge& e : aux.a.edges()) CHECK(g.multiplicity(e.u, e.v) > 24);
    auto con = contract(g, aux.components);
    std::int64_t across = 0;
    for (const Edge& e : g.edges())
      if (con.part_of_vertex[e.u] != con.part_of_vertex[e.v]) across += e.mult;
    CHECK(con.graph.num_edges() == across);
    // Re-expanding: each contracted pair carries the sum over its members.
    std::vector<int> part_of_new(con.graph.num_vertices());
    for (std::size_t i = 0; i < con.vertex_of_part.size(); ++i) part_of_new[con.vertex_of_part[i]] = static_cast<int>(i);
    for (const Edge& e : con.graph.edges()) {
      std::int64_t sum = 0;
      for (Vertex x : aux.components[part_of_new[e.u]])
        for (Vertex y : aux.components[part_of_new[e.v]]) sum += g.multiplicity(x, y);
      CHECK(sum == e.mult);
    }
  }
}
