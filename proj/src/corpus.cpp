#include "thinwall/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "thinwall/immersion.hpp"
#include "thinwall/synthesis.hpp"
#include "thinwall/thinness.hpp"
#include "thinwall/treecut.hpp"
#include "thinwall/walls.hpp"

namespace thinwall {

namespace {

int param(const nlohmann::json& p, const char* key, int fallback) {
  if (!p.contains(key)) return fallback;
  if (!p[key].is_number_integer()) throw std::invalid_argument(std::string("fixture param '") + key + "' must be an integer");
  return p[key].get<int>();
}

Multigraph star(int leaves, int mult) {
  Multigraph g;
  g.add_vertex("c");
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, g.add_vertex("l" + std::to_string(i)), mult);
  return g;
}

Fixture ex22_star(const nlohmann::json& in) {
  int alpha = param(in, "alpha", 1);
  if (alpha < 1) throw std::invalid_argument("ex22-star: alpha must be positive");
  Fixture f{"ex22-star", {{"alpha", alpha}}, star(3 * alpha + 3, 1), {}};
  f.verdicts.push_back({"almost-thin", "a star with 3a+3 leaves is not almost-a-thin", {{"alpha", alpha}}, false});
  f.verdicts.push_back({"collapses-by-leaf-deletion", "deleting degree-1 vertices leaves one vertex", {}, true});
  return f;
}

Fixture ex23_double_star(const nlohmann::json& in) {
  int alpha = param(in, "alpha", 1);
  if (alpha < 1) throw std::invalid_argument("ex23-double-star: alpha must be positive");
  int n = 3 * alpha + 3;
  Multigraph g;
  g.add_vertex("c1");
  g.add_vertex("c2");
  for (int i = 1; i <= n; ++i) {
    Vertex l = g.add_vertex("l" + std::to_string(i));
    g.add_edge(0, l);
    g.add_edge(1, l);
  }
  Fixture f{"ex23-double-star", {{"alpha", alpha}}, std::move(g), {}};
  f.verdicts.push_back({"almost-thin", "two stars sharing their leaves are not almost-a-thin", {{"alpha", alpha}}, false});
  f.verdicts.push_back({"suppresses-to-thin", "suppressing the shared leaves leaves a 0-thin graph", {{"alpha", 0}}, true});
  return f;
}

Fixture ex25_star(const nlohmann::json& in) {
  int alpha = param(in, "alpha", 1), ell = param(in, "ell", 2), n = param(in, "n", 6);
  Fixture f{"ex25-star", {{"alpha", alpha}, {"ell", ell}, {"n", n}}, star(n, 1), {}};
  f.verdicts.push_back({"certificate", "no decomposition of adhesion <= a has almost-a-thin torsos",
                        {{"alpha", alpha}, {"mode", "torso"}, {"max_nodes", n + 1}}, false});
  f.verdicts.push_back({"certificate", "with 3-centres in place of torsos a certificate exists",
                        {{"alpha", alpha}, {"mode", "three-centre"}, {"max_nodes", n + 1}}, true});
  f.verdicts.push_back({"wall-immersed", "the star does not contain the wall", {{"ell", ell}}, false});
  return f;
}

Fixture ex25_doubled(const nlohmann::json& in) {
  int alpha = param(in, "alpha", 1), ell = param(in, "ell", 3), n = param(in, "n", 6);
  Fixture f{"ex25-doubled", {{"alpha", alpha}, {"ell", ell}, {"n", n}}, star(n, 2), {}};
  f.verdicts.push_back({"certificate", "no certificate when only peripheral leaves are deleted",
                        {{"alpha", alpha}, {"mode", "peripheral-leaf-deletion"}, {"max_nodes", n + 1}}, false});
  f.verdicts.push_back({"certificate", "no certificate with 3-centres either",
                        {{"alpha", alpha}, {"mode", "three-centre"}, {"max_nodes", n + 1}}, false});
  f.verdicts.push_back({"wall-immersed", "the doubled star does not contain this wall", {{"ell", ell}}, false});
  f.verdicts.push_back({"wall-immersed", "the doubled star contains W_2 (a 6-cycle through the centre)", {{"ell", 2}}, true});
  return f;
}

Fixture two_triangles(const nlohmann::json&) {
  Multigraph g(std::vector<std::string>{"a1", "a2", "a3", "b1", "b2", "b3"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(2, 3);
  Fixture f{"two-triangles", nlohmann::json::object(), std::move(g), {}};
  f.verdicts.push_back({"three-centre", "protecting one triangle reduces the graph to exactly that triangle",
                        {{"protected", {"a1", "a2", "a3"}}}, true});
  return f;
}

Fixture spider_wall(const nlohmann::json& in) {
  int ell = param(in, "ell", 2);
  if (ell < 1) throw std::invalid_argument("spider-wall: ell must be positive");
  Fixture f{"spider-wall", {{"ell", ell}}, spider_graph(3, 2 * ell * ell), {}};
  f.verdicts.push_back({"wall-via-spider", "S_{3,2l^2} contains W_l as a strong immersion", {{"ell", ell}}, true});
  return f;
}

Fixture apex_path_wall(const nlohmann::json& in) {
  int ell = param(in, "ell", 2);
  if (ell < 1) throw std::invalid_argument("apex-path-wall: ell must be positive");
  int k = 2 * ell * ell;
  Fixture f{"apex-path-wall", {{"ell", ell}}, apex_path(3 * k - 1), {}};
  f.verdicts.push_back({"spider-subdivision", "deleting every third path edge leaves a subdivided S_{3,k}", {{"k", k}}, true});
  f.verdicts.push_back({"wall-via-apex-path", "P_{6l^2-1} * v contains W_l as a strong immersion", {{"ell", ell}}, true});
  return f;
}

using Builder = Fixture (*)(const nlohmann::json&);

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> b{
      {"ex22-star", ex22_star},     {"ex23-double-star", ex23_double_star}, {"ex25-star", ex25_star},
      {"ex25-doubled", ex25_doubled}, {"two-triangles", two_triangles},     {"spider-wall", spider_wall},
      {"apex-path-wall", apex_path_wall}};
  return b;
}

CentreMode parse_mode(const std::string& s) {
  if (s == "three-centre") return CentreMode::ThreeCentre;
  if (s == "torso") return CentreMode::Torso;
  if (s == "peripheral-leaf-deletion") return CentreMode::PeripheralLeafDeletion;
  throw std::invalid_argument("unknown centre mode '" + s + "'");
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [n, b] : builders()) names.push_back(n);
  return names;
}

Fixture fixture(const std::string& name, const nlohmann::json& params) {
  for (const auto& [n, b] : builders())
    if (n == name) return b(params);
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

VerdictOutcome evaluate(const Fixture& f, const Verdict& v) {
  auto start = std::chrono::steady_clock::now();
  VerdictOutcome o;
  o.verdict = v;
  const Multigraph& g = f.graph;
  const nlohmann::json& a = v.args;
  if (v.check == "almost-thin") {
    auto alpha = a.at("alpha").get<std::int64_t>();
    AlmostThinResult r = is_almost_alpha_thin(g, alpha);
    o.observed = r.witness.has_value();
    o.detail = std::to_string(r.candidates_tried) + " of " + std::to_string(r.candidates_total) +
               " deletion sets tried";
  } else if (v.check == "collapses-by-leaf-deletion") {
    Multigraph h = g;
    while (h.num_vertices() > 1) {
      Vertex x = -1;
      for (Vertex y = 0; y < h.num_vertices() && x == -1; ++y)
        if (h.degree(y) <= 1) x = y;
      if (x == -1) break;
      h = remove_vertices(h, {x}).graph;
    }
    o.observed = h.num_vertices() == 1;
    o.detail = std::to_string(h.num_vertices()) + " vertices remain";
  } else if (v.check == "suppresses-to-thin") {
    Multigraph h = g;
    while (true) {
      Vertex x = -1;
      for (Vertex y = 0; y < h.num_vertices() && x == -1; ++y)
        if (h.degree(y) == 2) x = y;
      if (x == -1) break;
      h = suppress(h, x);
    }
    std::int64_t t = min_thinness(h).alpha;
    o.observed = t <= a.at("alpha").get<std::int64_t>();
    o.detail = std::to_string(h.num_vertices()) + " vertices, " + std::to_string(h.num_edges()) +
               " edges, thinness " + std::to_string(t);
  } else if (v.check == "certificate") {
    auto alpha = a.at("alpha").get<std::int64_t>();
    CentreMode mode = parse_mode(a.at("mode").get<std::string>());
    TcdSearchStats st;
    o.observed = enumerate_tcds(
        g, a.at("max_nodes").get<int>(), alpha,
        [&](const TreeCutDecomposition& d) { return certify_width(g, d, alpha, mode).ok(); }, &st);
    o.detail = std::to_string(st.assignments) + " decompositions on " + std::to_string(st.trees) + " trees";
  } else if (v.check == "wall-immersed") {
    ImmersionResult r = find_immersion(build_wall(a.at("ell").get<int>()).graph, g, ImmersionMode::Strong);
    o.observed = r.status == SearchStatus::Present;
    o.exhaustive = r.status != SearchStatus::Inconclusive;
    if (r.embedding && check_embedding(build_wall(a.at("ell").get<int>()).graph, g, *r.embedding)) {
      o.exhaustive = false;
      o.detail = "witness failed validation";
    } else {
      o.detail = std::to_string(r.nodes) + " search nodes" + (r.reason.empty() ? "" : ", " + r.reason);
    }
  } else if (v.check == "three-centre") {
    VertexSet prot;
    for (const auto& l : a.at("protected")) prot.push_back(g.at(l.get<std::string>()));
    prot = make_set(prot);
    ThreeCentre c = three_centre(g, prot);
    o.observed = c.graph.same_labelled(induced_subgraph(g, prot).graph);
    o.detail = std::to_string(c.graph.num_vertices()) + " vertices, " + std::to_string(c.graph.num_edges()) + " edges";
  } else if (v.check == "spider-subdivision") {
    SpiderSubdivision s = apex_to_spider_subdivision(a.at("k").get<int>());
    auto err = check_spider_subdivision(g, s.hub, s.leaves, s.legs);
    o.observed = s.host.same_labelled(g) && !err;
    o.detail = err ? *err : std::to_string(s.leaves.size()) + " leaves, 3 legs each";
  } else if (v.check == "wall-via-spider") {
    int ell = a.at("ell").get<int>();
    Multigraph w = build_wall(ell).graph;
    auto err = check_embedding(w, g, embed_in_spider(w, 3, 2 * ell * ell));
    o.observed = !err;
    o.detail = err ? *err : "validated";
  } else if (v.check == "wall-via-apex-path") {
    int ell = a.at("ell").get<int>(), m = 6 * ell * ell;
    std::vector<Vertex> teeth;
    std::vector<Path> between, from_apex;
    Vertex apex = g.at("v");
    for (int i = 0; i < m; ++i) {
      teeth.push_back(g.at("p" + std::to_string(i)));
      from_apex.push_back({apex, teeth.back()});
      if (i > 0) between.push_back({teeth[i - 1], teeth[i]});
    }
    auto err = check_embedding(build_wall(ell).graph, g, wall_from_apex_path(g, ell, apex, teeth, between, from_apex));
    o.observed = !err;
    o.detail = err ? *err : "validated";
  } else {
    throw std::invalid_argument("unknown check '" + v.check + "'");
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return o;
}

bool FixtureReport::ok() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const VerdictOutcome& o) { return o.matches(); });
}

bool CorpusReport::ok() const {
  return std::all_of(fixtures.begin(), fixtures.end(), [](const FixtureReport& f) { return f.ok(); });
}

FixtureReport run_fixture(const Fixture& f) {
  FixtureReport r{f.name, f.params, {}};
  for (const Verdict& v : f.verdicts) r.outcomes.push_back(evaluate(f, v));
  return r;
}

CorpusReport run_all(const std::optional<std::string>& only) {
  const std::vector<std::pair<std::string, nlohmann::json>> sweep{
      {"ex22-star", {{"alpha", 1}}},
      {"ex22-star", {{"alpha", 2}}},
      {"ex23-double-star", {{"alpha", 1}}},
      {"ex25-star", {{"alpha", 1}, {"ell", 2}, {"n", 6}}},
      {"ex25-doubled", {{"alpha", 1}, {"ell", 3}, {"n", 6}}},
      {"two-triangles", nlohmann::json::object()},
      {"spider-wall", {{"ell", 2}}},
      {"apex-path-wall", {{"ell", 2}}},
  };
  if (only) fixture(*only);  // rejects unknown names
  CorpusReport r;
  for (const auto& [name, params] : sweep)
    if (!only || *only == name) r.fixtures.push_back(run_fixture(fixture(name, params)));
  return r;
}

nlohmann::json report_to_json(const CorpusReport& r) {
  nlohmann::json j;
  j["ok"] = r.ok();
  j["fixtures"] = nlohmann::json::array();
  for (const FixtureReport& f : r.fixtures) {
    nlohmann::json fj{{"name", f.name}, {"params", f.params}, {"ok", f.ok()}, {"verdicts", nlohmann::json::array()}};
    for (const VerdictOutcome& o : f.outcomes)
      fj["verdicts"].push_back({{"check", o.verdict.check},
                                {"claim", o.verdict.claim},
                                {"args", o.verdict.args},
                                {"expected", o.verdict.expected},
                                {"observed", o.observed},
                                {"exhaustive", o.exhaustive},
                                {"match", o.matches()},
                                {"detail", o.detail}});
    j["fixtures"].push_back(std::move(fj));
  }
  return j;
}

}  // namespace thinwall
