#include "thinwall/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "thinwall/corpus.hpp"
#include "thinwall/graph_io.hpp"
#include "thinwall/immersion.hpp"
#include "thinwall/parameters.hpp"
#include "thinwall/synthesis.hpp"
#include "thinwall/thinness.hpp"
#include "thinwall/treecut.hpp"
#include "thinwall/walls.hpp"

namespace thinwall {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Multigraph read_graph(const std::string& path) {
  try {
    return graph_from_json(read_json(path));
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text << "\n";
}

nlohmann::json labels_of(const Multigraph& g, const std::vector<Vertex>& vs) {
  nlohmann::json j = nlohmann::json::array();
  for (Vertex v : vs) j.push_back(g.label(v));
  return j;
}

CentreMode parse_mode(const std::string& s) {
  if (s == "three-centre") return CentreMode::ThreeCentre;
  if (s == "torso") return CentreMode::Torso;
  if (s == "peripheral-leaf-deletion") return CentreMode::PeripheralLeafDeletion;
  throw InputError("unknown --mode '" + s + "'");
}

struct Globals {
  unsigned seed = 1;
  std::optional<int> cap;
  bool dot = false;
};

int gen_wall(const Globals& gl, int ell, const std::string& out_path, std::ostream& out) {
  if (ell < 1) throw InputError("--ell must be positive");
  Multigraph w = build_wall(ell).graph;
  std::string text = gl.dot ? graph_to_dot(w, "W" + std::to_string(ell)) : graph_to_json(w).dump(2);
  if (out_path.empty())
    out << text << "\n";
  else
    write_file(out_path, text);
  return kExitYes;
}

int certify_wall(const Globals& gl, const std::string& in_path, std::ostream& out) {
  Multigraph g = read_graph(in_path);
  Wall w;
  try {
    w = wall_from_graph(g);
  } catch (const GraphError& e) {
    throw InputError(in_path + ": " + e.what());
  }
  const int ell = w.ell;
  nlohmann::json j;
  j["ell"] = ell;
  j["vertices"] = g.num_vertices();
  j["expected_vertices"] = 2 * ell * ell - 2;
  j["edges"] = g.num_edges();
  j["max_degree"] = g.max_degree();
  j["connected"] = is_connected(g);
  bool simple = true;
  for (const Edge& e : g.edges()) simple = simple && e.mult == 1;
  j["simple"] = simple;
  std::map<std::string, int> census;
  for (Vertex v = 0; v < g.num_vertices(); ++v) ++census[std::to_string(g.degree(v))];
  j["degree_census"] = census;
  bool ok = g.num_vertices() == 2 * ell * ell - 2 && g.max_degree() <= 3 && is_connected(g) && simple;
  if (ell >= 3) {
    VertexSet z = well_linked_set(w);
    j["z"] = labels_of(w.graph, z);
    WellLinkedReport wl = certify_well_linked(w.graph, z, 8, 200, gl.seed);
    ThreeConnectedReport tc = certify_three_connected_pairs(w.graph, z);
    j["well_linked"] = {{"certified", wl.certified},
                        {"exhaustive", wl.exhaustive},
                        {"pairs_checked", wl.pairs_checked},
                        {"pairs_total", wl.pairs_total}};
    j["three_connected_pairs"] = {{"certified", tc.certified}, {"pairs_checked", tc.pairs_checked}};
    ok = ok && wl.certified && tc.certified;
  }
  j["result"] = ok ? "certified" : "violation";
  out << j.dump(2) << "\n";
  return ok ? kExitYes : kExitNo;
}

int check_thin(const Globals& gl, const std::string& in_path, std::int64_t alpha, bool almost, std::ostream& out) {
  Multigraph g = read_graph(in_path);
  const int cap = gl.cap.value_or(kDefaultThinCap);
  nlohmann::json j;
  j["alpha"] = alpha;
  if (almost) {
    AlmostThinResult r = is_almost_alpha_thin(g, alpha, cap);
    if (r.witness) {
      j["result"] = "almost-thin";
      j["deleted"] = labels_of(g, r.witness->deleted);
      j["order"] = labels_of(g, r.witness->order);
      j["jump_profile"] = r.witness->jump_profile;
    } else {
      j["result"] = "absent";
      j["search_space"] = {{"deletion_sets", r.candidates_total}, {"tried", r.candidates_tried}};
    }
    out << j.dump(2) << "\n";
    return r.witness ? kExitYes : kExitNo;
  }
  auto r = is_alpha_thin(g, alpha, cap);
  if (r) {
    j["result"] = "thin";
    j["order"] = labels_of(g, r->order);
    j["jump_profile"] = r->jump_profile;
  } else {
    j["result"] = "absent";
    j["search_space"] = {{"prefix_sets", std::uint64_t{1} << g.num_vertices()}};
  }
  out << j.dump(2) << "\n";
  return r ? kExitYes : kExitNo;
}

int check_immersion(const Globals& gl, const std::string& pattern, const std::string& host, const std::string& mode,
                    double timeout, std::ostream& out) {
  Multigraph h = read_graph(pattern), g = read_graph(host);
  if (mode != "strong" && mode != "weak") throw InputError("--mode must be strong or weak");
  ImmersionOptions o;
  o.timeout_seconds = timeout;
  if (gl.cap) o.max_host = *gl.cap;
  ImmersionResult r = find_immersion(h, g, mode == "strong" ? ImmersionMode::Strong : ImmersionMode::Weak, o);
  nlohmann::json j;
  j["nodes"] = r.nodes;
  if (!r.reason.empty()) j["reason"] = r.reason;
  switch (r.status) {
    case SearchStatus::Present:
      j["result"] = "present";
      j["embedding"] = embedding_to_json(h, g, *r.embedding);
      break;
    case SearchStatus::Absent: j["result"] = "absent"; break;
    case SearchStatus::Inconclusive: j["result"] = "inconclusive"; break;
  }
  out << j.dump(2) << "\n";
  return r.status == SearchStatus::Present ? kExitYes : r.status == SearchStatus::Absent ? kExitNo : kExitInconclusive;
}

TreeCutDecomposition read_tcd(const Multigraph& g, const std::string& path) {
  try {
    return tcd_from_json(g, read_json(path));
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

int certify(const Globals& gl, const std::string& graph_path, const std::string& tcd_path, std::int64_t alpha,
            const std::string& mode, std::ostream& out) {
  Multigraph g = read_graph(graph_path);
  TreeCutDecomposition d = read_tcd(g, tcd_path);
  if (gl.dot) {
    out << tcd_to_dot(g, d);
    return kExitYes;
  }
  CertifyResult r = certify_width(g, d, alpha, parse_mode(mode), gl.cap.value_or(kDefaultThinCap));
  nlohmann::json j;
  if (r.ok()) {
    j["result"] = "certified";
    j["certificate"] = certificate_to_json(*r.certificate);
  } else {
    const WidthViolation& v = *r.violation;
    j["result"] = "violation";
    j["kind"] = v.kind == WidthViolation::Kind::Invalid    ? "invalid"
                : v.kind == WidthViolation::Kind::Adhesion ? "adhesion"
                                                           : "torso";
    if (v.node) j["node"] = *v.node;
    if (v.edge) j["edge"] = {v.edge->first, v.edge->second};
    j["detail"] = v.detail;
  }
  out << j.dump(2) << "\n";
  return r.ok() ? kExitYes : kExitNo;
}

int decompose(const Globals& gl, const std::string& in_path, int ell, const std::string& params_path,
              const std::string& tcd_out, const std::string& cert_out, bool direct, std::ostream& out) {
  Multigraph g = read_graph(in_path);
  if (ell < 2) throw InputError("--ell must be at least 2");
  SynthesisOptions o;
  if (!params_path.empty()) {
    try {
      o.constants = constants_from_json(read_json(params_path));
    } catch (const GraphError& e) {
      throw InputError(params_path + ": " + e.what());
    }
  }
  o.direct_search = direct;
  if (gl.cap) o.thin_cap = o.treewidth_cap = *gl.cap;
  SynthesisResult r = synthesize(g, ell, o);
  if (r.decomposition) {
    if (!tcd_out.empty()) write_file(tcd_out, tcd_to_json(g, *r.decomposition).dump(2));
    if (!cert_out.empty()) write_file(cert_out, certificate_to_json(*r.certificate).dump(2));
  }
  if (gl.dot && r.decomposition)
    out << tcd_to_dot(g, *r.decomposition);
  else
    out << synthesis_to_json(g, r).dump(2) << "\n";
  switch (r.outcome) {
    case SynthesisResult::Outcome::Certificate: return kExitYes;
    case SynthesisResult::Outcome::Wall: return kExitNo;
    case SynthesisResult::Outcome::Partial: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int corpus_run(const std::string& only, std::ostream& out) {
  CorpusReport r;
  try {
    r = only.empty() ? run_all() : run_all(only);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out << report_to_json(r).dump(2) << "\n";
  return r.ok() ? kExitYes : kExitNo;
}

}  // namespace

std::string tcd_to_dot(const Multigraph& g, const TreeCutDecomposition& d) {
  std::ostringstream s;
  s << "graph T {\n";
  for (Node t = 0; t < d.num_nodes(); ++t) {
    s << "  t" << t << " [label=\"" << t << ": {";
    for (std::size_t i = 0; i < d.parts[t].size(); ++i) s << (i ? ", " : "") << g.label(d.parts[t][i]);
    s << "}\"];\n";
  }
  auto adh = adhesion(g, d);
  for (auto [a, b] : d.tree) s << "  t" << a << " -- t" << b << " [label=\"" << adh.per_edge[{a, b}] << "\"];\n";
  s << "}\n";
  return s.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Walls, thin decompositions and strong immersions of multigraphs"};
  app.require_subcommand(1);
  Globals gl;
  int cap = 0;
  app.add_option("--seed", gl.seed, "Seed for sampled checks (default 1)");
  auto* cap_opt = app.add_option("--cap", cap, "Override the desk-scale size caps");
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  auto* dot_flag = app.add_flag("--dot", "DOT output where a graph or decomposition is produced");
  dot_flag->excludes(json_flag);

  int ell = 0;
  std::string in, out_path, pattern, host, mode, centre_mode, graph, tcd, params, cert, only;
  std::int64_t alpha = 0;
  bool almost = false, no_direct = false;
  double timeout = 600;

  auto* gw = app.add_subcommand("gen-wall", "Generate the wall W_ell (2 ell^2 - 2 vertices)");
  gw->add_option("--ell", ell, "Wall size")->required();
  gw->add_option("--out", out_path, "Output file (stdout when omitted)");

  auto* cw = app.add_subcommand("certify-wall", "Check a wall's size, degrees and the linkedness of its top row");
  cw->add_option("--in", in, "Wall JSON")->required();

  auto* ct = app.add_subcommand("check-thin", "Decide alpha-thinness or almost-alpha-thinness exactly");
  ct->add_option("--in", in, "Graph JSON")->required();
  ct->add_option("--alpha", alpha, "alpha")->required();
  ct->add_flag("--almost", almost, "Allow deleting a set of at most alpha vertices of at most alpha neighbours");

  auto* ci = app.add_subcommand("check-immersion", "Search for a strong or weak immersion of a pattern in a host");
  ci->add_option("--pattern", pattern, "Pattern graph JSON")->required();
  ci->add_option("--host", host, "Host graph JSON")->required();
  ci->add_option("--mode", mode, "strong or weak")->default_val("strong");
  ci->add_option("--timeout", timeout, "Seconds before giving up")->default_val(600);

  auto* cf = app.add_subcommand("certify", "Check adhesion and almost-thin reduced torsos of a tree-cut decomposition");
  cf->add_option("--graph", graph, "Graph JSON")->required();
  cf->add_option("--tcd", tcd, "Decomposition JSON")->required();
  cf->add_option("--alpha", alpha, "alpha")->required();
  cf->add_option("--mode", centre_mode, "three-centre, torso or peripheral-leaf-deletion")->default_val("three-centre");

  auto* dc = app.add_subcommand("decompose", "Build a certified decomposition or a strong immersion of W_ell");
  dc->add_option("--in", in, "Graph JSON")->required();
  dc->add_option("--ell", ell, "Wall size")->required();
  dc->add_option("--params", params, "External constants as lookup tables g_fn, w_fn, h_fn");
  dc->add_option("--out", out_path, "Write the decomposition here");
  dc->add_option("--cert", cert, "Write the certificate here");
  dc->add_flag("--no-direct-search", no_direct, "Skip the initial wall search");

  auto* co = app.add_subcommand("corpus", "Regression fixtures");
  auto* cr = co->add_subcommand("run", "Run every fixture verdict");
  co->require_subcommand(1);
  cr->add_option("--only", only, "Run one fixture family");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (cap_opt->count()) gl.cap = cap;
  gl.dot = dot_flag->count() > 0;

  try {
    if (gw->parsed()) return gen_wall(gl, ell, out_path, out);
    if (cw->parsed()) return certify_wall(gl, in, out);
    if (ct->parsed()) return check_thin(gl, in, alpha, almost, out);
    if (ci->parsed()) return check_immersion(gl, pattern, host, mode, timeout, out);
    if (cf->parsed()) return certify(gl, graph, tcd, alpha, centre_mode, out);
    if (dc->parsed()) return decompose(gl, in, ell, params, out_path, cert, !no_direct, out);
    if (cr->parsed()) return corpus_run(only, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CapExceeded& e) {
    out << nlohmann::json{{"result", "inconclusive"}, {"reason", e.what()}}.dump(2) << "\n";
    return kExitInconclusive;
  } catch (const GraphError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "input error: no command\n";
  return kExitInputError;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace thinwall
