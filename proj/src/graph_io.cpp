#include "thinwall/graph_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace thinwall {

nlohmann::json graph_to_json(const Multigraph& g) {
  nlohmann::json j;
  j["vertices"] = g.labels();
  std::vector<std::tuple<std::string, std::string, int>> es;
  for (const Edge& e : g.edges()) {
    auto [a, b] = std::minmax(g.label(e.u), g.label(e.v));
    es.emplace_back(a, b, e.mult);
  }
  std::sort(es.begin(), es.end());
  j["edges"] = nlohmann::json::array();
  for (auto& [a, b, m] : es) j["edges"].push_back({a, b, m});
  return j;
}

Multigraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw GraphError("graph JSON needs \"vertices\" and \"edges\"");
  if (!j["vertices"].is_array() || !j["edges"].is_array())
    throw GraphError("\"vertices\" and \"edges\" must be arrays");
  Multigraph g;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw GraphError("vertex labels must be strings");
    g.add_vertex(v.get<std::string>());
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_number_integer())
      throw GraphError("edges must be [u, v, multiplicity] triples");
    auto u = e[0].get<std::string>(), v = e[1].get<std::string>();
    auto m = e[2].get<long long>();
    if (!(u < v)) throw GraphError("edge [" + u + ", " + v + "] must satisfy u < v");
    if (m < 1) throw GraphError("edge [" + u + ", " + v + "] has multiplicity < 1");
    if (!seen.insert({u, v}).second) throw GraphError("duplicate edge [" + u + ", " + v + "]");
    g.add_edge(g.at(u), g.at(v), static_cast<int>(m));
  }
  return g;
}

namespace {
std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string graph_to_dot(const Multigraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << dot_quote(name) << " {\n";
  for (const auto& l : g.labels()) os << "  " << dot_quote(l) << ";\n";
  for (const Edge& e : g.edges()) {
    os << "  " << dot_quote(g.label(e.u)) << " -- " << dot_quote(g.label(e.v));
    if (e.mult > 1) os << " [label=\"" << e.mult << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace thinwall
