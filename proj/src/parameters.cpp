#include "thinwall/parameters.hpp"

#include "thinwall/multigraph.hpp"

namespace thinwall {

namespace {

BigInt parse_big(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw GraphError("constants: " + where + " is not a non-negative integer");
    return BigInt(s);
  }
  throw GraphError("constants: " + where + " must be an integer or a decimal string");
}

int parse_int(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw GraphError("constants: bad key '" + s + "' in " + where);
  }
}

std::string str(const BigInt& v) { return v.str(); }

}  // namespace

ExternalConstants constants_from_json(const nlohmann::json& in) {
  if (!in.is_object()) throw GraphError("constants: expected an object");
  ExternalConstants c;
  nlohmann::json j = nlohmann::json::object();
  for (auto& [key, val] : in.items()) {
    std::string name = key.size() == 4 && key.substr(1) == "_fn" ? key.substr(0, 1) : key;
    if (name != "g" && name != "w" && name != "h") throw GraphError("constants: unknown table '" + key + "'");
    if (!val.is_object()) throw GraphError("constants: table '" + key + "' must be an object");
    if (j.contains(name)) throw GraphError("constants: table '" + name + "' given twice");
    j[name] = val;
  }
  if (j.contains("g"))
    for (auto& [k, v] : j["g"].items()) c.g[parse_int(k, "g")] = parse_big(v, "g[" + k + "]");
  if (j.contains("w"))
    for (auto& [k, v] : j["w"].items()) c.w[parse_int(k, "w")] = parse_big(v, "w[" + k + "]");
  if (j.contains("h"))
    for (auto& [k, v] : j["h"].items()) {
      auto comma = k.find(',');
      if (comma == std::string::npos) throw GraphError("constants: h keys are \"s,t\", got '" + k + "'");
      c.h[{parse_int(k.substr(0, comma), "h"), parse_int(k.substr(comma + 1), "h")}] = parse_big(v, "h[" + k + "]");
    }
  return c;
}

Parameters make_parameters(int ell, const ExternalConstants& ext) {
  if (ell < 1) throw GraphError("parameters: ell must be positive");
  Parameters p;
  p.ell = ell;
  const BigInt L = ell, L2 = L * L, L4 = L2 * L2;
  p.p = 6 * L2;
  const int s = 2 * ell * ell, t = 6 * ell * ell;
  if (auto it = ext.g.find(ell); it != ext.g.end()) p.g = it->second;
  if (auto it = ext.w.find(ell); it != ext.w.end()) p.w = it->second;
  if (auto it = ext.h.find({s, t}); it != ext.h.end()) p.h = it->second;

  const std::string gs = p.g ? str(*p.g) : "g(" + std::to_string(ell) + ")";
  const std::string ws = p.w ? str(*p.w) : "w(" + std::to_string(ell) + ")";
  const std::string hs = p.h ? str(*p.h) : "h(" + std::to_string(s) + "," + std::to_string(t) + ")";
  if (p.g && p.h) p.d = *p.g * p.p * *p.h * *p.h;
  p.d_expr = p.d ? str(*p.d) : gs + "*" + str(p.p) + "*" + hs + "^2";
  const std::string ds = p.d ? str(*p.d) : "d";
  if (p.d && p.w) {
    p.a = (2 * *p.w + 2) * *p.d;
    p.k = (*p.d + 1) * (*p.w + 1);
  }
  p.a_expr = p.a ? str(*p.a) : "(2*" + ws + "+2)*" + ds;
  p.k_expr = p.k ? str(*p.k) : "(" + ds + "+1)*(" + ws + "+1)";

  const BigInt c16 = 16 * L4;
  const BigInt sq = 36 * L4;  // (6 ell^2)^2
  const BigInt first_factor = 8 * L2 + 1 + 6 * L2 * c16;
  const BigInt fixed = p.p * sq + (c16 * (c16 - 1) / 2) * p.p * sq;
  if (p.k && p.a) {
    BigInt kd = *p.k * *p.d;
    BigInt half = (kd + 1) / 2;
    BigInt first = *p.k * first_factor;
    BigInt second = fixed + half + *p.a * *p.k;
    p.alpha = first > second ? first : second;
    p.alpha_expr = str(*p.alpha);
  } else {
    const std::string ks = p.k ? str(*p.k) : "k";
    const std::string as = p.a ? str(*p.a) : "a";
    p.alpha_expr = "max{" + ks + "*" + str(first_factor) + ", " + str(fixed) + " + ceil(" + ks + "*" + ds +
                   "/2) + " + as + "*" + ks + "}";
  }
  return p;
}

BigInt ell_of_alpha(const BigInt& a) {
  const BigInt a2 = a * a;
  return ((a2 + 1) * (2 * (a + 1) + 4) + a2 + a) + (a * ((a2 + 1) * (2 * (a + 1) + a + 2) + a2 + a)) + 2;
}

nlohmann::json parameters_to_json(const Parameters& p) {
  auto opt = [](const std::optional<BigInt>& v) -> nlohmann::json {
    return v ? nlohmann::json(v->str()) : nlohmann::json(nullptr);
  };
  return {{"ell", p.ell},       {"p", p.p.str()},          {"g", opt(p.g)},
          {"w", opt(p.w)},      {"h", opt(p.h)},           {"d", opt(p.d)},
          {"a", opt(p.a)},      {"k", opt(p.k)},           {"alpha", opt(p.alpha)},
          {"d_expr", p.d_expr}, {"a_expr", p.a_expr},      {"k_expr", p.k_expr},
          {"alpha_expr", p.alpha_expr}};
}

}  // namespace thinwall
