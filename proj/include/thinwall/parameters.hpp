#pragma once

// Parameter formulas of the excluded-wall construction. g, w and h are
// constants of external theorems; they are looked up in tables and stay
// symbolic when absent.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace thinwall {

using BigInt = boost::multiprecision::cpp_int;

struct ExternalConstants {
  std::map<int, BigInt> g;                  // g(ell): neighbour bound for 3-edge-connected graphs
  std::map<int, BigInt> w;                  // w(ell): tree-width bound without a wall subdivision
  std::map<std::pair<int, int>, BigInt> h;  // h(s, t): star-comb threshold
};

/// {"g": {"2": 5}, "w": {"2": 7}, "h": {"8,24": 100}}; values may be integers or decimal strings.
/// The tables may also be named g_fn, w_fn and h_fn.
ExternalConstants constants_from_json(const nlohmann::json& j);

struct Parameters {
  int ell = 0;
  BigInt p;  // 6 ell^2
  std::optional<BigInt> g, w, h;
  std::optional<BigInt> d, a, k, alpha;
  // Human-readable forms; numbers substituted where known.
  std::string d_expr, a_expr, k_expr, alpha_expr;
};

Parameters make_parameters(int ell, const ExternalConstants& ext = {});

/// The wall size excluded at a given alpha:
/// [(a^2+1)(2(a+1)+4) + a^2 + a] + [a((a^2+1)(2(a+1)+a+2) + a^2 + a)] + 2.
BigInt ell_of_alpha(const BigInt& alpha);

nlohmann::json parameters_to_json(const Parameters& p);

}  // namespace thinwall
