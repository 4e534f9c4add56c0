#include "doctest.h"
#include "thinwall/multigraph.hpp"
#include "thinwall/parameters.hpp"

using namespace thinwall;

TEST_CASE("ell_of_alpha at small alpha") {
  CHECK(ell_of_alpha(1) == 36);
  // alpha = 0: [(1)(2+4) + 0] + 0 + 2.
  CHECK(ell_of_alpha(0) == 8);
  // alpha = 2: [(5)(6+4)+6] + [2((5)(6+4)+6)] + 2 = 56 + 112 + 2.
  CHECK(ell_of_alpha(2) == 170);
}

TEST_CASE("ell_of_alpha is increasing") {
  BigInt prev = ell_of_alpha(0);
  for (int a = 1; a < 50; ++a) {
    BigInt cur = ell_of_alpha(a);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("symbolic parameters without constants") {
  Parameters p = make_parameters(2);
  CHECK(p.p == 24);
  CHECK_FALSE(p.d.has_value());
  CHECK_FALSE(p.alpha.has_value());
  CHECK(p.d_expr == "g(2)*24*h(8,24)^2");
  CHECK(p.a_expr == "(2*w(2)+2)*d");
  CHECK(p.alpha_expr.find("max{") == 0);
  auto j = parameters_to_json(p);
  CHECK(j["alpha"].is_null());
  CHECK(j["p"] == "24");
}

TEST_CASE("numeric parameters from constants") {
  auto ext = constants_from_json(nlohmann::json::parse(R"({"g": {"2": 1}, "w": {"2": 1}, "h": {"8,24": "1"}})"));
  Parameters p = make_parameters(2, ext);
  REQUIRE(p.alpha.has_value());
  CHECK(*p.d == 24);
  CHECK(*p.a == 96);
  CHECK(*p.k == 50);
  // k(8*4+1+24*256) = 308850; 24*576 + C(256,2)*24*576 + 600 + 4800 = 451234584.
  CHECK(*p.alpha == 451234584);
  CHECK(p.alpha_expr == "451234584");
}

TEST_CASE("partial constants keep the rest symbolic") {
  ExternalConstants ext;
  ext.g[3] = 2;
  ext.h[{18, 54}] = 3;
  Parameters p = make_parameters(3, ext);
  CHECK(*p.d == 2 * 54 * 9);
  CHECK_FALSE(p.a.has_value());
  CHECK(p.k_expr == "(972+1)*(w(3)+1)");
}

TEST_CASE("huge constants stay exact") {
  ExternalConstants ext;
  ext.g[2] = BigInt("1000000000000000000000");
  ext.w[2] = 7;
  ext.h[{8, 24}] = BigInt("123456789012345678901234567890");
  Parameters p = make_parameters(2, ext);
  BigInt d = BigInt("1000000000000000000000") * 24 * BigInt("123456789012345678901234567890") *
             BigInt("123456789012345678901234567890");
  CHECK(*p.d == d);
  CHECK(*p.k == (d + 1) * 8);
}

TEST_CASE("malformed constants are rejected") {
  CHECK_THROWS(constants_from_json(nlohmann::json::parse(R"({"h": {"8": 1}})")));
  CHECK_THROWS(constants_from_json(nlohmann::json::parse(R"({"g": {"2": "x"}})")));
  CHECK_THROWS(make_parameters(0));
  CHECK_THROWS(constants_from_json(nlohmann::json::parse(R"({"g": {}, "g_fn": {}})")));
}

TEST_CASE("function-style table names") {
  auto ext = constants_from_json(nlohmann::json::parse(R"({"g_fn": {"2": 1}, "w_fn": {"2": 1}, "h_fn": {"8,24": 1}})"));
  CHECK(*make_parameters(2, ext).alpha == 451234584);
}
