#include <doctest.h>

#include "maschke/tangent/tangent.hpp"

using namespace maschke::tangent;

TEST_CASE("parser") {
  auto f = parse_poly("(x + y)^2 - x*x - 2*x*y", {"x", "y"});
  CHECK(f == parse_poly("y^2", {"x", "y"}));
  CHECK_THROWS_AS(parse_poly("x + z", {"x", "y"}), ParseError);
  CHECK_THROWS_AS(parse_poly("x +", {"x"}), ParseError);
  CHECK_THROWS_AS(parse_poly("(x", {"x"}), ParseError);
  CHECK(parse_upoly("y^8 + 14*y^4 + 1", "y") == form_A());
}

TEST_CASE("the quotient discriminant") {
  CHECK(quotient_discriminant() == parse_upoly("-15*y^8 - 64*y^6 + 542*y^4 - 64*y^2 - 15", "y"));
}

TEST_CASE("every symbolic check passes") {
  auto results = run_checks(all_checks(), 2);
  REQUIRE(results.size() == all_checks().size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    CAPTURE(to_string(results[i].id));
    CHECK(results[i].id == all_checks()[i]);
    CHECK(results[i].pass);
    CHECK(results[i].digest().size() == 16);
  }
}

TEST_CASE("check names round trip and digests are stable") {
  for (auto id : all_checks()) CHECK(parse_check(to_string(id)) == id);
  CHECK_FALSE(parse_check("NOPE").has_value());
  CHECK(run_check(CheckId::ABC).digest() == run_check(CheckId::ABC).digest());
  CHECK(run_check(CheckId::WQUARTIC).witness.find("-1/36") != std::string::npos);
}

TEST_CASE("genus report") {
  auto g = curve_invariants();
  CHECK(g.expected());
  CHECK(g.genus_cplus == 9);
  CHECK(g.genus_cminus == 9);
  CHECK(g.branch_points == 32);
  CHECK(g.genus_ctilde == 33);
  CHECK(g.genus_cbar == 3);
  CHECK(g.genus_c3 == 3);
  CHECK(g.genus_c7 == 7);
}

TEST_CASE("smoothness test detects a node") {
  // x^2 v^2 - y^2 u^2 has a node at the origin of the affine chart
  std::vector<std::vector<std::int64_t>> node(3, std::vector<std::int64_t>(3, 0));
  node[2][0] = 1;
  node[0][2] = -1;
  CHECK_FALSE(bihomogeneous_smooth_mod_p(node, 2, 2, 10007));
  // x^2 y^2 + x^2 + y^2 + 3 is smooth for large p
  std::vector<std::vector<std::int64_t>> smooth(3, std::vector<std::int64_t>(3, 0));
  smooth[2][2] = 1;
  smooth[2][0] = 1;
  smooth[0][2] = 1;
  smooth[0][0] = 3;
  CHECK(bihomogeneous_smooth_mod_p(smooth, 2, 2, 10007));
}

TEST_CASE("hyperelliptic genus") {
  CHECK(hyperelliptic_genus(form_A()) == 3);
  CHECK_FALSE(hyperelliptic_genus(form_A() * form_A()).has_value());
}
