#include <doctest.h>

#include <string>

#include "minkval/inequalities.hpp"

using namespace minkval;

TEST_CASE("body json: serialization is a fixed point and diagnostics name the offending field") {
  json cube = polytope_to_json(Polytope::cube01(3));
  Body<Rational> b = body_from_json<Rational>(cube);
  CHECK(body_volume<Rational>(b) == Rational(1));
  json once = body_to_json<Rational>(b);
  json twice = body_to_json<Rational>(body_from_json<Rational>(once));
  CHECK(once == twice);

  SplitMix64 zrng(3);
  json zj = zonotope_to_json(seeded_zonotope(zrng, 2, 3));
  CHECK(body_to_json<Rational>(body_from_json<Rational>(zj)) == zj);

  CHECK_THROWS_WITH_AS(body_from_json<Rational>(json{{"type", "polytope"}}),
                       "body json: polytope needs a nonempty 'vertices' array",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(body_from_json<Rational>(json{{"type", "zonotope"}}),
                       "body json: zonotope needs field 'center'", std::invalid_argument);
  CHECK_THROWS_WITH_AS(body_from_json<Rational>(json{{"type", "blob"}}),
                       "body json: unknown type 'blob'", std::invalid_argument);
  json badvert = json::parse(R"({"type":"polytope","vertices":[[0.5,1]]})");
  CHECK_THROWS_AS(body_from_json<Rational>(badvert), std::invalid_argument);
}

TEST_CASE("operator expressions build composites and reject malformed input") {
  json expr = json::parse(R"({"op":"lambda","of":{"op":"projection_body"}})");
  auto op = operator_from_json<Rational>(expr, 16);
  CHECK(discover_degree<Rational>(op, Body<Rational>(Polytope::cube_sym(3)), 7) == 1);

  json sum = json::parse(
      R"({"op":"sum","terms":[{"op":"projection_body"},{"op":"scale","factor":"1/2","of":{"op":"identity"}}]})");
  auto op2 = operator_from_json<Rational>(sum, 16);
  Body<Rational> v = op2(Body<Rational>(Polytope::cube_sym(3)));
  Vec<Rational> e(3);
  e.c[0] = 1;
  // shadow area 4 plus half the cube's own support 1
  CHECK(support<Rational>(v, e) == Rational(9, 2));

  CHECK_THROWS_AS(operator_from_json<Rational>(json{{"op", "warp"}}, 16), std::invalid_argument);
  CHECK_THROWS_AS(operator_from_json<Rational>(json::array(), 16), std::invalid_argument);
  CHECK_THROWS_AS(operator_from_json<Rational>(json{{"op", "lambda"}}, 16), std::invalid_argument);
}

TEST_CASE("report json carries the full schema and scalars render deterministically") {
  SuiteParams p;
  p.count = 1;
  p.ball_n = 16;
  p.dirs = 6;
  p.triples = 50;
  VerificationReport r = run_suite<Rational>("symmetry", p);
  json j = r.to_json();
  CHECK(j.contains("suite"));
  CHECK(j.contains("config"));
  CHECK(j.contains("cases"));
  CHECK(j.contains("pass"));
  for (const char* key : {"n", "ballN", "tol", "arith", "seed"}) CHECK(j["config"].contains(key));
  CHECK(j["config"]["arith"] == "exact");
  CHECK(j["cases"].size() == r.cases.size());
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("lhs"));
    CHECK(c.contains("rhs"));
    CHECK(c.contains("relation"));
    CHECK(c.contains("slack"));
    CHECK(c.contains("pass"));
  }

  CHECK(render_scalar(Rational(1, 3)) == "1/3");
  CHECK(render_scalar(0.1) == "0.10000000000000001");
  CHECK(render_scalar(3.0) == "3");
}
