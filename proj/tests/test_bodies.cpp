#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "minkval/bodies.hpp"
#include "minkval/seeded.hpp"

using namespace minkval;

namespace {

Vec<Rational> v2(Rational a, Rational b) {
  Vec<Rational> v(2);
  v.c[0] = a;
  v.c[1] = b;
  return v;
}

Vec<Rational> v3(Rational a, Rational b, Rational c) {
  Vec<Rational> v(3);
  v.c[0] = a;
  v.c[1] = b;
  v.c[2] = c;
  return v;
}

Rational max_vertex_dot(const std::vector<Vec<Rational>>& verts, const Vec<Rational>& x) {
  Rational best = dot(verts[0], x);
  for (const auto& v : verts) best = std::max(best, dot(v, x));
  return best;
}

}  // namespace

TEST_CASE("polytope construction and support") {
  Polytope cube = Polytope::cube01(3);
  CHECK(cube.verts().size() == 8);
  CHECK(cube.volume() == Rational(1));

  Vec<Rational> x = v3(2, -3, Rational(1, 2));
  // max over {0,1}^3 of x . v picks positive coordinates only
  CHECK(support<Rational>(cube, x) == Rational(5, 2));
  CHECK(support<double>(cube, vec_cast<double>(x)) == doctest::Approx(2.5));

  Polytope sym = Polytope::cube_sym(3);
  SplitMix64 rng(2026);
  for (int t = 0; t < 20; ++t) {
    auto dirs = seeded_generators(rng, 3, 1);
    Rational expect = abs_of(dirs[0].c[0]) + abs_of(dirs[0].c[1]) + abs_of(dirs[0].c[2]);
    CHECK(support<Rational>(sym, dirs[0]) == expect);
  }

  Polytope empty;
  Vec<Rational> e1 = v3(1, 0, 0);
  CHECK_THROWS_AS(support<Rational>(empty, e1), std::domain_error);
}

TEST_CASE("zonotope canonicalization, vertices, and support") {
  // zero generators dropped, signs canonicalized, duplicates kept
  std::vector<Vec<Rational>> gens = {v2(-1, 0), v2(0, 0), v2(0, 1), v2(1, 0)};
  Zonotope z(2, Vec<Rational>(2), gens);
  CHECK(z.gens().size() == 3);

  Zonotope cube = Zonotope::cube_sym(3);
  CHECK(cube.vertices().size() == 8);
  CHECK(cube.polytope().volume() == Rational(8));
  for (const auto& v : cube.vertices())
    for (int j = 0; j < 3; ++j) CHECK(abs_of(v.c[j]) == Rational(1));

  // support of [-1,1]^3 is the l1 norm of the direction
  Vec<Rational> x = v3(Rational(3, 7), -2, Rational(1, 3));
  CHECK(support<Rational>(cube, x) == Rational(3, 7) + 2 + Rational(1, 3));

  // a zonotope with no generators is a point
  Zonotope pt(2, v2(Rational(1, 2), -1), {});
  CHECK(pt.vertices().size() == 1);
  CHECK(support<Rational>(pt, v2(2, 3)) == Rational(1) - 3);

  // materialization cap
  std::vector<Vec<Rational>> many;
  SplitMix64 rng(7);
  many = seeded_generators(rng, 3, kZonotopeVertexCap + 1);
  Zonotope big(3, Vec<Rational>(3), many);
  CHECK_THROWS_AS(big.vertices(), std::domain_error);
  // generator-level support still fine
  CHECK_NOTHROW(support<Rational>(big, v3(1, 2, 3)));
}

TEST_CASE("zonotope support agrees with materialized vertex maximum") {
  SplitMix64 rng(11);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      auto gens = seeded_generators(rng, n, 3 + static_cast<int>(rng.below(4)));
      auto center = seeded_generators(rng, n, 1)[0];
      Zonotope z(n, center, gens);
      const auto& verts = z.vertices();
      for (int t = 0; t < 10; ++t) {
        auto x = seeded_generators(rng, n, 1)[0];
        Rational exact = support<Rational>(z, x);
        CHECK(exact == max_vertex_dot(verts, x));
        double approx = support<double>(z, vec_cast<double>(x));
        CHECK(approx == doctest::Approx(to_double(exact)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("zonotope of coplanar generators stays exact in lower rank") {
  // all generators lie in the plane z = 0
  std::vector<Vec<Rational>> gens = {v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)};
  Zonotope z(3, Vec<Rational>(3), gens);
  CHECK(z.polytope().rank() == 2);
  CHECK(z.polytope().volume() == Rational(0));
  CHECK(support<Rational>(z, v3(0, 0, 5)) == Rational(0));
}

TEST_CASE("minkowski sums are support-additive across representations") {
  SplitMix64 rng(23);
  Polytope p = Polytope::from_points(2, seeded_points(rng, 2, 7));
  Zonotope z(2, Vec<Rational>(2), seeded_generators(rng, 2, 4));
  Body<Rational> bp = p, bz = z;

  Body<Rational> pp = minkowski_sum(bp, bp);
  Body<Rational> zz = minkowski_sum(bz, bz);
  Body<Rational> pz = minkowski_sum(bp, bz);
  CHECK(std::holds_alternative<Polytope>(pp));
  CHECK(std::holds_alternative<Zonotope>(zz));
  CHECK(std::holds_alternative<Polytope>(pz));

  // past the vertex cap the sum falls back to a support closure
  auto many = seeded_generators(rng, 2, kZonotopeVertexCap + 2);
  Body<Rational> bigz = Zonotope(2, Vec<Rational>(2), many);
  Body<Rational> pbig = minkowski_sum(bp, bigz);
  CHECK(std::holds_alternative<SupportBody<Rational>>(pbig));

  for (int t = 0; t < 25; ++t) {
    auto x = seeded_generators(rng, 2, 1)[0];
    Rational hp = support<Rational>(bp, x);
    Rational hz = support<Rational>(bz, x);
    CHECK(support<Rational>(pp, x) == hp + hp);
    CHECK(support<Rational>(zz, x) == hz + hz);
    CHECK(support<Rational>(pz, x) == hp + hz);
    CHECK(support<Rational>(pbig, x) == hp + support<Rational>(bigz, x));
  }

  // concrete volume: [0,1]^2 + [-1,1]^2 = [-1,2]^2
  Polytope s01 = Polytope::cube01(2);
  Polytope ssym = Polytope::cube_sym(2);
  CHECK(minkowski_sum(s01, ssym).volume() == Rational(9));

  CHECK_THROWS_AS(minkowski_sum(Body<Rational>(Polytope::cube01(2)),
                                Body<Rational>(Polytope::cube01(3))),
                  std::invalid_argument);
}

TEST_CASE("scaling and translation act exactly on support functions") {
  SplitMix64 rng(31);
  Polytope p = Polytope::from_points(3, seeded_points(rng, 3, 9));
  Zonotope z(3, seeded_generators(rng, 3, 1)[0], seeded_generators(rng, 3, 4));
  Rational lam(3, 2);
  Vec<Rational> t = v3(Rational(1, 3), -2, Rational(5, 7));

  Body<Rational> bodies[] = {Body<Rational>(p), Body<Rational>(z)};
  for (const auto& b : bodies) {
    Body<Rational> sb = scale(b, lam);
    Body<Rational> tb = translate(b, t);
    Body<Rational> nb = scale(b, Rational(-1));
    for (int i = 0; i < 15; ++i) {
      auto x = seeded_generators(rng, 3, 1)[0];
      CHECK(support<Rational>(sb, x) == lam * support<Rational>(b, x));
      CHECK(support<Rational>(tb, x) == support<Rational>(b, x) + dot(t, x));
      CHECK(support<Rational>(nb, x) == support<Rational>(b, -x));
    }
  }

  // volume scales with the cube of the factor
  Polytope sp = scale(p, lam);
  CHECK(sp.volume() == lam * lam * lam * p.volume());
  CHECK(translate(p, t).volume() == p.volume());

  // support closures honor the same laws, including negative factors
  SupportBody<Rational> sbody{3, [p](const Vec<Rational>& x) { return support<Rational>(p, x); },
                              "poly"};
  Body<Rational> bs = sbody;
  Body<Rational> bs2 = scale(bs, Rational(-2));
  Body<Rational> bst = translate(bs, t);
  for (int i = 0; i < 10; ++i) {
    auto x = seeded_generators(rng, 3, 1)[0];
    CHECK(support<Rational>(bs2, x) == 2 * support<Rational>(p, -x));
    CHECK(support<Rational>(bst, x) == support<Rational>(p, x) + dot(t, x));
  }
}

TEST_CASE("halfspace clipping through the body interface") {
  Polytope cube = Polytope::cube01(3);
  Halfspace hs{v3(1, 0, 0), Rational(1, 2)};
  Polytope half = clip(cube, hs);
  CHECK(half.volume() == Rational(1, 2));
  CHECK(clip(cube, hs.complement()).volume() == Rational(1, 2));
}

TEST_CASE("ball zonotope: exact normalization and numeric convergence") {
  // defining property: the average of the support function over the
  // generating direction set is 1 up to the short-rational rounding of the
  // normalizing constant
  for (auto [n, N] : {std::pair{2, 16}, {2, 64}, {3, 16}, {3, 64}, {4, 32}}) {
    const Zonotope& b = ball_zonotope(n, N);
    auto dirs = direction_set(n, N);
    Rational avg(0);
    for (const auto& u : dirs) avg += support<Rational>(b, u);
    CHECK(std::abs(to_double(avg) / N - 1.0) < 1e-5);
    CHECK(b.center().is_zero());
    CHECK(static_cast<int>(b.gens().size()) == N / 2);
  }

  // caching returns the same object
  CHECK(&ball_zonotope(3, 16) == &ball_zonotope(3, 16));

  // support converges to the euclidean norm
  SplitMix64 rng(47);
  for (int n = 2; n <= 3; ++n) {
    double worst_small = 0, worst_big = 0;
    const Zonotope& small = ball_zonotope(n, 32);
    const Zonotope& big = ball_zonotope(n, 256);
    for (int t = 0; t < 60; ++t) {
      auto xr = seeded_generators(rng, n, 1)[0];
      Vec<double> x = vec_cast<double>(xr);
      double nx = std::sqrt(dot(x, x));
      worst_small = std::max(worst_small, std::abs(support<double>(small, x) / nx - 1.0));
      worst_big = std::max(worst_big, std::abs(support<double>(big, x) / nx - 1.0));
    }
    CHECK(worst_small < 0.12);
    CHECK(worst_big < 0.01);
    CHECK(worst_big < worst_small);
  }

  // area of the 2d ball polygon approaches pi
  double area16 = to_double(ball_zonotope(2, 16).polytope().volume());
  double area32 = to_double(ball_zonotope(2, 32).polytope().volume());
  CHECK(std::abs(area16 / M_PI - 1.0) < 0.05);
  CHECK(std::abs(area32 / M_PI - 1.0) < 0.02);
  CHECK(std::abs(area32 - M_PI) < std::abs(area16 - M_PI));

  // invalid sizes propagate from the direction set
  CHECK_THROWS_AS(ball_zonotope(3, 7), std::invalid_argument);
}

TEST_CASE("generating measure: evenness, reconstruction, total mass") {
  SplitMix64 rng(59);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      auto gens = seeded_generators(rng, n, 3 + static_cast<int>(rng.below(3)));
      auto center = seeded_generators(rng, n, 1)[0];
      Zonotope z(n, center, gens);
      GeneratingMeasure m = generating_measure(z);
      CHECK(m.rays.size() == 2 * z.gens().size());

      // closed under negation
      std::multiset<std::string> keys, negkeys;
      for (const auto& r : m.rays) {
        std::ostringstream s, t;
        for (int j = 0; j < n; ++j) {
          s << rational_str(r.c[j]) << ",";
          t << rational_str(-r.c[j]) << ",";
        }
        keys.insert(s.str());
        negkeys.insert(t.str());
      }
      CHECK(keys == negkeys);

      // exact support reconstruction
      for (int t = 0; t < 10; ++t) {
        auto x = seeded_generators(rng, n, 1)[0];
        CHECK(m.reconstruct<Rational>(x) == support<Rational>(z, x));
      }
    }
  }

  // total mass of the measure of a zonogon is a quarter of its perimeter
  auto gens = seeded_generators(rng, 2, 5);
  Zonotope z(2, Vec<Rational>(2), gens);
  GeneratingMeasure m = generating_measure(z);
  double mass = 0;
  for (size_t i = 0; i < m.rays.size(); ++i) mass += m.atom_mass(i);
  const auto& ring = z.polytope().hull().ring;
  const auto& verts = z.polytope().verts();
  double perim = 0;
  for (size_t i = 0; i < ring.size(); ++i) {
    Vec<Rational> d = verts[ring[(i + 1) % ring.size()]] - verts[ring[i]];
    perim += std::sqrt(to_double(norm_sq(d)));
  }
  CHECK(mass == doctest::Approx(perim / 4).epsilon(1e-9));
}

TEST_CASE("steiner-type area growth of a square under ball sums") {
  // area(P + B) - area(P) - area(B) is twice the mixed area; for the unit
  // square it approaches the perimeter 4 as the ball refines
  Polytope sq = Polytope::cube01(2);
  auto mixed_term = [&](int N) {
    Polytope sum = minkowski_sum(sq, ball_zonotope(2, N));
    return to_double(sum.volume() - sq.volume() - ball_zonotope(2, N).polytope().volume());
  };
  double m8 = mixed_term(8), m16 = mixed_term(16), m32 = mixed_term(32);
  CHECK(std::abs(m16 / 4.0 - 1.0) < 0.05);
  CHECK(std::abs(m32 / 4.0 - 1.0) < 0.02);
  CHECK(std::abs(m32 - 4.0) <= std::abs(m8 - 4.0));
}

TEST_CASE("json body interchange round-trips exactly") {
  SplitMix64 rng(71);
  Polytope p = Polytope::from_points(3, seeded_points(rng, 3, 8));
  json jp = polytope_to_json(p);
  Body<Rational> back = body_from_json(jp);
  REQUIRE(std::holds_alternative<Polytope>(back));
  const Polytope& p2 = std::get<Polytope>(back);
  REQUIRE(p2.verts().size() == p.verts().size());
  for (size_t i = 0; i < p.verts().size(); ++i) CHECK(p2.verts()[i] == p.verts()[i]);
  CHECK(jp.dump() == polytope_to_json(p2).dump());

  Zonotope z(2, v2(Rational(1, 3), -2), seeded_generators(rng, 2, 4));
  json jz = zonotope_to_json(z);
  Body<Rational> zback = body_from_json(jz);
  REQUIRE(std::holds_alternative<Zonotope>(zback));
  CHECK(jz.dump() == zonotope_to_json(std::get<Zonotope>(zback)).dump());

  // malformed inputs name the offending field
  CHECK_THROWS_AS(body_from_json(json::parse("{}")), std::invalid_argument);
  CHECK_THROWS_AS(body_from_json(json::parse(R"({"type":"widget"})")), std::invalid_argument);
  CHECK_THROWS_AS(body_from_json(json::parse(R"({"type":"polytope","vertices":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(body_from_json(json::parse(R"({"type":"polytope","vertices":[["1","x"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      body_from_json(json::parse(R"({"type":"polytope","vertices":[["1","2"],["1","2","3"]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      body_from_json(json::parse(R"({"type":"zonotope","center":["0","0"],"generators":[[1,0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(body_from_json(json::parse(
                      R"({"type":"polytope","vertices":[["1","1","1","1","1"]]})")),
                  std::invalid_argument);

  // support bodies are not serializable
  Body<Rational> sb = SupportBody<Rational>{2, [](const Vec<Rational>&) { return Rational(1); },
                                            "h"};
  CHECK_THROWS_AS(body_to_json(sb), std::invalid_argument);
}
