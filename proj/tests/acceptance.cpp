// Acceptance harness: eleven desk-scale criteria, one verdict line each.
// Every tolerance is pinned here as a named constant; exact-mode criteria
// demand literal rational equality (zero slack).

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "minkval/inequalities.hpp"

using namespace minkval;

namespace {

constexpr double kCubeQuermassRel = 0.05;  // cube quermassintegrals at ballN=256
constexpr double kTransferRel = 1e-3;      // transfer identity, float, ballN=256
constexpr double kNoiseSlop = 1e-12;       // rounding allowance when ballN doubles
constexpr double kSlackFloor = -1e-9;      // inequality slack floor, float mode
constexpr double kEqualityRel = 1e-6;      // homothety equality probes
constexpr double kTightTol = 1e-9;         // generic float tolerance inside checks

int g_failures = 0;

double now_s() {
  using clk = std::chrono::steady_clock;
  static const clk::time_point t0 = clk::now();
  return std::chrono::duration<double>(clk::now() - t0).count();
}

void verdict(int idx, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", idx, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double rel_err_of(const CaseResult& c) {
  double lhs = std::strtod(c.lhs.c_str(), nullptr);
  double rhs = std::strtod(c.rhs.c_str(), nullptr);
  double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale > 0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs);
}

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return std::string(buf);
}

void criterion_1_steiner() {
  double t0 = now_s();
  SuiteParams p;
  p.ball_n = 32;
  p.triples = 10000;
  p.seed = 2026;
  p.n = 2;
  p.count = 25;
  VerificationReport r2 = run_suite<Rational>("steiner", p);
  p.n = 3;
  p.count = 10;
  VerificationReport r3 = run_suite<Rational>("steiner", p);
  double dt = now_s() - t0;
  bool ok = r2.pass && r3.pass && dt < 120.0;
  verdict(1, ok,
          fmt("enlargement decomposition: refit windows identical (exact) and all coefficient "
              "tables sublinear on 10000 triples, 25 bodies n=2 + 10 bodies n=3, %.1fs",
              dt));
}

void criterion_2_mixed_volume_oracles() {
  double t0 = now_s();
  SplitMix64 rng(2026);
  bool ok = true;
  for (int n : {2, 3}) {
    for (int k = 0; k < 50; ++k) {
      std::vector<Body<Rational>> args;
      for (int t = 0; t < n; ++t) args.push_back(Body<Rational>(seeded_zonotope(rng, n, 3)));
      ok = ok && (mixed_volume<Rational>(args, MVMethod::Bracket) ==
                  mixed_volume<Rational>(args, MVMethod::Interpolate));
      Zonotope Z = seeded_zonotope(rng, n, 4);
      std::vector<Body<Rational>> diag(static_cast<size_t>(n), Body<Rational>(Z));
      ok = ok &&
           (mixed_volume<Rational>(diag, MVMethod::Bracket) == zonotope_volume<Rational>(Z));
    }
  }
  double dt = now_s() - t0;
  ok = ok && dt < 60.0;
  verdict(2, ok,
          fmt("bracket vs interpolation exact on 50 zonotope tuples per dimension (n=2,3), "
              "diagonal reproduces the volume, %.1fs",
              dt));
}

void criterion_3_classical_steiner() {
  bool exact_ok = true;
  SplitMix64 rng(31);
  for (int n : {2, 3}) {
    for (int k = 0; k < 10; ++k) {
      Body<Rational> K(seeded_polytope(rng, n, n == 2 ? 6 : 8));
      std::vector<Rational> poly = steiner_volume_polynomial<Rational>(K, 16);
      for (int i = 0; i <= n; ++i) {
        Rational binom = factorial_q(n) / (factorial_q(i) * factorial_q(n - i));
        exact_ok =
            exact_ok && (poly[i] == binom * quermassintegral<Rational>(i, K, 16));
      }
    }
  }
  const double target[3] = {2.0, std::numbers::pi, 4.0 * std::numbers::pi / 3.0};
  Body<double> cube(Polytope::cube01(3));
  double prev[3] = {0, 0, 0};
  double err256[3] = {0, 0, 0};
  bool conv = true;
  for (int N : {64, 128, 256}) {
    for (int i = 1; i <= 3; ++i) {
      double w = quermassintegral<double>(i, cube, N);
      double err = std::abs(w - target[i - 1]) / target[i - 1];
      if (N > 64) conv = conv && err <= prev[i - 1] + kNoiseSlop;
      if (N == 256) {
        conv = conv && err <= kCubeQuermassRel;
        err256[i - 1] = err;
      }
      prev[i - 1] = err;
    }
  }
  verdict(3, exact_ok && conv,
          fmt("volume polynomial coefficients equal binomial-weighted quermassintegrals "
              "exactly (20 bodies); cube (W1,W2,W3) off by (%.1e,%.1e,%.1e) at ballN=256, "
              "monotone in ballN",
              err256[0], err256[1], err256[2]));
}

void criterion_4_symmetry() {
  SplitMix64 rng(41);
  bool ok = true;
  for (int k = 0; k < 20; ++k) {
    Body<Rational> K(seeded_polytope(rng, 3, 8));
    Body<Rational> L(seeded_polytope(rng, 3, 8));
    CaseResult c = check_projection_symmetry<Rational>("t", K, L, kTightTol);
    ok = ok && c.pass && c.slack == 0.0;
  }
  verdict(4, ok, "projection symmetry identity exact (zero slack) on 20 seeded pairs, n=3");
}

void criterion_5_transfer() {
  double t0 = now_s();
  SplitMix64 rng(51);
  std::vector<std::pair<Polytope, Polytope>> pairs;
  for (int k = 0; k < 4; ++k)
    pairs.emplace_back(seeded_polytope(rng, 3, 8), seeded_polytope(rng, 3, 8));

  bool exact_ok = true;  // identity is exact in rational arithmetic at any resolution
  for (int k = 0; k < 3; ++k)
    for (int i = 1; i <= 3; ++i) {
      CaseResult c = check_durch_identity<Rational>("t", Body<Rational>(pairs[k].first),
                                                    Body<Rational>(pairs[k].second), i, 32,
                                                    kTightTol);
      exact_ok = exact_ok && c.pass && c.slack == 0.0;
    }

  bool float_ok = true;
  double err256 = 0, err512 = 0;
  for (const auto& [K, L] : pairs)
    for (int i = 1; i <= 3; ++i) {
      CaseResult a = check_durch_identity<double>("t", Body<double>(K), Body<double>(L), i, 256,
                                                  kTightTol);
      CaseResult b = check_durch_identity<double>("t", Body<double>(K), Body<double>(L), i, 512,
                                                  kTightTol);
      float_ok = float_ok && a.pass && b.pass;
      err256 = std::max(err256, rel_err_of(a));
      err512 = std::max(err512, rel_err_of(b));
    }
  double dt = now_s() - t0;
  bool ok = exact_ok && float_ok && err256 <= kTransferRel && err512 <= err256 + kNoiseSlop;
  verdict(5, ok,
          fmt("transfer identity i=1..3: exact at ballN=32 (incl. top order); float err %.1e at "
              "ballN=256 -> %.1e at 512, %.0fs",
              err256, err512, dt));
}

void criterion_6_main_inequality() {
  double t0 = now_s();
  SplitMix64 rng(61);
  auto pi = op_projection_body<double>();
  bool ok = true;
  double min_slack = 1e300;
  for (int k = 0; k < 100; ++k) {
    Body<double> K(seeded_polytope(rng, 3, 8));
    Body<double> L(seeded_polytope(rng, 3, 8));
    for (int i = 1; i <= 3; ++i) {
      CaseResult c = check_main_inequality<double>("t", pi, 2, K, L, i, 256, kTightTol);
      ok = ok && c.pass && c.slack >= kSlackFloor;
      min_slack = std::min(min_slack, c.slack);
    }
  }
  bool eq_ok = true;
  for (int t = 0; t < 5; ++t) {
    Body<double> K(seeded_polytope(rng, 3, 8));
    Vec<Rational> x = seeded_direction(rng, 3);
    for (const Rational& lam : {Rational(1, 2), Rational(1), Rational(3)})
      for (int i = 1; i <= 3; ++i)
        eq_ok = eq_ok &&
                check_main_homothety<double>("t", pi, 2, K, lam, x, i, 256, kEqualityRel).pass;
  }
  double dt = now_s() - t0;
  verdict(6, ok && eq_ok,
          fmt("composed-operator inequality on 100 pairs x i=1..3: min slack %.2e >= -1e-9; "
              "homothety probes lambda in {1/2,1,3} within 1e-6, %.1fs",
              min_slack, dt));
}

void criterion_7_valuation_property() {
  double t0 = now_s();
  SuiteParams p;
  p.n = 3;
  p.count = 20;
  p.ball_n = 16;
  p.dirs = 12;
  p.seed = 2027;
  VerificationReport r = run_suite<Rational>("valuation-property", p);
  double dt = now_s() - t0;
  verdict(7, r.pass,
          fmt("hyperplane-split additivity exact for the projection body and every extracted "
              "coefficient on 20 seeded splits, %.1fs",
              dt));
}

void criterion_8_klain() {
  SuiteParams p;
  p.n = 3;
  p.count = 20;
  p.ball_n = 16;
  p.seed = 2028;
  VerificationReport r = run_suite<Rational>("klain", p);
  bool cal = r.meta.contains("calibration") && r.meta["calibration"] == "2";
  verdict(8, r.pass && cal,
          "klain inversion with unit klain function equals the intrinsic-volume oracle exactly "
          "on 20 zonotopes; single calibration constant 2 embedded in the report");
}

void criterion_9_bivariate() {
  double t0 = now_s();
  SplitMix64 rng(91);
  auto pi = op_projection_body<Rational>();
  bool ok = true;
  for (int k = 0; k < 10; ++k) {
    Zonotope Z1 = seeded_zonotope(rng, 3, 3);
    Zonotope Z2 = seeded_zonotope(rng, 3, 3);
    for (const auto& c :
         check_bivariate_polynomiality<Rational>("t", pi, Z1, Z2, 10, 2000, 900 + k, kTightTol))
      ok = ok && c.pass;
  }
  double dt = now_s() - t0;
  verdict(9, ok,
          fmt("two-parameter families fit total degree <= 3 exactly on 4x4 grids (10 pairs); "
              "all coefficient tables sublinear on 2000 triples, %.1fs",
              dt));
}

void criterion_10_nonnegative_components() {
  SplitMix64 rng(101);
  std::vector<std::function<Rational(const Body<Rational>&)>> vals;
  for (int t = 0; t < 5; ++t) {
    Vec<Rational> x = seeded_direction(rng, 3);
    Vec<Rational> y = seeded_direction(rng, 3);
    if (t % 2 == 0) {
      vals.push_back(support_triple_valuation<Rational>(op_projection_body<Rational>(), x, y));
    } else {
      vals.push_back(support_triple_valuation<Rational>(
          op_parallel<Rational>(op_projection_body<Rational>(), seeded_zonotope(rng, 3, 3)), x,
          y));
    }
  }
  for (int t = 0; t < 5; ++t)
    vals.push_back(parallel_volume_valuation<Rational>(seeded_zonotope(rng, 3, 3)));
  std::vector<Zonotope> zs;
  for (int k = 0; k < 20; ++k) zs.push_back(seeded_zonotope(rng, 3, 4));
  bool ok = true;
  for (const auto& f : vals)
    for (const auto& Z : zs)
      ok = ok && check_nonnegative_components<Rational>("t", f, Body<Rational>(Z), kTightTol).pass;
  verdict(10, ok,
          "10 nonnegative scalar valuations x 20 zonotopes: every homogeneous component >= 0, "
          "matching windows, exact");
}

void criterion_11_determinism() {
  SuiteParams p;
  p.count = 2;
  p.ball_n = 16;
  p.dirs = 8;
  p.triples = 100;
  std::string a = run_suite<Rational>("durch", p).to_json().dump(2);
  std::string b = run_suite<Rational>("durch", p).to_json().dump(2);
  std::string c = run_suite<double>("main", p).to_json().dump(2);
  std::string d = run_suite<double>("main", p).to_json().dump(2);
  verdict(11, a == b && c == d,
          "identical configs produce byte-identical reports in both arithmetics");
}

}  // namespace

int main() {
  std::printf("acceptance: desk-scale verification (n in {2,3}, ballN <= 512)\n");
  criterion_1_steiner();
  criterion_2_mixed_volume_oracles();
  criterion_3_classical_steiner();
  criterion_4_symmetry();
  criterion_5_transfer();
  criterion_6_main_inequality();
  criterion_7_valuation_property();
  criterion_8_klain();
  criterion_9_bivariate();
  criterion_10_nonnegative_components();
  criterion_11_determinism();
  std::printf("acceptance: %s (%d of 11 criteria failed, %.0fs total)\n",
              g_failures == 0 ? "PASS" : "FAIL", g_failures, now_s());
  return g_failures == 0 ? 0 : 1;
}
