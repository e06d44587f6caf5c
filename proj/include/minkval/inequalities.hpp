#pragma once

// Verification layer: named checks for the identities and inequalities tying
// projection bodies, derivation operators, quermassintegrals, and Klain
// functions together, and the suite builders shared by the command-line tool
// and the acceptance harness.  Exact-mode checks demand literal rational
// equality; float-mode checks carry explicit tolerances and report signed
// slack.  Every suite is deterministic in (n, ballN, tol, seed).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minkval/bodies.hpp"
#include "minkval/mixed_volumes.hpp"
#include "minkval/report.hpp"
#include "minkval/seeded.hpp"
#include "minkval/valuations.hpp"

namespace minkval {

// ---------- scalar and quermassintegral helpers ----------

template <class S>
S pow_int(S base, int e) {
  S r(1);
  for (int k = 0; k < e; ++k) r = r * base;
  return r;
}

// V(M[copies], B[n-copies]) against the ball zonotope.  copies == n needs no
// ball at all; support-only bodies are accepted in a single slot.
template <class S>
S ball_mixed_power(const Body<S>& M, int copies, int ball_n) {
  const int n = body_dim(M);
  if (copies < 0 || copies > n) throw std::invalid_argument("ball_mixed_power: bad copy count");
  std::vector<Body<S>> args;
  args.reserve(n);
  for (int k = 0; k < copies; ++k) args.push_back(M);
  if (copies < n) {
    const Zonotope& B = ball_zonotope(n, ball_n);
    for (int k = copies; k < n; ++k) args.push_back(Body<S>(B));
  }
  return mixed_volume<S>(args);
}

// W_i(K, L) = V(K[n-1-i], B[i], L)
template <class S>
S quermass_pair(int i, const Body<S>& K, const Body<S>& L, int ball_n) {
  const int n = body_dim(K);
  if (i < 0 || i > n - 1) throw std::invalid_argument("quermass_pair: index out of 0..n-1");
  std::vector<Body<S>> args;
  args.reserve(n);
  for (int k = 0; k < n - 1 - i; ++k) args.push_back(K);
  if (i > 0) {
    const Zonotope& B = ball_zonotope(n, ball_n);
    for (int k = 0; k < i; ++k) args.push_back(Body<S>(B));
  }
  args.push_back(L);
  return mixed_volume<S>(args);
}

// ---------- seeded inputs ----------

inline Vec<Rational> seeded_direction(SplitMix64& rng, int n) {
  for (int tries = 0; tries < 64; ++tries) {
    Vec<Rational> v = seeded_generators(rng, n, 1)[0];
    if (!v.is_zero()) return v;
  }
  throw std::logic_error("seeded_direction: generator stream collapsed to zero");
}

inline Polytope seeded_polytope(SplitMix64& rng, int n, int points) {
  for (int tries = 0; tries < 64; ++tries) {
    Polytope p = Polytope::from_points(n, seeded_points(rng, n, points));
    if (p.rank() == p.dim()) return p;
  }
  throw std::logic_error("seeded_polytope: could not draw a full-rank body");
}

inline Zonotope seeded_zonotope(SplitMix64& rng, int n, int count) {
  for (int tries = 0; tries < 64; ++tries) {
    std::vector<Vec<Rational>> gens = seeded_generators(rng, n, count);
    std::vector<Vec<Rational>> pts = gens;
    pts.push_back(Vec<Rational>(n));
    if (convex_hull(n, std::move(pts)).rank == n) return Zonotope(n, Vec<Rational>(n), std::move(gens));
  }
  throw std::logic_error("seeded_zonotope: could not draw a full-rank body");
}

// A plane through the interior: midpoint of the support range along a seeded
// normal, so both closed sides keep full dimension.
inline Halfspace seeded_halfspace(SplitMix64& rng, const Polytope& P) {
  for (int tries = 0; tries < 64; ++tries) {
    Vec<Rational> nvec = seeded_direction(rng, P.dim());
    Rational lo = dot(nvec, P.verts().front()), hi = lo;
    for (const auto& v : P.verts()) {
      Rational t = dot(nvec, v);
      if (t < lo) lo = t;
      if (t > hi) hi = t;
    }
    if (lo == hi) continue;
    return Halfspace{nvec, (lo + hi) / 2};
  }
  throw std::logic_error("seeded_halfspace: no cutting plane found");
}

inline Polytope corner_simplex(int n) {
  std::vector<Vec<Rational>> pts{Vec<Rational>(n)};
  for (int a = 0; a < n; ++a) {
    Vec<Rational> e(n);
    e.c[a] = 1;
    pts.push_back(e);
  }
  return Polytope::from_points(n, std::move(pts));
}

// A rational special-orthogonal map assembled from 3-4-5 and 5-12-13 plane
// rotations; used for exact equivariance probes.
inline Matrix<Rational> rational_rotation(int n) {
  Matrix<Rational> R(n, std::vector<Rational>(n, Rational(0)));
  for (int a = 0; a < n; ++a) R[a][a] = 1;
  R[0][0] = Rational(3, 5);
  R[0][1] = Rational(-4, 5);
  R[1][0] = Rational(4, 5);
  R[1][1] = Rational(3, 5);
  if (n >= 4) {
    R[2][2] = Rational(5, 13);
    R[2][3] = Rational(-12, 13);
    R[3][2] = Rational(12, 13);
    R[3][3] = Rational(5, 13);
  }
  return R;
}

inline Polytope rotate_polytope(const Polytope& P, const Matrix<Rational>& R) {
  const int n = P.dim();
  std::vector<Vec<Rational>> pts;
  pts.reserve(P.verts().size());
  for (const auto& v : P.verts()) {
    Vec<Rational> w(n);
    for (int r = 0; r < n; ++r) {
      Rational acc(0);
      for (int c = 0; c < n; ++c) acc += R[r][c] * v.c[c];
      w.c[r] = acc;
    }
    pts.push_back(w);
  }
  return Polytope::from_points(n, std::move(pts));
}

inline json vec_witness(const Vec<Rational>& v) {
  json a = json::array();
  for (int i = 0; i < v.n; ++i) a.push_back(rational_str(v.c[i]));
  return a;
}

// ---------- double-precision support mirrors ----------

// Fast double view of a body's support function for certification sweeps.
// Stored bodies use their cached double mirrors; support closures in exact
// mode are evaluated at the exact dyadic lift of the double direction, so the
// mirrored value is the exact value up to one final rounding.
template <class S>
std::function<double(const Vec<double>&)> support_mirror(const Body<S>& b) {
  if (const auto* p = std::get_if<Polytope>(&b)) {
    return [cp = *p](const Vec<double>& x) {
      const auto& vs = cp.verts_d();
      double best = dot(vs.front(), x);
      for (const auto& v : vs) best = std::max(best, dot(v, x));
      return best;
    };
  }
  if (const auto* z = std::get_if<Zonotope>(&b)) {
    return [cz = *z](const Vec<double>& x) {
      double acc = dot(cz.center_d(), x);
      for (const auto& g : cz.gens_d()) acc += std::abs(dot(g, x));
      return acc;
    };
  }
  const auto& sb = std::get<SupportBody<S>>(b);
  if constexpr (scalar_traits<S>::exact) {
    return [h = sb.h, d = sb.dim](const Vec<double>& x) {
      Vec<Rational> xq(d);
      for (int i = 0; i < d; ++i) xq.c[i] = Rational(x.c[i]);
      return to_double(h(xq));
    };
  } else {
    return [h = sb.h](const Vec<double>& x) { return h(x); };
  }
}

template <class S>
std::function<double(const Vec<double>&)> steiner_coefficient_mirror(
    const std::shared_ptr<SteinerData<S>>& sd, int j) {
  std::vector<std::pair<double, std::function<double(const Vec<double>&)>>> terms;
  for (int r = 0; r <= sd->degree; ++r) {
    if (sd->w_lo[j][r] == 0) continue;
    terms.emplace_back(to_double(sd->w_lo[j][r]), support_mirror<S>(sd->samples[r]));
  }
  return [terms](const Vec<double>& x) {
    double acc = 0;
    for (const auto& t : terms) acc += t.first * t.second(x);
    return acc;
  };
}

// ---------- worst-direction equality comparison ----------

template <class S>
CaseResult worst_equality_case(const std::string& name, int dim, int dirs, std::uint64_t seed,
                               double tol, const std::function<S(const Vec<Rational>&)>& lhs,
                               const std::function<S(const Vec<Rational>&)>& rhs) {
  if (dirs < 1) throw std::invalid_argument("worst_equality_case: need at least one direction");
  SplitMix64 rng(seed);
  CaseResult c;
  c.name = name;
  c.relation = "==";
  c.pass = true;
  S wl(0), wr(0);
  double worst = -1, worst_scale = 1;
  Vec<Rational> wx;
  for (int t = 0; t < dirs; ++t) {
    Vec<Rational> xq = seeded_direction(rng, dim);
    S l = lhs(xq), r = rhs(xq);
    double err, scale = 1;
    bool ok;
    if constexpr (scalar_traits<S>::exact) {
      ok = (l == r);
      err = ok ? 0.0 : std::abs(to_double(l - r));
    } else {
      double ld = to_double(l), rd = to_double(r);
      scale = 1.0 + std::max(std::abs(ld), std::abs(rd));
      err = std::abs(ld - rd);
      ok = err <= tol * scale;
    }
    if (err > worst) {
      worst = err;
      worst_scale = scale;
      wl = l;
      wr = r;
      wx = xq;
    }
    c.pass = c.pass && ok;
  }
  c.lhs = render_scalar(wl);
  c.rhs = render_scalar(wr);
  if constexpr (scalar_traits<S>::exact) {
    c.slack = c.pass ? 0.0 : -worst;
  } else {
    c.slack = tol * worst_scale - worst;
  }
  c.witness = json{{"direction", vec_witness(wx)}};
  return c;
}

// ---------- identity checks ----------

// V(Pi(K), L, ..., L) = V(Pi(L), K, ..., K): ball-free, exact in rational
// arithmetic for every pair of stored bodies.
template <class S>
CaseResult check_projection_symmetry(const std::string& name, const Body<S>& K, const Body<S>& L,
                                     double tol) {
  const int n = body_dim(K);
  if (body_dim(L) != n) throw std::invalid_argument("check_projection_symmetry: dimension mismatch");
  std::vector<Body<S>> a{projection_body<S>(K)};
  std::vector<Body<S>> b{projection_body<S>(L)};
  for (int t = 0; t < n - 1; ++t) {
    a.push_back(L);
    b.push_back(K);
  }
  return check_equal<S>(name, mixed_volume<S>(a), mixed_volume<S>(b), tol);
}

// Transfer identity between mixed quermassintegrals of the projection body
// and derivation powers:
//   V(K[i-1], B[n-i], Pi(L)) = ((i-1)!/(n-1)!) V(L[n-1], Lambda^{n-i} Pi(K)).
// Both sides are built from the same reference zonotope B, so the identity
// holds exactly at every ball resolution: it only needs the symmetry identity
// above, multilinearity, and the polynomial enlargement expansion.
template <class S>
CaseResult check_durch_identity(const std::string& name, const Body<S>& K, const Body<S>& L,
                                int i, int ball_n, double tol) {
  const int n = body_dim(K);
  const int j = n - 1;
  if (body_dim(L) != n) throw std::invalid_argument("check_durch_identity: dimension mismatch");
  if (i < 1 || i > j + 1) throw std::invalid_argument("check_durch_identity: order out of 1..degree+1");
  auto pi = op_projection_body<S>();
  std::vector<Body<S>> largs;
  for (int t = 0; t < i - 1; ++t) largs.push_back(K);
  if (i <= j) {
    const Zonotope& B = ball_zonotope(n, ball_n);
    for (int t = 0; t < n - i; ++t) largs.push_back(Body<S>(B));
  }
  largs.push_back(pi(L));
  S lhs = mixed_volume<S>(largs);

  ValuationOperator<S> op = pi;
  for (int t = 0; t < j + 1 - i; ++t) op = op_lambda<S>(op, ball_n);
  std::vector<Body<S>> rargs;
  for (int t = 0; t < j; ++t) rargs.push_back(L);
  rargs.push_back(op(K));
  S rhs = scalar_cast<S>(factorial_q(i - 1) / factorial_q(j)) * mixed_volume<S>(rargs);
  return check_equal<S>(name, lhs, rhs, tol);
}

// h(op(R K), u) = h(op(K), R^T u) for an exact rational rotation R.
template <class S>
CaseResult check_equivariance(const std::string& name, const ValuationOperator<S>& op,
                              const Polytope& K, int dirs, std::uint64_t seed, double tol) {
  const int n = K.dim();
  Matrix<Rational> R = rational_rotation(n);
  Body<S> a = op(Body<S>(rotate_polytope(K, R)));
  Body<S> b = op(Body<S>(K));
  auto lhs = [&a](const Vec<Rational>& xq) { return support<S>(a, vec_cast<S>(xq)); };
  auto rhs = [&b, &R, n](const Vec<Rational>& xq) {
    Vec<Rational> t(n);
    for (int c = 0; c < n; ++c) {
      Rational acc(0);
      for (int r = 0; r < n; ++r) acc += R[r][c] * xq.c[r];
      t.c[c] = acc;
    }
    return support<S>(b, vec_cast<S>(t));
  };
  return worst_equality_case<S>(name, n, dirs, seed, tol,
                                std::function<S(const Vec<Rational>&)>(lhs),
                                std::function<S(const Vec<Rational>&)>(rhs));
}

// ---------- inequality checks ----------

// W_i(K,L)^{n-i} >= W_i(K)^{n-i-1} W_i(L); integer powers only, so the check
// is exact in rational arithmetic.  With equality = true (homothety probes)
// the two sides must agree instead.
template <class S>
CaseResult check_minkowski_inequality(const std::string& name, const Body<S>& K, const Body<S>& L,
                                      int i, int ball_n, double tol, bool equality = false) {
  const int n = body_dim(K);
  if (i < 0 || i > n - 2) throw std::invalid_argument("check_minkowski_inequality: index out of 0..n-2");
  const int m = n - i;
  S a = quermass_pair<S>(i, K, L, ball_n);
  S b = ball_mixed_power<S>(K, m, ball_n);
  S c = ball_mixed_power<S>(L, m, ball_n);
  S lhs = pow_int<S>(a, m);
  S rhs = pow_int<S>(b, m - 1) * c;
  if (equality) return check_equal<S>(name, lhs, rhs, tol);
  return check_ge<S>(name, lhs, rhs, tol);
}

// W_i(K+L)^{1/(n-i)} >= W_i(K)^{1/(n-i)} + W_i(L)^{1/(n-i)}; real roots, so
// the comparison is always reported in double precision.
template <class S>
CaseResult check_bm_quermass(const std::string& name, const Body<S>& K, const Body<S>& L, int i,
                             int ball_n, double tol, bool equality = false) {
  const int n = body_dim(K);
  if (i < 0 || i > n - 2) throw std::invalid_argument("check_bm_quermass: index out of 0..n-2");
  const int m = n - i;
  const double e = 1.0 / static_cast<double>(m);
  double lhs = std::pow(to_double(ball_mixed_power<S>(minkowski_sum(K, L), m, ball_n)), e);
  double rhs = std::pow(to_double(ball_mixed_power<S>(K, m, ball_n)), e) +
               std::pow(to_double(ball_mixed_power<S>(L, m, ball_n)), e);
  if (equality) return check_equal<double>(name, lhs, rhs, tol);
  return check_ge<double>(name, lhs, rhs, tol);
}

// V(K+L[n-i], C)^{1/(n-i)} >= V(K[n-i], C)^{1/(n-i)} + V(L[n-i], C)^{1/(n-i)}
// for an arbitrary fixed tuple C of reference bodies, |C| = i <= n-2.
template <class S>
CaseResult check_bm_general(const std::string& name, const Body<S>& K, const Body<S>& L,
                            const std::vector<Body<S>>& C, double tol) {
  const int n = body_dim(K);
  const int i = static_cast<int>(C.size());
  if (i > n - 2) throw std::invalid_argument("check_bm_general: too many reference bodies");
  const int m = n - i;
  auto power = [&](const Body<S>& X) {
    std::vector<Body<S>> args(static_cast<size_t>(m), X);
    for (const auto& r : C) args.push_back(r);
    return to_double(mixed_volume<S>(args));
  };
  const double e = 1.0 / static_cast<double>(m);
  double lhs = std::pow(power(minkowski_sum(K, L)), e);
  double rhs = std::pow(power(K), e) + std::pow(power(L), e);
  return check_ge<double>(name, lhs, rhs, tol);
}

// Homogeneity degree of an operator discovered from its dilation response on
// a probe body: h(op(2K), x) / h(op(K), x) must be a consistent power of two.
template <class S>
int discover_degree(const ValuationOperator<S>& op, const Body<S>& probe, std::uint64_t seed) {
  const int n = body_dim(probe);
  Body<S> v1 = op(probe);
  Body<S> v2 = op(scale(probe, Rational(2)));
  SplitMix64 rng(seed);
  int found = -1;
  for (int t = 0; t < 24; ++t) {
    Vec<S> x = vec_cast<S>(seeded_direction(rng, n));
    double h1 = to_double(support<S>(v1, x));
    double h2 = to_double(support<S>(v2, x));
    if (std::abs(h1) < 1e-9 || std::abs(h2) < 1e-9) continue;
    double ratio = h2 / h1;
    if (ratio <= 0) throw std::domain_error("discover_degree: dilation flipped the support sign");
    int j = static_cast<int>(std::lround(std::log2(ratio)));
    double expect = std::ldexp(1.0, j);
    if (j < 0 || j > n || std::abs(ratio - expect) > 1e-6 * expect)
      throw std::domain_error("discover_degree: dilation response is not a clean power of two");
    if (found >= 0 && found != j)
      throw std::domain_error("discover_degree: inconsistent homogeneity across directions");
    found = j;
  }
  if (found < 0) throw std::domain_error("discover_degree: operator value vanished on the probe");
  return found;
}

// Largest axis width of op(B): positive iff the operator does not collapse
// the ball to a point.
template <class S>
double operator_ball_width(const ValuationOperator<S>& op, int n, int ball_n) {
  Body<S> v = op(Body<S>(ball_zonotope(n, ball_n)));
  double w = 0;
  for (int a = 0; a < n; ++a) {
    Vec<S> e(n);
    e.c[a] = S(1);
    w = std::max(w, to_double(support<S>(v, e) + support<S>(v, -e)));
  }
  return w;
}

// W_{n-i}(op(K+L))^{1/(i j)} >= W_{n-i}(op(K))^{1/(i j)} + W_{n-i}(op(L))^{1/(i j)}
// for an operator of homogeneity degree j.
template <class S>
CaseResult check_main_inequality(const std::string& name, const ValuationOperator<S>& op, int j,
                              const Body<S>& K, const Body<S>& L, int i, int ball_n, double tol) {
  if (j < 1) throw std::invalid_argument("check_main_inequality: operator degree must be positive");
  if (i < 1 || i > j + 1) throw std::invalid_argument("check_main_inequality: order out of 1..degree+1");
  const double e = 1.0 / static_cast<double>(i * j);
  double lhs = std::pow(to_double(ball_mixed_power<S>(op(minkowski_sum(K, L)), i, ball_n)), e);
  double rhs = std::pow(to_double(ball_mixed_power<S>(op(K), i, ball_n)), e) +
               std::pow(to_double(ball_mixed_power<S>(op(L), i, ball_n)), e);
  return check_ge<double>(name, lhs, rhs, tol);
}

// Equality probe L = lambda K + x: homogeneity and translation invariance of
// the operator make both sides coincide up to root rounding.
template <class S>
CaseResult check_main_homothety(const std::string& name, const ValuationOperator<S>& op, int j,
                                const Body<S>& K, const Rational& lambda, const Vec<Rational>& shift,
                                int i, int ball_n, double eq_tol) {
  if (j < 1) throw std::invalid_argument("check_main_inequality: operator degree must be positive");
  if (i < 1 || i > j + 1) throw std::invalid_argument("check_main_inequality: order out of 1..degree+1");
  Body<S> L = translate(scale(K, lambda), shift);
  const double e = 1.0 / static_cast<double>(i * j);
  double lhs = std::pow(to_double(ball_mixed_power<S>(op(minkowski_sum(K, L)), i, ball_n)), e);
  double rhs = std::pow(to_double(ball_mixed_power<S>(op(K), i, ball_n)), e) +
               std::pow(to_double(ball_mixed_power<S>(op(L), i, ball_n)), e);
  return check_equal<double>(name, lhs, rhs, eq_tol);
}

// ---------- polynomiality checks ----------

// Decompose op on K + rZ and check: the two node windows agree (degree-n
// polynomiality), the coefficients reconstruct an enlargement outside the
// sample window, and every coefficient is sublinear on seeded triples.
template <class S>
std::vector<CaseResult> check_steiner_decomposition(const std::string& prefix,
                                                    const ValuationOperator<S>& op, const Body<S>& K,
                                                    const Zonotope& Z, int dirs, int triples,
                                                    std::uint64_t seed, double tol) {
  auto sd = std::make_shared<SteinerData<S>>(steiner_decompose<S>(op, K, Z));
  const double eq_tol = scalar_traits<S>::exact ? 0.0 : tol;
  std::vector<CaseResult> out;

  double disc = steiner_fit_discrepancy(*sd, dirs, seed + 333);
  out.push_back(check_equal<double>(prefix + " coefficient refit on shifted nodes", disc, 0.0, eq_tol));

  const int R = sd->degree + 2;
  Body<S> direct = op.on_sum(K, scale(Z, Rational(R)));
  SplitMix64 rng(seed + 777);
  double worst = 0;
  for (int t = 0; t < dirs; ++t) {
    Vec<S> x = vec_cast<S>(seeded_direction(rng, sd->dim));
    S acc(0), rp(1);
    for (int p = 0; p <= sd->degree; ++p) {
      acc += rp * sd->coeff_support(p, x);
      rp = rp * S(R);
    }
    S want = support<S>(direct, x);
    double sc = 1.0 + std::max(std::abs(to_double(acc)), std::abs(to_double(want)));
    worst = std::max(worst, std::abs(to_double(acc - want)) / sc);
  }
  out.push_back(check_equal<double>(prefix + " reconstruction beyond the sample window", worst, 0.0, eq_tol));

  for (int p = 0; p <= sd->degree; ++p) {
    CertifyOutcome co = certify_support_function<double>(steiner_coefficient_mirror<S>(sd, p),
                                                         sd->dim, triples, seed + 1000 + p, tol);
    CaseResult c;
    c.name = prefix + " coefficient r^" + std::to_string(p) + " sublinear";
    c.lhs = std::to_string(co.violations);
    c.rhs = "0";
    c.relation = "==";
    c.pass = (co.violations == 0);
    c.slack = co.worst;
    c.witness = json{{"triples", co.trials}};
    out.push_back(std::move(c));
  }
  return out;
}

// Values of op on a two-parameter zonotope family a Z1 + b Z2 over the grid
// {0..n}^2: coefficients beyond total degree n vanish, and each coefficient
// table is a sublinear support function.
template <class S>
std::vector<CaseResult> check_bivariate_polynomiality(const std::string& prefix,
                                                      const ValuationOperator<S>& op,
                                                      const Zonotope& Z1, const Zonotope& Z2,
                                                      int dirs, int triples, std::uint64_t seed,
                                                      double tol) {
  const int n = Z1.dim();
  if (Z2.dim() != n) throw std::invalid_argument("check_bivariate_polynomiality: dimension mismatch");
  auto grid = std::make_shared<std::vector<std::vector<Body<S>>>>(static_cast<size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) {
    (*grid)[a].reserve(n + 1);
    for (int b = 0; b <= n; ++b)
      (*grid)[a].push_back(
          op(Body<S>(minkowski_sum(scale(Z1, Rational(a)), scale(Z2, Rational(b))))));
  }
  std::vector<long> nodes(n + 1);
  for (int r = 0; r <= n; ++r) nodes[r] = r;
  auto w = std::make_shared<Matrix<Rational>>(vandermonde_coefficient_weights(nodes));
  auto coeff = [grid, w, n](int a, int b, const Vec<S>& x) -> S {
    S acc(0);
    for (int r = 0; r <= n; ++r) {
      if ((*w)[a][r] == 0) continue;
      for (int s = 0; s <= n; ++s) {
        if ((*w)[b][s] == 0) continue;
        acc += scalar_cast<S>((*w)[a][r] * (*w)[b][s]) * support<S>((*grid)[r][s], x);
      }
    }
    return acc;
  };

  std::vector<CaseResult> out;
  {
    SplitMix64 rng(seed);
    double worst = 0;
    bool allzero = true;
    for (int t = 0; t < dirs; ++t) {
      Vec<S> x = vec_cast<S>(seeded_direction(rng, n));
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
          if (a + b <= n) continue;
          S v = coeff(a, b, x);
          double av = std::abs(to_double(v));
          if constexpr (scalar_traits<S>::exact) {
            if (!(v == S(0))) allzero = false;
          } else {
            if (av > tol) allzero = false;
          }
          worst = std::max(worst, av);
        }
    }
    CaseResult c;
    c.name = prefix + " coefficients beyond total degree vanish";
    c.lhs = render_scalar(worst);
    c.rhs = "0";
    c.relation = "==";
    c.pass = allzero;
    c.slack = allzero ? 0.0 : -worst;
    out.push_back(std::move(c));
  }

  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      std::vector<std::pair<double, std::function<double(const Vec<double>&)>>> terms;
      for (int r = 0; r <= n; ++r) {
        if ((*w)[a][r] == 0) continue;
        for (int s = 0; s <= n; ++s) {
          if ((*w)[b][s] == 0) continue;
          terms.emplace_back(to_double((*w)[a][r] * (*w)[b][s]), support_mirror<S>((*grid)[r][s]));
        }
      }
      auto mirror = [terms](const Vec<double>& x) {
        double acc = 0;
        for (const auto& t : terms) acc += t.first * t.second(x);
        return acc;
      };
      CertifyOutcome co = certify_support_function<double>(mirror, n, triples,
                                                           seed + 100 * a + b + 7, tol);
      CaseResult c;
      c.name = prefix + " coefficient a^" + std::to_string(a) + " b^" + std::to_string(b) +
               " sublinear";
      c.lhs = std::to_string(co.violations);
      c.rhs = "0";
      c.relation = "==";
      c.pass = (co.violations == 0);
      c.slack = co.worst;
      c.witness = json{{"triples", co.trials}};
      out.push_back(std::move(c));
    }
  return out;
}

// ---------- hyperplane-split valuation check ----------

// op(P intersect H+) + op(P intersect H-) = op(P) + op(P intersect boundary),
// compared as support functions over seeded directions.
template <class S>
CaseResult check_valuation_property(const std::string& name, const ValuationOperator<S>& op,
                                    const Polytope& P, const Halfspace& hs, int dirs,
                                    std::uint64_t seed, double tol) {
  Polytope p1 = clip(P, hs);
  Polytope p2 = clip(P, hs.complement());
  if (p1.empty() || p2.empty())
    throw std::invalid_argument("check_valuation_property: plane must cut the body");
  std::vector<Vec<Rational>> on_plane;
  for (const auto& v : p1.verts())
    if (dot(hs.normal, v) == hs.offset) on_plane.push_back(v);
  if (on_plane.empty())
    throw std::invalid_argument("check_valuation_property: plane misses the body");
  Polytope sec = Polytope::from_points(P.dim(), std::move(on_plane));

  Body<S> fp = op(Body<S>(P)), f1 = op(Body<S>(p1)), f2 = op(Body<S>(p2)), fs = op(Body<S>(sec));
  auto lhs = [&f1, &f2](const Vec<Rational>& xq) {
    Vec<S> x = vec_cast<S>(xq);
    return support<S>(f1, x) + support<S>(f2, x);
  };
  auto rhs = [&fp, &fs](const Vec<Rational>& xq) {
    Vec<S> x = vec_cast<S>(xq);
    return support<S>(fp, x) + support<S>(fs, x);
  };
  return worst_equality_case<S>(name, P.dim(), dirs, seed, tol,
                                std::function<S(const Vec<Rational>&)>(lhs),
                                std::function<S(const Vec<Rational>&)>(rhs));
}

// ---------- component nonnegativity ----------

// Scalar valuation L -> h(op(L), x) + h(op(L), y) - h(op(L), x+y); nonnegative
// because operator values are convex bodies.
template <class S>
std::function<S(const Body<S>&)> support_triple_valuation(ValuationOperator<S> op, Vec<Rational> x,
                                                          Vec<Rational> y) {
  auto f = std::make_shared<ValuationOperator<S>>(std::move(op));
  Vec<S> xs = vec_cast<S>(x), ys = vec_cast<S>(y), zs = vec_cast<S>(x + y);
  return [f, xs, ys, zs](const Body<S>& L) {
    Body<S> v = (*f)(L);
    return support<S>(v, xs) + support<S>(v, ys) - support<S>(v, zs);
  };
}

// Scalar valuation L -> vol(L + W0) for a fixed zonotope W0.
template <class S>
std::function<S(const Body<S>&)> parallel_volume_valuation(Zonotope w0) {
  auto w = std::make_shared<Zonotope>(std::move(w0));
  return [w](const Body<S>& L) -> S {
    if (const auto* z = std::get_if<Zonotope>(&L)) return zonotope_volume<S>(minkowski_sum(*z, *w));
    if (const auto* p = std::get_if<Polytope>(&L)) {
      if (p->empty()) throw std::domain_error("parallel_volume_valuation: empty body");
      return sum_volume<S>(p->dim(), p->verts(), w->gens());
    }
    throw std::domain_error("parallel_volume_valuation: needs a stored body");
  };
}

// Fit f(r Z) for r = 0..n+1 as a degree-n polynomial; the two node windows
// must agree and every homogeneous component must be nonnegative.
template <class S>
CaseResult check_nonnegative_components(const std::string& name,
                                        const std::function<S(const Body<S>&)>& f, const Body<S>& Z,
                                        double tol) {
  const int n = body_dim(Z);
  std::vector<S> vals;
  vals.reserve(n + 2);
  for (int r = 0; r <= n + 1; ++r) vals.push_back(f(scale(Z, Rational(r))));
  std::vector<long> lo(n + 1), hi(n + 1);
  for (int r = 0; r <= n; ++r) {
    lo[r] = r;
    hi[r] = r + 1;
  }
  Matrix<Rational> wlo = vandermonde_coefficient_weights(lo);
  Matrix<Rational> whi = vandermonde_coefficient_weights(hi);

  CaseResult c;
  c.name = name;
  c.relation = ">=";
  c.rhs = "0";
  c.pass = true;
  S minc(0);
  bool first = true;
  json comps = json::array();
  for (int idx = 0; idx <= n; ++idx) {
    S a(0), b(0);
    for (int r = 0; r <= n; ++r) {
      if (!(wlo[idx][r] == 0)) a += scalar_cast<S>(wlo[idx][r]) * vals[r];
      if (!(whi[idx][r] == 0)) b += scalar_cast<S>(whi[idx][r]) * vals[r + 1];
    }
    if constexpr (scalar_traits<S>::exact) {
      c.pass = c.pass && (a == b) && !(a < S(0));
    } else {
      double ad = to_double(a), bd = to_double(b);
      double sc = 1.0 + std::max(std::abs(ad), std::abs(bd));
      c.pass = c.pass && std::abs(ad - bd) <= tol * sc && ad >= -tol * sc;
    }
    comps.push_back(render_scalar(a));
    if (first || a < minc) {
      minc = a;
      first = false;
    }
  }
  c.lhs = render_scalar(minc);
  c.slack = to_double(minc);
  c.witness = json{{"components", comps}};
  return c;
}

// ---------- Klain inversion cross-checks ----------

// Independent diagonal oracle: 2^i * sum over i-subsets of generators of the
// absolute bracket, enumerated directly over subsets rather than ray tuples.
template <class S>
S klain_diagonal_oracle(const Zonotope& Z, int i) {
  const auto& g = Z.gens();
  const int d = Z.dim();
  const int m = static_cast<int>(g.size());
  if (i < 1 || i > d) throw std::invalid_argument("klain_diagonal_oracle: degree out of 1..dim");
  S total(0);
  std::vector<int> pick(i);
  std::function<void(int, int)> rec = [&](int at, int from) {
    if (at == i) {
      std::vector<Vec<S>> vs(i);
      for (int t = 0; t < i; ++t) vs[t] = vec_cast<S>(g[pick[t]]);
      total += bracket<S>(vs, d);
      return;
    }
    for (int c = from; c + (i - at) <= m; ++c) {
      pick[at] = c;
      rec(at + 1, c + 1);
    }
  };
  rec(0, 0);
  return total * scalar_cast<S>(pow_int<Rational>(Rational(2), i));
}

template <class S>
CaseResult check_klain_diagonal(const std::string& name, const Zonotope& Z, int i, double tol) {
  std::vector<GeneratingMeasure> ms(static_cast<size_t>(i), generating_measure(Z));
  auto one = [](const std::vector<Vec<Rational>>&) { return S(1); };
  return check_equal<S>(name, klain_invert<S>(i, one, ms), klain_diagonal_oracle<S>(Z, i), tol);
}

// ---------- suites ----------

struct SuiteParams {
  int n = 3;
  int ball_n = 32;
  double tol = 1e-9;
  double eq_tol = 1e-6;  // homothety equality probes with real roots
  std::uint64_t seed = 2026;
  int count = 6;      // seeded bodies / pairs / splits per suite
  int dirs = 16;      // directions per support comparison
  int triples = 300;  // sublinearity triples per coefficient table
  std::vector<int> orders;    // restrict mixed-volume orders i (empty = all)
  std::string operator_name;  // restrict the operator registry (empty = all)
};

inline bool order_selected(const SuiteParams& p, int i) {
  if (p.orders.empty()) return true;
  return std::find(p.orders.begin(), p.orders.end(), i) != p.orders.end();
}

template <class S>
VerificationReport make_report(const std::string& suite, const SuiteParams& p) {
  if (p.n < 2 || p.n > 4) throw std::invalid_argument("suite: dimension must be 2, 3, or 4");
  if (p.count < 1) throw std::invalid_argument("suite: case count must be positive");
  VerificationReport rep;
  rep.config.suite = suite;
  rep.config.n = p.n;
  rep.config.ball_n = p.ball_n;
  rep.config.tol = p.tol;
  rep.config.arith = scalar_traits<S>::exact ? "exact" : "float";
  rep.config.seed = p.seed;
  rep.meta["calibration"] = rational_str(klain_calibration(p.n));
  return rep;
}

template <class S>
struct RegisteredOperator {
  std::string label;
  ValuationOperator<S> op;
};

template <class S>
std::vector<RegisteredOperator<S>> default_operator_registry(int ball_n) {
  std::vector<RegisteredOperator<S>> out;
  out.push_back({"projection_body", op_projection_body<S>()});
  out.push_back({"lambda(projection_body)", op_lambda<S>(op_projection_body<S>(), ball_n)});
  return out;
}

template <class S>
ValuationOperator<S> registry_operator(const SuiteParams& p) {
  std::string want = p.operator_name.empty() ? "projection_body" : p.operator_name;
  for (auto& entry : default_operator_registry<S>(p.ball_n))
    if (entry.label == want) return std::move(entry.op);
  throw std::invalid_argument("unknown operator: " + want);
}

template <class S>
VerificationReport suite_steiner(const SuiteParams& p) {
  VerificationReport rep = make_report<S>("steiner", p);
  SplitMix64 rng(p.seed);
  ValuationOperator<S> pi = registry_operator<S>(p);
  for (int k = 0; k < p.count; ++k) {
    Polytope K = seeded_polytope(rng, p.n, p.n == 2 ? 6 : 8);
    Zonotope R = seeded_zonotope(rng, p.n, 3);
    for (int which = 0; which < 2; ++which) {
      const Zonotope& Z = which ? R : ball_zonotope(p.n, p.ball_n);
      std::string prefix =
          "body " + std::to_string(k) + (which ? " with seeded zonotope" : " with ball zonotope");
      for (auto& c : check_steiner_decomposition<S>(prefix, pi, Body<S>(K), Z, p.dirs, p.triples,
                                                    p.seed + 10000 * k + which, p.tol))
        rep.add(std::move(c));
    }
  }
  return rep;
}

template <class S>
VerificationReport suite_symmetry(const SuiteParams& p) {
  VerificationReport rep = make_report<S>("symmetry", p);
  SplitMix64 rng(p.seed);
  rep.add(check_projection_symmetry<S>("cube vs corner simplex", Body<S>(Polytope::cube01(p.n)),
                                       Body<S>(corner_simplex(p.n)), p.tol));
  for (int k = 0; k < p.count; ++k) {
    Body<S> K(seeded_polytope(rng, p.n, 8));
    Body<S> L = (k % 3 == 2) ? Body<S>(seeded_zonotope(rng, p.n, 4))
                             : Body<S>(seeded_polytope(rng, p.n, 8));
    CaseResult c = check_projection_symmetry<S>("pair " + std::to_string(k), K, L, p.tol);
    c.witness = json{{"pair", k}};
    rep.add(std::move(c));
  }
  return rep;
}

template <class S>
VerificationReport suite_durch(const SuiteParams& p) {
  VerificationReport rep = make_report<S>("durch", p);
  SplitMix64 rng(p.seed);
  auto pi = op_projection_body<S>();
  rep.add(check_equivariance<S>("projection body rotation equivariance", pi,
                                seeded_polytope(rng, p.n, 8), p.dirs, p.seed + 5, p.tol));
  const int j = p.n - 1;
  if (order_selected(p, 1)) {
    Body<S> B(ball_zonotope(p.n, p.ball_n));
    rep.add(check_durch_identity<S>("ball against itself order i=1", B, B, 1, p.ball_n, p.tol));
  }
  for (int k = 0; k < p.count; ++k) {
    Body<S> K(seeded_polytope(rng, p.n, 8));
    Body<S> L(seeded_polytope(rng, p.n, 8));
    for (int i = 1; i <= j + 1; ++i) {
      if (!order_selected(p, i)) continue;
      CaseResult c = check_durch_identity<S>(
          "pair " + std::to_string(k) + " order i=" + std::to_string(i), K, L, i, p.ball_n, p.tol);
      c.witness = json{{"pair", k}, {"i", i}};
      rep.add(std::move(c));
    }
  }
  return rep;
}

template <class S>
VerificationReport suite_bm(const SuiteParams& p) {
  VerificationReport rep = make_report<S>("bm", p);
  SplitMix64 rng(p.seed);
  for (int k = 0; k < p.count; ++k) {
    Body<S> K(seeded_polytope(rng, p.n, 8));
    Body<S> L(seeded_polytope(rng, p.n, 8));
    for (int i = 0; i <= p.n - 2; ++i) {
      CaseResult a = check_minkowski_inequality<S>(
          "pair " + std::to_string(k) + " minkowski i=" + std::to_string(i), K, L, i, p.ball_n,
          p.tol);
      a.witness = json{{"pair", k}, {"i", i}};
      rep.add(std::move(a));
      CaseResult b = check_bm_quermass<S>(
          "pair " + std::to_string(k) + " quermass root i=" + std::to_string(i), K, L, i, p.ball_n,
          p.tol);
      b.witness = json{{"pair", k}, {"i", i}};
      rep.add(std::move(b));
    }
    for (int i = 1; i <= p.n - 2; ++i) {
      std::vector<Body<S>> C;
      for (int t = 0; t < i; ++t) C.push_back(Body<S>(seeded_zonotope(rng, p.n, 3)));
      CaseResult c = check_bm_general<S>(
          "pair " + std::to_string(k) + " general reference i=" + std::to_string(i), K, L, C,
          p.tol);
      c.witness = json{{"pair", k}, {"i", i}};
      rep.add(std::move(c));
    }
  }
  const Rational lams[3] = {Rational(1, 2), Rational(1), Rational(3)};
  for (int t = 0; t < 3; ++t) {
    Body<S> K(seeded_polytope(rng, p.n, 8));
    Vec<Rational> x = seeded_direction(rng, p.n);
    Body<S> L = translate(scale(K, lams[t]), x);
    for (int i = 0; i <= p.n - 2; ++i) {
      rep.add(check_minkowski_inequality<S>("homothety lambda=" + rational_str(lams[t]) +
                                                " minkowski i=" + std::to_string(i),
                                            K, L, i, p.ball_n, p.tol, true));
      rep.add(check_bm_quermass<S>("homothety lambda=" + rational_str(lams[t]) +
                                       " quermass root i=" + std::to_string(i),
                                   K, L, i, p.ball_n, p.eq_tol, true));
    }
  }
  return rep;
}

template <class S>
VerificationReport suite_main(const SuiteParams& p) {
  VerificationReport rep = make_report<S>("main", p);
  SplitMix64 rng(p.seed);
  json reg = json::array();
  for (auto& entry : default_operator_registry<S>(p.ball_n)) {
    int j = discover_degree<S>(entry.op, Body<S>(Polytope::cube_sym(p.n)), p.seed + 17);
    double width = operator_ball_width<S>(entry.op, p.n, p.ball_n);
    bool selected = p.operator_name.empty() || entry.label == p.operator_name;
    bool usable = selected && (j >= 2 && j <= p.n - 1 && width > 0);
    reg.push_back(json{{"operator", entry.label},
                       {"degree", j},
                       {"ballWidth", width},
                       {"included", usable}});
    if (!usable) continue;

    CaseResult nt;
    nt.name = entry.label + " non-trivial on the ball";
    nt.lhs = render_scalar(width);
    nt.rhs = "0";
    nt.relation = ">=";
    nt.slack = width;
    nt.pass = width > 0;
    rep.add(std::move(nt));

    rep.add(check_equivariance<S>(entry.label + " rotation equivariance", entry.op,
                                  seeded_polytope(rng, p.n, 8), p.dirs, p.seed + 29, p.tol));

    for (int k = 0; k < p.count; ++k) {
      Body<S> K(seeded_polytope(rng, p.n, 8));
      Body<S> L(seeded_polytope(rng, p.n, 8));
      for (int i = 1; i <= j + 1; ++i) {
        if (!order_selected(p, i)) continue;
        CaseResult c = check_main_inequality<S>(
            entry.label + " pair " + std::to_string(k) + " i=" + std::to_string(i), entry.op, j, K,
            L, i, p.ball_n, p.tol);
        c.witness = json{{"pair", k}, {"i", i}, {"j", j}};
        rep.add(std::move(c));
      }
    }

    const Rational lams[3] = {Rational(1, 2), Rational(1), Rational(3)};
    for (int t = 0; t < 3; ++t) {
      Body<S> K(seeded_polytope(rng, p.n, 8));
      Vec<Rational> x = seeded_direction(rng, p.n);
      for (int i = 1; i <= j + 1; ++i) {
        if (!order_selected(p, i)) continue;
        rep.add(check_main_homothety<S>(entry.label + " homothety lambda=" +
                                            rational_str(lams[t]) + " i=" + std::to_string(i),
                                        entry.op, j, K, lams[t], x, i, p.ball_n, p.eq_tol));
      }
    }

    Polytope base = seeded_polytope(rng, p.n, 6);
    Body<S> smooth(minkowski_sum(base, ball_zonotope(p.n, 8)));
    Vec<Rational> x = seeded_direction(rng, p.n);
    for (int i = 1; i <= j + 1; ++i) {
      if (!order_selected(p, i)) continue;
      rep.add(check_main_homothety<S>(entry.label + " smoothed homothety i=" + std::to_string(i),
                                      entry.op, j, smooth, Rational(2), x, i, p.ball_n, p.eq_tol));
    }
  }
  rep.meta["registry"] = reg;
  return rep;
}

template <class S>
VerificationReport suite_valuation_property(const SuiteParams& p) {
  VerificationReport rep = make_report<S>("valuation-property", p);
  SplitMix64 rng(p.seed);
  const Zonotope& B = ball_zonotope(p.n, p.ball_n);
  std::vector<std::pair<std::string, ValuationOperator<S>>> ops;
  ops.emplace_back("projection_body", op_projection_body<S>());
  for (int jj = 1; jj <= p.n; ++jj)
    ops.emplace_back("component r^" + std::to_string(jj),
                     op_component<S>(op_projection_body<S>(), jj, B));
  for (int k = 0; k < p.count; ++k) {
    Polytope P = seeded_polytope(rng, p.n, 8);
    Halfspace hs = seeded_halfspace(rng, P);
    for (auto& [label, op] : ops) {
      CaseResult c = check_valuation_property<S>(label + " split " + std::to_string(k), op, P, hs,
                                                 p.dirs, p.seed + 31 * k + 11, p.tol);
      c.witness["split"] = k;
      c.witness["plane"] = vec_witness(hs.normal);
      rep.add(std::move(c));
    }
  }
  return rep;
}

template <class S>
VerificationReport suite_klain(const SuiteParams& p) {
  VerificationReport rep = make_report<S>("klain", p);
  SplitMix64 rng(p.seed);
  for (int k = 0; k < p.count; ++k) {
    Zonotope Z = seeded_zonotope(rng, p.n, p.n + 2);
    for (int i = 1; i <= p.n; ++i) {
      CaseResult c = check_klain_diagonal<S>(
          "zonotope " + std::to_string(k) + " degree " + std::to_string(i), Z, i, p.tol);
      c.witness = json{{"zonotope", k}, {"i", i}};
      rep.add(std::move(c));
    }
    std::vector<GeneratingMeasure> ms(static_cast<size_t>(p.n), generating_measure(Z));
    auto one = [](const std::vector<Vec<Rational>>&) { return S(1); };
    rep.add(check_equal<S>("zonotope " + std::to_string(k) + " top degree reproduces volume",
                           klain_invert<S>(p.n, one, ms), zonotope_volume<S>(Z), p.tol));
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> v = {"steiner", "symmetry",           "durch", "bm",
                                             "main",    "valuation-property", "klain"};
  return v;
}

template <class S>
VerificationReport run_suite(const std::string& name, const SuiteParams& p) {
  if (name == "steiner") return suite_steiner<S>(p);
  if (name == "symmetry") return suite_symmetry<S>(p);
  if (name == "durch") return suite_durch<S>(p);
  if (name == "bm") return suite_bm<S>(p);
  if (name == "main") return suite_main<S>(p);
  if (name == "valuation-property") return suite_valuation_property<S>(p);
  if (name == "klain") return suite_klain<S>(p);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace minkval
