#pragma once

// Minkowski valuations: body-valued maps that add under Minkowski
// combinations of convex bodies.  This module provides
//
//   * the projection body map with exact generator-level closed forms on
//     polytopes and zonotopes, including a closed form on sums K + W with a
//     zonotope that never materializes the sum (the mixed surface term is a
//     sum over edge/generator pairs);
//   * Steiner-type decomposition: operator values on parallel bodies K + rZ
//     are sampled at integer radii and split into polynomial coefficients by
//     exact inverse-Vandermonde weights, with a second node window acting as
//     a polynomiality cross-check;
//   * a derivation operator extracting the linear coefficient of the
//     enlargement, composable with any operator;
//   * sublinearity certification of support-function closures;
//   * Klain-function inversion for even homogeneous valuations on zonotopes
//     from generating-measure rays, with the factor-two-per-argument
//     calibration pinned on the symmetric cube;
//   * discrete Steiner points.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "minkval/bodies.hpp"
#include "minkval/mixed_volumes.hpp"
#include "minkval/seeded.hpp"

namespace minkval {

// ---------- projection body ----------

// Generators of the projection body of a stored body: the support function of
// the projection body is half the integral of |x . v| over outward facet
// vector areas v, which is the support function of a zonotope.
inline std::vector<Vec<Rational>> projection_body_gens(const Polytope& P) {
  const int d = P.dim();
  if (P.empty()) throw std::domain_error("projection_body: empty body");
  const HullData& h = P.hull();
  std::vector<Vec<Rational>> gens;
  if (h.rank == d) {
    for (const auto& va : facet_vector_areas(h)) gens.push_back(va * Rational(1, 2));
  } else if (h.rank == d - 1) {
    // a flat body projects like a two-sided facet
    gens.push_back(h.flat_vector_area);
  }
  // lower rank: the projection body is the origin
  return gens;
}

inline std::vector<Vec<Rational>> projection_body_gens(const Zonotope& Z) {
  const int d = Z.dim();
  const auto& g = Z.gens();
  std::vector<Vec<Rational>> out;
  if (d == 2) {
    for (const auto& a : g) out.push_back(rot90(a) * Rational(2));
  } else if (d == 3) {
    for (size_t a = 0; a < g.size(); ++a)
      for (size_t b = a + 1; b < g.size(); ++b) {
        Vec<Rational> c = cross(g[a], g[b]);
        if (!c.is_zero()) out.push_back(c * Rational(4));
      }
  } else if (d == 4) {
    for (size_t a = 0; a < g.size(); ++a)
      for (size_t b = a + 1; b < g.size(); ++b)
        for (size_t c = b + 1; c < g.size(); ++c) {
          std::vector<Vec<Rational>> triple = {g[a], g[b], g[c]};
          Vec<Rational> w = generalized_cross(triple, 4);
          if (!w.is_zero()) out.push_back(w * Rational(8));
        }
  } else {
    throw std::invalid_argument("projection_body: dimension must be 2..4");
  }
  return out;
}

// Mixed surface-area generators of Pi(K + W) in dimension 3 for a full-rank
// base: each true edge e of K whose normal arc crosses the great circle of a
// generator g contributes e x g, halved when the arc only touches the circle
// at one of the two adjacent facet normals.
inline std::vector<Vec<Rational>> projection_mixed_gens(const Polytope& K, const Zonotope& W) {
  const HullData& h = K.hull();
  if (h.rank != 3) throw std::logic_error("projection_mixed_gens: needs a full-rank 3d base");
  std::vector<Vec<Rational>> out;
  for (const auto& e : h.edges) {
    Vec<Rational> evec = h.verts[e[1]] - h.verts[e[0]];
    // find the two facets sharing this edge
    std::vector<const HullFacet*> adj;
    for (const auto& f : h.facets) {
      bool has0 = std::binary_search(f.verts.begin(), f.verts.end(), e[0]);
      bool has1 = std::binary_search(f.verts.begin(), f.verts.end(), e[1]);
      if (has0 && has1) adj.push_back(&f);
    }
    if (adj.size() != 2) throw std::logic_error("projection_body: edge without two facets");
    for (const auto& g : W.gens()) {
      Vec<Rational> c = cross(evec, g);
      if (c.is_zero()) continue;
      Rational s1 = dot(adj[0]->normal, g);
      Rational s2 = dot(adj[1]->normal, g);
      if (s1 == 0 && s2 == 0) continue;  // possible only for edges parallel to g
      if (s1 == 0 || s2 == 0) out.push_back(c * Rational(1, 2));
      else if ((s1 > 0) != (s2 > 0)) out.push_back(c);
    }
  }
  return out;
}

// Mixed generators for a flat (rank dim-1) base in dimension 3.  Every
// boundary edge of the polygon has a half-circle normal arc from the flat
// normal to its antipode, which crosses each generator circle exactly once;
// edge/generator pairs with the generator in the base plane land as extra
// area on the two flat facets with exactly matching mass, so no crossing test
// and no halving are needed.
inline std::vector<Vec<Rational>> projection_flat_mixed_gens(const Polytope& K,
                                                             const Zonotope& W) {
  const HullData& h = K.hull();
  if (h.dim != 3 || h.rank != 2)
    throw std::logic_error("projection_flat_mixed_gens: needs a flat 3d base");
  // boundary ring of the polygon: drop the coordinate with the largest flat
  // normal component (a bijection on the base plane) and hull in 2d
  int jstar = 0;
  for (int j = 1; j < 3; ++j)
    if (abs_of(h.flat_normal.c[j]) > abs_of(h.flat_normal.c[jstar])) jstar = j;
  std::vector<Vec<Rational>> proj;
  for (const auto& v : h.verts) {
    Vec<Rational> p(2);
    int t = 0;
    for (int j = 0; j < 3; ++j)
      if (j != jstar) p.c[t++] = v.c[j];
    proj.push_back(p);
  }
  HullData ring2 = convex_hull(2, proj);
  auto unproject = [&](int ring_idx) -> const Vec<Rational>& {
    const Vec<Rational>& q = ring2.verts[ring_idx];
    for (size_t i = 0; i < h.verts.size(); ++i)
      if (proj[i] == q) return h.verts[i];
    throw std::logic_error("projection_flat_mixed_gens: ring vertex not found");
  };
  std::vector<Vec<Rational>> out;
  const int m = static_cast<int>(ring2.ring.size());
  for (int i = 0; i < m; ++i) {
    Vec<Rational> evec = unproject(ring2.ring[(i + 1) % m]) - unproject(ring2.ring[i]);
    for (const auto& g : W.gens()) {
      Vec<Rational> c = cross(evec, g);
      if (!c.is_zero()) out.push_back(c);
    }
  }
  return out;
}

template <class S>
Body<S> projection_body(const Body<S>& b) {
  const int d = body_dim(b);
  if (const auto* p = std::get_if<Polytope>(&b))
    return Zonotope(d, Vec<Rational>(d), projection_body_gens(*p));
  if (const auto* z = std::get_if<Zonotope>(&b))
    return Zonotope(d, Vec<Rational>(d), projection_body_gens(*z));
  throw std::domain_error("projection_body: needs a stored body, not a support closure");
}

// Wrap an origin-symmetric generator list as a body.  Exact mode builds the
// zonotope (canonical generator order, exact comparisons).  Float mode skips
// the canonicalization sort -- which dominates the cost once enlargement sums
// against fine ball zonotopes produce tens of thousands of generators -- and
// returns the support function directly.
template <class S>
Body<S> even_zonotope_body(int d, std::vector<Vec<Rational>> gens) {
  if constexpr (scalar_traits<S>::exact) {
    return Body<S>(Zonotope(d, Vec<Rational>(d), std::move(gens)));
  } else {
    std::vector<Vec<S>> gs;
    gs.reserve(gens.size());
    for (const auto& g : gens) {
      Vec<S> v = vec_cast<S>(g);
      if (!v.is_zero()) gs.push_back(v);
    }
    SupportBody<S> sb;
    sb.dim = d;
    sb.label = "even_zonotope";
    sb.h = [gs = std::move(gs)](const Vec<S>& x) {
      S acc(0);
      for (const auto& g : gs) acc += abs_of(dot(g, x));
      return acc;
    };
    return Body<S>(std::move(sb));
  }
}

// Pi(K + W) without materializing the sum.  Zonotope bases merge generator
// lists; 2d sums add their boundary measures; 3d polytope bases add the
// edge/generator mixed term.  Other shapes materialize when small.
template <class S>
Body<S> projection_body_sum(const Body<S>& K, const Zonotope& W) {
  const int d = body_dim(K);
  if (W.dim() != d) throw std::invalid_argument("projection_body_sum: dimension mismatch");
  if (const auto* z = std::get_if<Zonotope>(&K))
    return even_zonotope_body<S>(d, projection_body_gens(minkowski_sum(*z, W)));
  const auto* p = std::get_if<Polytope>(&K);
  if (!p) throw std::domain_error("projection_body: needs a stored body, not a support closure");
  if (p->rank() <= 1) {
    // a point or segment base makes the whole sum a zonotope
    if (p->empty()) throw std::domain_error("projection_body: empty body");
    const auto& vs = p->verts();
    Vec<Rational> c = vs.front(), g(d);
    if (vs.size() == 2) {
      c = (vs[0] + vs[1]) * Rational(1, 2);
      g = (vs[1] - vs[0]) * Rational(1, 2);
    }
    std::vector<Vec<Rational>> segs = W.gens();
    if (!g.is_zero()) segs.push_back(g);
    return even_zonotope_body<S>(d, projection_body_gens(Zonotope(d, c + W.center(), std::move(segs))));
  }
  std::vector<Vec<Rational>> gens = projection_body_gens(*p);
  if (d == 2) {
    for (const auto& g : projection_body_gens(W)) gens.push_back(g);
  } else if (d == 3) {
    if (p->rank() == 3)
      for (const auto& g : projection_mixed_gens(*p, W)) gens.push_back(g);
    else
      for (const auto& g : projection_flat_mixed_gens(*p, W)) gens.push_back(g);
    for (const auto& g : projection_body_gens(W)) gens.push_back(g);
  } else {
    if (static_cast<int>(W.gens().size()) <= kZonotopeVertexCap)
      return projection_body<S>(Body<S>(minkowski_sum(*p, W)));
    throw std::domain_error("projection_body: no closed form for 4d polytope sums of this size");
  }
  return even_zonotope_body<S>(d, std::move(gens));
}

// ---------- operators ----------

template <class S>
Body<S> materialized_sum(const Body<S>& K, const Zonotope& W) {
  if (const auto* z = std::get_if<Zonotope>(&K)) return minkowski_sum(*z, W);
  if (const auto* p = std::get_if<Polytope>(&K)) {
    if (static_cast<int>(W.gens().size()) <= kZonotopeVertexCap) return minkowski_sum(*p, W);
  }
  return minkowski_sum(K, Body<S>(W));  // support-closure fallback
}

// A body-valued map on convex bodies.  eval_sum, when present, evaluates the
// operator on K + W without materializing the sum.
template <class S>
struct ValuationOperator {
  std::string name;
  std::function<Body<S>(const Body<S>&)> eval;
  std::function<Body<S>(const Body<S>&, const Zonotope&)> eval_sum;

  Body<S> operator()(const Body<S>& K) const { return eval(K); }
  Body<S> on_sum(const Body<S>& K, const Zonotope& W) const {
    if (eval_sum) return eval_sum(K, W);
    return eval(materialized_sum<S>(K, W));
  }
};

template <class S>
ValuationOperator<S> op_projection_body() {
  return ValuationOperator<S>{
      "projection_body", [](const Body<S>& K) { return projection_body<S>(K); },
      [](const Body<S>& K, const Zonotope& W) { return projection_body_sum<S>(K, W); }};
}

template <class S>
ValuationOperator<S> op_identity() {
  return ValuationOperator<S>{
      "identity", [](const Body<S>& K) { return K; },
      [](const Body<S>& K, const Zonotope& W) { return materialized_sum<S>(K, W); }};
}

// K -> vol(K) * B: a body-valued valuation that is not Minkowski-linear in K,
// useful as a homogeneous-degree-n reference operator.
template <class S>
ValuationOperator<S> op_volume_ball(int ball_n) {
  auto make = [ball_n](int d, S v) -> Body<S> {
    const Zonotope& B = ball_zonotope(d, ball_n);
    return SupportBody<S>{d, [v, &B](const Vec<S>& x) { return v * support<S>(B, x); },
                          "volume_ball"};
  };
  return ValuationOperator<S>{
      "volume_ball",
      [make](const Body<S>& K) { return make(body_dim(K), body_volume<S>(K)); },
      [make](const Body<S>& K, const Zonotope& W) -> Body<S> {
        const int d = body_dim(K);
        std::vector<Vec<Rational>> base;
        std::vector<Vec<Rational>> segs = W.gens();
        if (const auto* p = std::get_if<Polytope>(&K)) {
          base = p->verts();
        } else if (const auto* z = std::get_if<Zonotope>(&K)) {
          base = {z->center()};
          for (const auto& g : z->gens()) segs.push_back(g);
        } else {
          throw std::domain_error("volume_ball: needs a stored body");
        }
        return make(d, sum_volume<S>(d, base, std::move(segs)));
      }};
}

template <class S>
ValuationOperator<S> op_scale(ValuationOperator<S> inner, Rational factor) {
  auto f = std::make_shared<ValuationOperator<S>>(std::move(inner));
  return ValuationOperator<S>{
      "scale(" + f->name + ")",
      [f, factor](const Body<S>& K) { return scale(f->eval(K), factor); },
      [f, factor](const Body<S>& K, const Zonotope& W) { return scale(f->on_sum(K, W), factor); }};
}

template <class S>
ValuationOperator<S> op_sum(ValuationOperator<S> a, ValuationOperator<S> b) {
  auto fa = std::make_shared<ValuationOperator<S>>(std::move(a));
  auto fb = std::make_shared<ValuationOperator<S>>(std::move(b));
  return ValuationOperator<S>{
      "sum(" + fa->name + "," + fb->name + ")",
      [fa, fb](const Body<S>& K) { return minkowski_sum(fa->eval(K), fb->eval(K)); },
      [fa, fb](const Body<S>& K, const Zonotope& W) {
        return minkowski_sum(fa->on_sum(K, W), fb->on_sum(K, W));
      }};
}

// ---------- Steiner decomposition ----------

// Operator values on K + rZ sampled at r = 0..degree+1.  Exact inverse
// Vandermonde weights on the node windows {0..degree} and {1..degree+1} read
// off the coefficient of r^j as a signed combination of sample supports; the
// two windows agree exactly iff the sampled map is a polynomial of the
// declared degree.
template <class S>
struct SteinerData {
  int dim = 0;
  int degree = 0;
  std::vector<Body<S>> samples;
  Matrix<Rational> w_lo, w_hi;

  S coeff_support(int j, const Vec<S>& x, bool hi = false) const {
    const Matrix<Rational>& w = hi ? w_hi : w_lo;
    S acc(0);
    for (int r = 0; r <= degree; ++r) {
      if (w[j][r] == 0) continue;
      acc += scalar_cast<S>(w[j][r]) * support<S>(samples[hi ? r + 1 : r], x);
    }
    return acc;
  }
};

template <class S>
SteinerData<S> steiner_decompose(const ValuationOperator<S>& op, const Body<S>& K,
                                 const Zonotope& Z) {
  SteinerData<S> sd;
  sd.dim = body_dim(K);
  sd.degree = sd.dim;
  for (int r = 0; r <= sd.degree + 1; ++r) {
    if (r == 0) sd.samples.push_back(op.eval(K));
    else sd.samples.push_back(op.on_sum(K, scale(Z, Rational(r))));
  }
  std::vector<long> lo(sd.degree + 1), hi(sd.degree + 1);
  for (int r = 0; r <= sd.degree; ++r) {
    lo[r] = r;
    hi[r] = r + 1;
  }
  sd.w_lo = vandermonde_coefficient_weights(lo);
  sd.w_hi = vandermonde_coefficient_weights(hi);
  return sd;
}

template <class S>
SupportBody<S> steiner_component(std::shared_ptr<SteinerData<S>> sd, int j, bool hi = false) {
  if (j < 0 || j > sd->degree) throw std::invalid_argument("steiner_component: index out of range");
  return SupportBody<S>{sd->dim,
                        [sd, j, hi](const Vec<S>& x) { return sd->coeff_support(j, x, hi); },
                        "steiner_component_" + std::to_string(j)};
}

// Largest relative disagreement between the two node windows over seeded
// directions; exactly zero in exact arithmetic iff the sampled map is a
// polynomial of the declared degree.
template <class S>
double steiner_fit_discrepancy(const SteinerData<S>& sd, int trials, std::uint64_t seed) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    auto xq = seeded_generators(rng, sd.dim, 1)[0];
    Vec<S> x = vec_cast<S>(xq);
    for (int j = 0; j <= sd.degree; ++j) {
      double lo = to_double(sd.coeff_support(j, x, false));
      double hi = to_double(sd.coeff_support(j, x, true));
      double scale = 1.0 + std::max(std::abs(lo), std::abs(hi));
      worst = std::max(worst, std::abs(lo - hi) / scale);
    }
  }
  return worst;
}

// The operator K -> inner(K + W0) for a fixed zonotope W0.  This is again a
// Minkowski valuation; sums merge into the fixed summand.
template <class S>
ValuationOperator<S> op_parallel(ValuationOperator<S> inner, Zonotope w0) {
  auto f = std::make_shared<ValuationOperator<S>>(std::move(inner));
  auto base = std::make_shared<Zonotope>(std::move(w0));
  return ValuationOperator<S>{
      "parallel(" + f->name + ")",
      [f, base](const Body<S>& K) { return f->on_sum(K, *base); },
      [f, base](const Body<S>& K, const Zonotope& V) {
        return f->on_sum(K, minkowski_sum(*base, V));
      }};
}

// The coefficient of r^power in K -> inner(K + rZ) for a fixed zonotope Z.
// Each such coefficient is itself a Minkowski valuation in K.
template <class S>
ValuationOperator<S> op_component(ValuationOperator<S> inner, int power, Zonotope z) {
  auto f = std::make_shared<ValuationOperator<S>>(std::move(inner));
  auto zz = std::make_shared<Zonotope>(std::move(z));
  auto derive = [f, zz, power](const Body<S>& K, const Zonotope* W) -> Body<S> {
    ValuationOperator<S> shifted = W ? op_parallel<S>(*f, *W) : *f;
    auto sd = std::make_shared<SteinerData<S>>(steiner_decompose<S>(shifted, K, *zz));
    return steiner_component<S>(sd, power);
  };
  return ValuationOperator<S>{
      "component_" + std::to_string(power) + "(" + f->name + ")",
      [derive](const Body<S>& K) { return derive(K, nullptr); },
      [derive](const Body<S>& K, const Zonotope& W) { return derive(K, &W); }};
}

// The derivation operator: the coefficient of the linear term in the
// enlargement of the argument by the ball zonotope.
template <class S>
ValuationOperator<S> op_lambda(ValuationOperator<S> inner, int ball_n) {
  auto f = std::make_shared<ValuationOperator<S>>(std::move(inner));
  auto derive = [f, ball_n](const Body<S>& K, const Zonotope* W) -> Body<S> {
    const int d = body_dim(K);
    const Zonotope& B = ball_zonotope(d, ball_n);
    ValuationOperator<S> shifted = W ? op_parallel<S>(*f, *W) : *f;
    auto sd = std::make_shared<SteinerData<S>>(steiner_decompose<S>(shifted, K, B));
    return steiner_component<S>(sd, 1);
  };
  return ValuationOperator<S>{
      "lambda(" + f->name + ")",
      [derive](const Body<S>& K) { return derive(K, nullptr); },
      [derive](const Body<S>& K, const Zonotope& W) { return derive(K, &W); }};
}

// ---------- sublinearity certification ----------

struct CertifyOutcome {
  int trials = 0;
  int violations = 0;
  double worst = 0;  // most negative sublinearity slack seen (0 if none)
};

template <class S>
CertifyOutcome certify_support_function(const std::function<S(const Vec<S>&)>& h, int dim,
                                        int trials, std::uint64_t seed, double tol) {
  SplitMix64 rng(seed);
  CertifyOutcome out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Vec<Rational> xq = seeded_generators(rng, dim, 1)[0];
    Vec<Rational> yq = seeded_generators(rng, dim, 1)[0];
    Vec<S> x = vec_cast<S>(xq), y = vec_cast<S>(yq);
    S slack = h(x) + h(y) - h(x + y);
    if constexpr (scalar_traits<S>::exact) {
      if (slack < 0) {
        ++out.violations;
        out.worst = std::min(out.worst, to_double(slack));
      }
    } else {
      double scale = 1.0 + std::abs(h(x)) + std::abs(h(y));
      double s = slack;
      if (s < -tol * scale) {
        ++out.violations;
        out.worst = std::min(out.worst, s);
      }
    }
  }
  return out;
}

// ---------- Klain inversion ----------

// Value of an even i-homogeneous valuation on the zonotopes generated by the
// given measures, reconstructed from its Klain function on ray spans:
//   phi = (1/i!) * sum over ordered ray tuples kf(rays) * bracket(rays).
// Rays are unnormalized antipodal atoms; the half-mass convention and the
// factor-two calibration per argument cancel against the missing 1/2^i.
template <class S, class KF>
S klain_invert(int i, KF&& kf, const std::vector<GeneratingMeasure>& ms) {
  if (ms.empty() || static_cast<int>(ms.size()) != i)
    throw std::invalid_argument("klain_invert: need exactly i measures");
  const int d = ms[0].dim;
  if (i < 1 || i > d) throw std::invalid_argument("klain_invert: homogeneity out of 1..dim");
  for (const auto& m : ms)
    if (m.dim != d) throw std::invalid_argument("klain_invert: dimension mismatch");

  S total(0);
  std::vector<Vec<Rational>> rays(i);
  std::vector<Vec<S>> cast(i);
  std::function<void(int)> rec = [&](int k) {
    if (k == i) {
      S br = bracket<S>(cast, d);
      if (!(br == S(0))) total += kf(rays) * br;
      return;
    }
    for (const auto& r : ms[k].rays) {
      rays[k] = r;
      cast[k] = vec_cast<S>(r);
      rec(k + 1);
    }
  };
  rec(0);
  return total * scalar_cast<S>(1 / factorial_q(i));
}

// Calibration of the ray convention on the symmetric unit cube: with
// half-mass unit atoms the reconstruction misses exactly a factor 2 per
// argument.  Returns the per-argument factor and insists it is exactly 2.
inline Rational klain_calibration(int n) {
  Zonotope cube = Zonotope::cube_sym(n);
  GeneratingMeasure m = generating_measure(cube);
  std::vector<GeneratingMeasure> ms(n, m);
  // raw reconstruction with kf = 1 on half-mass atoms (rays shrunk to g/2)
  for (auto& mm : ms)
    for (auto& r : mm.rays) r = r * Rational(1, 2);
  Rational raw = klain_invert<Rational>(
      n, [](const std::vector<Vec<Rational>>&) { return Rational(1); }, ms);
  Rational vol = zonotope_volume<Rational>(cube);
  if (raw == 0) throw std::logic_error("klain_calibration: degenerate reconstruction");
  Rational ratio = vol / raw;
  Rational per_arg(2);
  Rational check(1);
  for (int k = 0; k < n; ++k) check *= per_arg;
  if (check != ratio) throw std::logic_error("klain_calibration: ratio is not 2 per argument");
  return per_arg;
}

// ---------- Steiner point ----------

// Discrete Steiner point: solve (sum u u^T) s = sum h(K,u) u over a symmetric
// direction set.  The second-moment matrix is inverted exactly, so the point
// is translation-equivariant for every admissible direction set and converges
// to the curvature-weighted boundary centroid as the set refines.
template <class S>
Vec<S> steiner_point(const Body<S>& K, int N) {
  const int d = body_dim(K);
  std::vector<Vec<Rational>> dirs = direction_set(d, N);
  Matrix<S> m(d, std::vector<S>(d, S(0)));
  std::vector<S> rhs(d, S(0));
  for (const auto& uq : dirs) {
    Vec<S> u = vec_cast<S>(uq);
    S h = support<S>(K, u);
    for (int i = 0; i < d; ++i) {
      rhs[i] += h * u.c[i];
      for (int j = 0; j < d; ++j) m[i][j] += u.c[i] * u.c[j];
    }
  }
  std::vector<S> sol = solve_linear(m, rhs);
  Vec<S> s(d);
  for (int i = 0; i < d; ++i) s.c[i] = sol[i];
  return s;
}

// ---------- operator expressions ----------

// Operator expression syntax:
//   {"op":"projection_body"} | {"op":"identity"} | {"op":"volume_ball"}
//   {"op":"lambda","of":EXPR}
//   {"op":"scale","factor":"p/q","of":EXPR}
//   {"op":"sum","terms":[EXPR, EXPR, ...]}
template <class S>
ValuationOperator<S> operator_from_json(const json& expr, int ball_n) {
  if (!expr.is_object() || !expr.contains("op") || !expr["op"].is_string())
    throw std::invalid_argument("operator json: missing string field 'op'");
  std::string op = expr["op"].get<std::string>();
  if (op == "projection_body") return op_projection_body<S>();
  if (op == "identity") return op_identity<S>();
  if (op == "volume_ball") return op_volume_ball<S>(ball_n);
  if (op == "lambda") {
    if (!expr.contains("of"))
      throw std::invalid_argument("operator json: 'lambda' needs field 'of'");
    return op_lambda<S>(operator_from_json<S>(expr["of"], ball_n), ball_n);
  }
  if (op == "scale") {
    if (!expr.contains("factor") || !expr["factor"].is_string() || !expr.contains("of"))
      throw std::invalid_argument("operator json: 'scale' needs fields 'factor' and 'of'");
    return op_scale<S>(operator_from_json<S>(expr["of"], ball_n),
                       rational_parse(expr["factor"].get<std::string>()));
  }
  if (op == "sum") {
    if (!expr.contains("terms") || !expr["terms"].is_array() || expr["terms"].size() < 2)
      throw std::invalid_argument("operator json: 'sum' needs an array field 'terms' of size >= 2");
    ValuationOperator<S> acc = operator_from_json<S>(expr["terms"][0], ball_n);
    for (size_t i = 1; i < expr["terms"].size(); ++i)
      acc = op_sum<S>(std::move(acc), operator_from_json<S>(expr["terms"][i], ball_n));
    return acc;
  }
  throw std::invalid_argument("operator json: unknown op '" + op + "'");
}

}  // namespace minkval
