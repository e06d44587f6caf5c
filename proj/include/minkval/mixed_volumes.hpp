#pragma once

// Mixed volumes V(K_1, ..., K_n) of polytopes and zonotopes in R^n, n <= 4,
// with three independent evaluation methods:
//
//   * bracket enumeration  - closed form for tuples of zonotopes,
//     V(Z_1,...,Z_n) = (2^n/n!) * sum over generator choices of |det|;
//   * peel / project / polarize - generators are peeled off by Minkowski
//     linearity, a segment slot projects the problem one dimension down,
//     and an all-polytope base case is polarized to plain volumes or to the
//     facet-normal formula when one argument is known only by its support
//     function;
//   * interpolation - volumes of Minkowski combinations on an integer grid
//     are interpolated by an exact Vandermonde solve and the mixed volume is
//     read off a coefficient, with every off-degree coefficient checked to
//     vanish.
//
// Combinatorial data (hulls, projections, scale factors) is always exact
// rational; the scalar parameter S selects the arithmetic of accumulation
// and support-function evaluation.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "minkval/bodies.hpp"

namespace minkval {

inline Rational factorial_q(int k) {
  Rational r(1);
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// Outward vector areas (unit normal times facet volume) of every facet of a
// full-rank hull, exact.  In two dimensions the facet volume is an edge
// length recovered rationally from the parallel primitive normal; in four
// dimensions the facet shadow on a coordinate hyperplane is hulled and
// rescaled by the normal component that was dropped.
inline std::vector<Vec<Rational>> facet_vector_areas(const HullData& h) {
  const int d = h.dim;
  if (h.rank != d) throw std::invalid_argument("facet_vector_areas: full-rank hull required");
  std::vector<Vec<Rational>> out;
  out.reserve(h.facets.size());
  for (const auto& f : h.facets) {
    if (d == 2) {
      Vec<Rational> e = h.verts[f.verts[1]] - h.verts[f.verts[0]];
      Rational s = dot(e, rot90(f.normal)) / norm_sq(f.normal);
      out.push_back(f.normal * abs_of(s));
    } else if (d == 3) {
      out.push_back(f.vector_area);
    } else {
      int jstar = 0;
      for (int j = 1; j < d; ++j)
        if (abs_of(f.normal.c[j]) > abs_of(f.normal.c[jstar])) jstar = j;
      std::vector<Vec<Rational>> shadow;
      shadow.reserve(f.verts.size());
      for (int vi : f.verts) {
        Vec<Rational> p(d - 1);
        int k = 0;
        for (int j = 0; j < d; ++j)
          if (j != jstar) p.c[k++] = h.verts[vi].c[j];
        shadow.push_back(p);
      }
      Rational vol3 = convex_hull(d - 1, std::move(shadow)).volume;
      out.push_back(f.normal * (vol3 / abs_of(f.normal.c[jstar])));
    }
  }
  return out;
}

// Exact volume of conv(base) + sum of segments [-s, s].  Recursion: splitting
// off the last segment adds twice the shadow volume on its orthogonal
// complement, and with an orthogonal complement basis b_1..b_{d-1} the
// euclidean correction |s| / prod |b_i| equals |det(b_1..b_{d-1}, s)| divided
// by prod |b_i|^2 -- a rational number.  Shadows are taken in the b-coordinate
// chart, so every hull along the way is a hull of exact rational points.
template <class S>
S sum_volume(int d, const std::vector<Vec<Rational>>& base, std::vector<Vec<Rational>> segs) {
  if (base.empty()) throw std::invalid_argument("sum_volume: empty base point set");
  if (d == 1) {
    Rational lo = base[0].c[0], hi = base[0].c[0];
    for (const auto& p : base) {
      lo = std::min(lo, p.c[0]);
      hi = std::max(hi, p.c[0]);
    }
    Rational len = hi - lo;
    for (const auto& s : segs) len += 2 * abs_of(s.c[0]);
    return scalar_cast<S>(len);
  }
  if (segs.empty()) return scalar_cast<S>(convex_hull(d, base).volume);

  Vec<Rational> w = segs.back();
  segs.pop_back();
  S vol = sum_volume<S>(d, base, segs);

  std::vector<Vec<Rational>> basis = orthogonal_complement_basis(w);
  std::vector<Vec<Rational>> frame = basis;
  frame.push_back(w);
  Rational denom(1);
  for (const auto& b : basis) denom *= norm_sq(b);
  Rational factor = 2 * abs_of(det_n(frame)) / denom;

  auto project = [&](const Vec<Rational>& x) {
    Vec<Rational> t(d - 1);
    for (int i = 0; i < d - 1; ++i) t.c[i] = dot(x, basis[i]);
    return t;
  };
  std::vector<Vec<Rational>> pbase;
  pbase.reserve(base.size());
  for (const auto& p : base) pbase.push_back(project(p));
  std::vector<Vec<Rational>> psegs;
  for (const auto& s : segs) {
    Vec<Rational> t = project(s);
    if (!t.is_zero()) psegs.push_back(t);
  }
  vol += scalar_cast<S>(factor) * sum_volume<S>(d - 1, pbase, std::move(psegs));
  return vol;
}

// --- bracket enumeration over zonotope generators ---

namespace detail {

template <class S>
void bracket_combos(const std::vector<std::vector<Vec<S>>>& groups,
                    const std::vector<int>& mult, size_t gi, std::vector<Vec<S>>& chosen, S& acc) {
  if (gi == groups.size()) {
    acc += bracket<S>(chosen, static_cast<int>(chosen.size()));
    return;
  }
  // strictly increasing index tuples within the group; repeats have zero det
  const auto& gens = groups[gi];
  int m = mult[gi];
  std::vector<int> idx(m);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == m) {
      bracket_combos(groups, mult, gi + 1, chosen, acc);
      return;
    }
    for (int k = start; k <= static_cast<int>(gens.size()) - (m - pos); ++k) {
      chosen.push_back(gens[k]);
      rec(pos + 1, k + 1);
      chosen.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace detail

// V(Z_1,...,Z_d) for zonotopes grouped by identity with multiplicities:
// (2^d/d!) * (prod of group factorials) * sum over strictly increasing
// generator choices per group of |det|.
template <class S>
S mixed_volume_zonotopes(int d, const std::vector<const Zonotope*>& zs,
                         const std::vector<int>& mult) {
  int total = 0;
  for (int m : mult) total += m;
  if (total != d) throw std::invalid_argument("mixed_volume_zonotopes: multiplicities must sum to dim");
  std::vector<std::vector<Vec<S>>> groups;
  for (const auto* z : zs) {
    std::vector<Vec<S>> g;
    if constexpr (scalar_traits<S>::exact) {
      for (const auto& v : z->gens()) g.push_back(v);
    } else {
      for (const auto& v : z->gens_d()) g.push_back(v);
    }
    groups.push_back(std::move(g));
  }
  S acc(0);
  std::vector<Vec<S>> chosen;
  detail::bracket_combos<S>(groups, mult, 0, chosen, acc);
  Rational scale = 1;
  for (int m : mult) scale *= factorial_q(m);
  scale *= Rational(BigInt(1) << d) / factorial_q(d);
  return scalar_cast<S>(scale) * acc;
}

template <class S>
S zonotope_volume(const Zonotope& z) {
  return mixed_volume_zonotopes<S>(z.dim(), {&z}, {z.dim()});
}

template <class S>
S body_volume(const Body<S>& b) {
  if (const auto* p = std::get_if<Polytope>(&b)) return scalar_cast<S>(p->volume());
  if (const auto* z = std::get_if<Zonotope>(&b)) return zonotope_volume<S>(*z);
  throw std::domain_error("body_volume: support-function bodies have no direct volume formula");
}

// --- peel / project / polarize evaluator ---

namespace detail {

template <class S>
struct MVArg {
  enum Kind { kPoly, kZono, kClosure } kind;
  std::vector<Vec<Rational>> pts;  // kPoly vertices or kZono generators
  std::function<S(const Vec<S>&)> h;
};

// (1/d) sum over facets of h(outward vector area): the mixed volume
// V(A,...,A,X) of d-1 copies of a polytope with a support-only body.  Bodies
// flat in one hyperplane contribute their two sides; lower rank contributes
// nothing.
template <class S>
S diagonal_with_closure(int d, std::vector<Vec<Rational>> pts,
                        const std::function<S(const Vec<S>&)>& h) {
  HullData hull = convex_hull(d, std::move(pts));
  if (hull.rank == d) {
    S acc(0);
    for (const auto& va : facet_vector_areas(hull)) acc += h(vec_cast<S>(va));
    return acc / S(d);
  }
  if (hull.rank == d - 1) {
    Vec<S> va = vec_cast<S>(hull.flat_vector_area);
    return (h(va) + h(-va)) / S(d);
  }
  return S(0);
}

template <class S>
std::vector<Vec<Rational>> vertex_sum(const std::vector<Vec<Rational>>& a,
                                      const std::vector<Vec<Rational>>& b) {
  std::vector<Vec<Rational>> out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a)
    for (const auto& v : b) out.push_back(u + v);
  return out;
}

template <class S>
S mv_polytope_base(int d, const std::vector<const std::vector<Vec<Rational>>*>& polys,
                   const std::function<S(const Vec<S>&)>* closure) {
  if (polys.empty()) throw std::logic_error("mixed volume: no stored body left to anchor the base case");
  const int k = static_cast<int>(polys.size());
  bool all_equal = true;
  for (int i = 1; i < k; ++i)
    if (*polys[i] != *polys[0]) all_equal = false;

  auto term = [&](std::vector<Vec<Rational>> pts) -> S {
    if (closure) return diagonal_with_closure<S>(d, std::move(pts), *closure);
    return scalar_cast<S>(convex_hull(d, std::move(pts)).volume);
  };

  if (all_equal) return term(*polys[0]);

  // polarization over the k polytope slots
  S acc(0);
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<Vec<Rational>> pts = {Vec<Rational>(d)};
    int bits = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) {
        pts = vertex_sum<S>(pts, *polys[i]);
        ++bits;
      }
    S t = term(std::move(pts));
    if ((k - bits) % 2) acc -= t;
    else acc += t;
  }
  return acc * scalar_cast<S>(1 / factorial_q(k));
}

template <class S>
S mv_list(int d, std::vector<MVArg<S>> args) {
  if (static_cast<int>(args.size()) != d)
    throw std::invalid_argument("mixed volume: argument count must equal dimension");
  if (d == 1) {
    const auto& a = args[0];
    switch (a.kind) {
      case MVArg<S>::kPoly: {
        Rational lo = a.pts[0].c[0], hi = lo;
        for (const auto& p : a.pts) {
          lo = std::min(lo, p.c[0]);
          hi = std::max(hi, p.c[0]);
        }
        return scalar_cast<S>(hi - lo);
      }
      case MVArg<S>::kZono: {
        Rational len(0);
        for (const auto& g : a.pts) len += 2 * abs_of(g.c[0]);
        return scalar_cast<S>(len);
      }
      default: {
        Vec<S> plus(1), minus(1);
        plus.c[0] = S(1);
        minus.c[0] = S(-1);
        return a.h(plus) + a.h(minus);
      }
    }
  }

  // fast paths: zonotope slots in dimensions 2 and 3 evaluate against any
  // remaining body by the zonotope's facet structure (edge normals, or cross
  // products of generator pairs), sidestepping the recursive projections
  {
    std::vector<size_t> zslots;
    for (size_t i = 0; i < args.size(); ++i)
      if (args[i].kind == MVArg<S>::kZono) zslots.push_back(i);

    auto support_of = [&](const MVArg<S>& a) -> std::function<S(const Vec<S>&)> {
      if (a.kind == MVArg<S>::kClosure) return a.h;
      std::vector<Vec<S>> pts;
      pts.reserve(a.pts.size());
      for (const auto& p : a.pts) pts.push_back(vec_cast<S>(p));
      if (a.kind == MVArg<S>::kPoly)
        return [pts](const Vec<S>& x) {
          S best = dot(pts[0], x);
          for (const auto& p : pts) best = std::max(best, dot(p, x));
          return best;
        };
      return [pts](const Vec<S>& x) {
        S acc(0);
        for (const auto& p : pts) acc += abs_of(dot(p, x));
        return acc;
      };
    };

    // V(Z, X) = sum over generators of the breadth of X against the rotated
    // generator (each generator yields two opposite edges of length 2|g|)
    if (d == 2 && zslots.size() >= 1) {
      size_t zi = zslots[0];
      auto h = support_of(args[zi == 0 ? 1 : 0]);
      S acc(0);
      for (const auto& g : args[zi].pts) {
        Vec<S> r = vec_cast<S>(rot90(g));
        acc += h(r) + h(-r);
      }
      return acc;
    }

    // V(Z, W, X) = (1/6) sum over generator pairs of the breadth of X against
    // 4 (g x w); coplanar generator collisions are safe because parallel
    // vector areas add linearly under the support function
    if (d == 3 && zslots.size() >= 2) {
      size_t zi = zslots[0], zj = zslots[1];
      size_t other = 0;
      for (size_t i = 0; i < args.size(); ++i)
        if (i != zi && i != zj) other = i;
      auto h = support_of(args[other]);
      S acc(0);
      for (const auto& a : args[zi].pts)
        for (const auto& b : args[zj].pts) {
          Vec<Rational> c = cross(a, b);
          if (c.is_zero()) continue;
          Vec<S> v = vec_cast<S>(c * Rational(4));
          acc += h(v) + h(-v);
        }
      return acc / S(6);
    }
  }

  // peel the first zonotope slot into its segments, projecting each onto the
  // orthogonal complement of the segment direction
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i].kind != MVArg<S>::kZono) continue;
    S total(0);
    for (const auto& g : args[i].pts) {
      std::vector<Vec<Rational>> basis = orthogonal_complement_basis(g);
      std::vector<Vec<Rational>> frame = basis;
      frame.push_back(g);
      Rational denom(1);
      for (const auto& b : basis) denom *= norm_sq(b);
      Rational factor = 2 * abs_of(det_n(frame)) / (d * denom);

      auto project = [&](const Vec<Rational>& x) {
        Vec<Rational> t(d - 1);
        for (int j = 0; j < d - 1; ++j) t.c[j] = dot(x, basis[j]);
        return t;
      };
      std::vector<MVArg<S>> sub;
      sub.reserve(args.size() - 1);
      for (size_t j = 0; j < args.size(); ++j) {
        if (j == i) continue;
        const auto& a = args[j];
        if (a.kind == MVArg<S>::kClosure) {
          std::vector<Vec<S>> bs;
          for (const auto& b : basis) bs.push_back(vec_cast<S>(b));
          auto lifted = [h = a.h, bs, d](const Vec<S>& tau) {
            Vec<S> x(d);
            for (size_t r = 0; r < bs.size(); ++r) x = x + bs[r] * tau.c[static_cast<int>(r)];
            return h(x);
          };
          sub.push_back(MVArg<S>{MVArg<S>::kClosure, {}, lifted});
        } else {
          MVArg<S> p{a.kind, {}, nullptr};
          p.pts.reserve(a.pts.size());
          for (const auto& x : a.pts) {
            Vec<Rational> t = project(x);
            if (a.kind == MVArg<S>::kZono && t.is_zero()) continue;
            p.pts.push_back(t);
          }
          if (a.kind == MVArg<S>::kPoly && p.pts.empty())
            throw std::logic_error("mixed volume: polytope slot lost its vertices");
          sub.push_back(std::move(p));
        }
      }
      total += scalar_cast<S>(factor) * mv_list<S>(d - 1, std::move(sub));
    }
    return total;
  }

  // no zonotopes left: polytopes plus at most one support-only slot
  std::vector<const std::vector<Vec<Rational>>*> polys;
  const std::function<S(const Vec<S>&)>* closure = nullptr;
  for (const auto& a : args) {
    if (a.kind == MVArg<S>::kPoly) polys.push_back(&a.pts);
    else {
      if (closure)
        throw std::invalid_argument("mixed volume: at most one support-function argument");
      closure = &a.h;
    }
  }
  return mv_polytope_base<S>(d, polys, closure);
}

template <class S>
MVArg<S> mv_arg(const Body<S>& b) {
  if (const auto* p = std::get_if<Polytope>(&b)) {
    if (p->empty()) throw std::domain_error("mixed volume: empty body");
    return MVArg<S>{MVArg<S>::kPoly, p->verts(), nullptr};
  }
  if (const auto* z = std::get_if<Zonotope>(&b)) return MVArg<S>{MVArg<S>::kZono, z->gens(), nullptr};
  const auto& sb = std::get<SupportBody<S>>(b);
  return MVArg<S>{MVArg<S>::kClosure, {}, sb.h};
}

}  // namespace detail

// --- interpolation on an integer grid ---

namespace detail {

template <class S>
S interpolated_mixed_volume(int d, const std::vector<const Polytope*>& ps,
                            const std::vector<int>& pmult, const std::vector<const Zonotope*>& zs,
                            const std::vector<int>& zmult) {
  const size_t m = ps.size() + zs.size();
  std::vector<int> mult = pmult;
  mult.insert(mult.end(), zmult.begin(), zmult.end());

  const int nodes = d + 1;
  size_t cells = 1;
  for (size_t i = 0; i < m; ++i) cells *= nodes;

  // volume of the combination sum(lambda_i * K_i) at every grid point
  std::vector<S> values(cells);
  std::vector<int> lam(m, 0);
  for (size_t cell = 0; cell < cells; ++cell) {
    size_t rest = cell;
    for (size_t i = 0; i < m; ++i) {
      lam[i] = static_cast<int>(rest % nodes);
      rest /= nodes;
    }
    std::vector<Vec<Rational>> base = {Vec<Rational>(d)};
    for (size_t i = 0; i < ps.size(); ++i) {
      if (lam[i] == 0) continue;
      std::vector<Vec<Rational>> scaled;
      for (const auto& v : ps[i]->verts()) scaled.push_back(v * Rational(lam[i]));
      base = vertex_sum<S>(base, scaled);
    }
    std::vector<Vec<Rational>> segs;
    for (size_t i = 0; i < zs.size(); ++i) {
      int l = lam[ps.size() + i];
      if (l == 0) continue;
      for (const auto& g : zs[i]->gens()) segs.push_back(g * Rational(l));
    }
    values[cell] = sum_volume<S>(d, base, std::move(segs));
  }

  // exact inverse Vandermonde along each axis turns values into coefficients
  std::vector<long> node_q(nodes);
  for (int r = 0; r < nodes; ++r) node_q[r] = r;
  Matrix<Rational> w = vandermonde_coefficient_weights(node_q);
  std::vector<S> ws(nodes * nodes);
  for (int j = 0; j < nodes; ++j)
    for (int r = 0; r < nodes; ++r) ws[j * nodes + r] = scalar_cast<S>(w[j][r]);

  std::vector<S> coeff = values;
  size_t stride = 1;
  for (size_t axis = 0; axis < m; ++axis) {
    std::vector<S> next(cells, S(0));
    for (size_t cell = 0; cell < cells; ++cell) {
      size_t lo = cell % stride;
      size_t rest = cell / stride;
      size_t j = rest % nodes;
      size_t hi = rest / nodes;
      size_t rowbase = (hi * nodes) * stride + lo;
      S acc(0);
      for (int r = 0; r < nodes; ++r)
        acc += ws[j * nodes + r] * coeff[rowbase + static_cast<size_t>(r) * stride];
      next[cell] = acc;
    }
    coeff = std::move(next);
    stride *= nodes;
  }

  // the volume polynomial is homogeneous of total degree d: everything else
  // must vanish, and the target coefficient sits at the multiplicity index
  S vmax(0);
  for (const S& v : values) vmax = std::max(vmax, abs_of(v));
  size_t target = 0;
  {
    size_t s = 1;
    for (size_t i = 0; i < m; ++i) {
      target += static_cast<size_t>(mult[i]) * s;
      s *= nodes;
    }
  }
  for (size_t cell = 0; cell < cells; ++cell) {
    int degree = 0;
    size_t rest = cell;
    for (size_t i = 0; i < m; ++i) {
      degree += static_cast<int>(rest % nodes);
      rest /= nodes;
    }
    if (degree == d) continue;
    if constexpr (scalar_traits<S>::exact) {
      if (coeff[cell] != 0)
        throw std::logic_error("interpolated mixed volume: off-degree coefficient is nonzero");
    } else {
      if (abs_of(coeff[cell]) > 1e-6 * (1 + vmax))
        throw std::logic_error("interpolated mixed volume: off-degree coefficient is nonzero");
    }
  }

  Rational norm(1);
  for (size_t i = 0; i < m; ++i) norm *= factorial_q(mult[i]);
  norm /= factorial_q(d);
  return coeff[target] * scalar_cast<S>(norm);
}

}  // namespace detail

enum class MVMethod { Auto, Bracket, Peel, Interpolate };

// Mixed volume of exactly dim bodies.  Auto picks bracket enumeration for
// all-zonotope tuples and the peel evaluator otherwise; Interpolate is the
// independent cross-check method and requires stored bodies (no closures).
template <class S>
S mixed_volume(const std::vector<Body<S>>& args, MVMethod method = MVMethod::Auto) {
  if (args.empty()) throw std::invalid_argument("mixed_volume: empty argument list");
  const int d = body_dim(args[0]);
  if (static_cast<int>(args.size()) != d)
    throw std::invalid_argument("mixed_volume: need exactly dim arguments");
  for (const auto& a : args)
    if (body_dim(a) != d) throw std::invalid_argument("mixed_volume: dimension mismatch");

  int n_zono = 0, n_closure = 0;
  for (const auto& a : args) {
    if (std::holds_alternative<Zonotope>(a)) ++n_zono;
    if (std::holds_alternative<SupportBody<S>>(a)) ++n_closure;
  }
  if (method == MVMethod::Auto) method = (n_zono == d) ? MVMethod::Bracket : MVMethod::Peel;

  if (method == MVMethod::Bracket) {
    if (n_zono != d)
      throw std::invalid_argument("mixed_volume: bracket method needs all-zonotope arguments");
    std::vector<const Zonotope*> zs;
    std::vector<int> mult;
    for (const auto& a : args) {
      const Zonotope& z = std::get<Zonotope>(a);
      bool merged = false;
      for (size_t i = 0; i < zs.size(); ++i)
        if (zs[i]->gens() == z.gens()) {
          ++mult[i];
          merged = true;
          break;
        }
      if (!merged) {
        zs.push_back(&z);
        mult.push_back(1);
      }
    }
    return mixed_volume_zonotopes<S>(d, zs, mult);
  }

  if (method == MVMethod::Interpolate) {
    if (n_closure > 0)
      throw std::invalid_argument("mixed_volume: interpolation needs stored bodies");
    std::vector<const Polytope*> ps;
    std::vector<int> pmult;
    std::vector<const Zonotope*> zs;
    std::vector<int> zmult;
    for (const auto& a : args) {
      if (const auto* p = std::get_if<Polytope>(&a)) {
        bool merged = false;
        for (size_t i = 0; i < ps.size(); ++i)
          if (ps[i]->verts() == p->verts()) {
            ++pmult[i];
            merged = true;
            break;
          }
        if (!merged) {
          ps.push_back(p);
          pmult.push_back(1);
        }
      } else {
        const Zonotope& z = std::get<Zonotope>(a);
        bool merged = false;
        for (size_t i = 0; i < zs.size(); ++i)
          if (zs[i]->gens() == z.gens() && zs[i]->center() == z.center()) {
            ++zmult[i];
            merged = true;
            break;
          }
        if (!merged) {
          zs.push_back(&z);
          zmult.push_back(1);
        }
      }
    }
    return detail::interpolated_mixed_volume<S>(d, ps, pmult, zs, zmult);
  }

  std::vector<detail::MVArg<S>> list;
  list.reserve(args.size());
  for (const auto& a : args) list.push_back(detail::mv_arg<S>(a));
  return detail::mv_list<S>(d, std::move(list));
}

// --- Steiner polynomial and quermassintegrals relative to the zonotope ball ---

// W_i(K) = V(K, ..., K, B, ..., B) with i copies of the ball zonotope.
template <class S>
S quermassintegral(int i, const Body<S>& K, int ball_n) {
  const int d = body_dim(K);
  if (i < 0 || i > d) throw std::invalid_argument("quermassintegral: index out of 0..dim");
  if (i == 0) return body_volume<S>(K);
  const Zonotope& B = ball_zonotope(d, ball_n);
  if (i == d) return zonotope_volume<S>(B);
  std::vector<Body<S>> args;
  for (int k = 0; k < d - i; ++k) args.push_back(K);
  for (int k = 0; k < i; ++k) args.push_back(Body<S>(B));
  return mixed_volume<S>(args);
}

// Coefficients a_0..a_n of vol(K + r B) as a polynomial in r, recovered from
// exact volumes at the integer nodes r = 0..n; a_i = binom(n,i) W_i(K).
template <class S>
std::vector<S> steiner_volume_polynomial(const Body<S>& K, int ball_n) {
  const int d = body_dim(K);
  const Zonotope& B = ball_zonotope(d, ball_n);
  std::vector<S> values;
  for (int r = 0; r <= d; ++r) {
    std::vector<Vec<Rational>> segs;
    std::vector<Vec<Rational>> base;
    if (const auto* p = std::get_if<Polytope>(&K)) {
      base = p->verts();
    } else if (const auto* z = std::get_if<Zonotope>(&K)) {
      base = {z->center()};
      segs = z->gens();
    } else {
      throw std::domain_error("steiner_volume_polynomial: stored body required");
    }
    for (const auto& g : B.gens()) segs.push_back(g * Rational(r));
    std::vector<Vec<Rational>> use;
    for (const auto& s : segs)
      if (!s.is_zero()) use.push_back(s);
    values.push_back(sum_volume<S>(d, base, std::move(use)));
  }
  std::vector<long> nodes(d + 1);
  for (int r = 0; r <= d; ++r) nodes[r] = r;
  Matrix<Rational> w = vandermonde_coefficient_weights(nodes);
  std::vector<S> coeffs(d + 1, S(0));
  for (int j = 0; j <= d; ++j)
    for (int r = 0; r <= d; ++r) coeffs[j] += scalar_cast<S>(w[j][r]) * values[r];
  return coeffs;
}

// V_i(K) = binom(n, i) W_{n-i}(K) / kappa_{n-i}.  The normalizer is rational
// only for i in {n-1, n}; other indices require the float backend.
template <class S>
S intrinsic_volume(int i, const Body<S>& K, int ball_n) {
  const int d = body_dim(K);
  if (i < 0 || i > d) throw std::invalid_argument("intrinsic_volume: index out of 0..dim");
  Rational binom(1);
  for (int k = 0; k < i; ++k) binom = binom * (d - k) / (k + 1);
  S w = quermassintegral<S>(d - i, K, ball_n);
  if constexpr (scalar_traits<S>::exact) {
    if (d - i == 0) return scalar_cast<S>(binom) * w;
    if (d - i == 1) return scalar_cast<S>(binom / 2) * w;
    throw std::domain_error(
        "intrinsic_volume: irrational ball-volume normalizer requires float arithmetic");
  } else {
    return scalar_cast<S>(binom) * w / ball_volume_d(d - i);
  }
}

// Homogeneous components f(lambda K) = sum_i lambda^i f_i(K) of a functional
// polynomial in the scaling, from exact evaluations at lambda = 1..deg+1.
template <class S, class F>
std::vector<S> homogeneous_components(F&& f, const Body<S>& K, int max_degree) {
  std::vector<long> nodes(max_degree + 1);
  std::vector<S> values(max_degree + 1);
  for (int r = 0; r <= max_degree; ++r) {
    nodes[r] = r + 1;
    values[r] = f(scale(K, Rational(r + 1)));
  }
  Matrix<Rational> w = vandermonde_coefficient_weights(nodes);
  std::vector<S> comps(max_degree + 1, S(0));
  for (int j = 0; j <= max_degree; ++j)
    for (int r = 0; r <= max_degree; ++r) comps[j] += scalar_cast<S>(w[j][r]) * values[r];
  return comps;
}

}  // namespace minkval
