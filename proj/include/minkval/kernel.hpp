#pragma once

// Exact convex-geometry kernel: convex hulls in dimension 2..4 with merged
// facet data, polytope volumes, halfspace clipping primitives, Gram brackets,
// and deterministic quasi-uniform direction sets with exactly-unit rational
// coordinates.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "minkval/rational.hpp"
#include "minkval/vec.hpp"

namespace minkval {

// A merged (maximal) facet of a full-dimensional hull.
struct HullFacet {
  Vec<Rational> normal;       // outward, primitive integer coordinates
  Rational offset{0};         // x . normal <= offset on the hull
  std::vector<int> verts;     // indices into HullData::verts, sorted
  Vec<Rational> vector_area;  // dim==3: outward unit normal * facet area
};

struct HullData {
  int dim = 0;
  int rank = -1;  // affine rank: -1 empty, 0 point, ..., dim full
  std::vector<Vec<Rational>> verts;        // minimal extreme set, lex order
  std::vector<HullFacet> facets;           // rank == dim only
  std::vector<std::array<int, 2>> edges;   // dim==3: true edges; dim==2: ring edges
  std::vector<int> ring;                   // dim==2: counter-clockwise order
  Rational volume{0};                      // 0 unless rank == dim

  // rank == dim-1 bodies keep their supporting hyperplane and the
  // (dim-1)-volume encoded as a vector along the plane normal.
  Vec<Rational> flat_normal;
  Rational flat_offset{0};
  Vec<Rational> flat_vector_area;
};

namespace detail {

// Scale a rational vector to primitive integer coordinates, preserving
// direction.  Returns the integer coordinates as rationals.
inline Vec<Rational> primitive_vector(const Vec<Rational>& v) {
  BigInt l(1);
  for (int i = 0; i < v.n; ++i) l = lcm(l, denominator(v.c[i]));
  std::vector<BigInt> w(v.n);
  BigInt g(0);
  for (int i = 0; i < v.n; ++i) {
    w[i] = numerator(v.c[i] * Rational(l));
    g = gcd(g, w[i]);
  }
  Vec<Rational> r(v.n);
  if (g == 0) return r;
  for (int i = 0; i < v.n; ++i) r.c[i] = Rational(w[i] / g);
  return r;
}

inline std::vector<BigInt> normal_key(const Vec<Rational>& primitive) {
  std::vector<BigInt> k(primitive.n);
  for (int i = 0; i < primitive.n; ++i) k[i] = numerator(primitive.c[i]);
  return k;
}

struct Tri {
  std::array<int, 4> v{};  // dim vertex indices into the point array
  Vec<Rational> normal;    // outward
  Rational offset{0};
  bool alive = true;
};

inline std::int64_t ridge_key(std::array<int, 3> r, int cnt) {
  std::sort(r.begin(), r.begin() + cnt);
  std::int64_t k = 0;
  for (int i = 0; i < cnt; ++i) k = (k << 20) | static_cast<std::int64_t>(r[i] + 1);
  return k;
}

// Incremental beneath-beyond hull for full-rank input in dimension 3 or 4.
// Points must be deduplicated and lexicographically sorted; every inserted
// point is then extreme among the prefix, so the strictly-visible facet set is
// nonempty and no degenerate facet can arise.
inline std::vector<Tri> incremental_hull(const std::vector<Vec<Rational>>& pts, int dim) {
  const int npts = static_cast<int>(pts.size());
  // Greedy affinely independent seed simplex.
  std::vector<int> seed = {0};
  Matrix<Rational> diffs;
  for (int i = 1; i < npts && static_cast<int>(seed.size()) < dim + 1; ++i) {
    Matrix<Rational> trial = diffs;
    std::vector<Rational> row(dim);
    for (int c = 0; c < dim; ++c) row[c] = pts[i].c[c] - pts[0].c[c];
    trial.push_back(row);
    if (matrix_rank(trial) == static_cast<int>(trial.size())) {
      diffs = trial;
      seed.push_back(i);
    }
  }
  if (static_cast<int>(seed.size()) != dim + 1)
    throw std::logic_error("incremental_hull: input not full-dimensional");

  Vec<Rational> inner(dim);
  for (int idx : seed)
    for (int c = 0; c < dim; ++c) inner.c[c] += pts[idx].c[c];
  for (int c = 0; c < dim; ++c) inner.c[c] /= (dim + 1);

  std::vector<Tri> tris;
  std::map<std::int64_t, std::vector<int>> ridge_map;

  auto add_facet = [&](std::array<int, 4> vs) {
    std::vector<Vec<Rational>> d;
    for (int k = 1; k < dim; ++k) d.push_back(pts[vs[k]] - pts[vs[0]]);
    Vec<Rational> n = generalized_cross(d, dim);
    Rational off = dot(n, pts[vs[0]]);
    Rational side = dot(n, inner) - off;
    if (side == 0) throw std::logic_error("incremental_hull: degenerate facet");
    if (side > 0) {
      // Flip outward; swap two vertices so the stored orientation matches.
      n = -n;
      off = -off;
      std::swap(vs[dim - 2], vs[dim - 1]);
    }
    Tri t;
    t.v = vs;
    t.normal = n;
    t.offset = off;
    tris.push_back(t);
    int id = static_cast<int>(tris.size()) - 1;
    for (int drop = 0; drop < dim; ++drop) {
      std::array<int, 3> r{};
      int c = 0;
      for (int k = 0; k < dim; ++k)
        if (k != drop) r[c++] = vs[k];
      ridge_map[ridge_key(r, dim - 1)].push_back(id);
    }
  };

  auto drop_facet = [&](int id) {
    tris[id].alive = false;
    for (int drop = 0; drop < dim; ++drop) {
      std::array<int, 3> r{};
      int c = 0;
      for (int k = 0; k < dim; ++k)
        if (k != drop) r[c++] = tris[id].v[k];
      auto& lst = ridge_map[ridge_key(r, dim - 1)];
      lst.erase(std::remove(lst.begin(), lst.end(), id), lst.end());
    }
  };

  for (int f = 0; f < dim + 1; ++f) {
    std::array<int, 4> vs{};
    int c = 0;
    for (int k = 0; k < dim + 1; ++k)
      if (k != f) vs[c++] = seed[k];
    add_facet(vs);
  }

  std::vector<bool> in_seed(npts, false);
  for (int idx : seed) in_seed[idx] = true;

  for (int p = 0; p < npts; ++p) {
    if (in_seed[p]) continue;
    std::vector<int> visible;
    for (int id = 0; id < static_cast<int>(tris.size()); ++id)
      if (tris[id].alive && dot(tris[id].normal, pts[p]) > tris[id].offset) visible.push_back(id);
    if (visible.empty()) continue;

    // Horizon = ridges between a visible facet and a hidden one.
    std::vector<std::array<int, 3>> horizon;
    for (int id : visible) {
      for (int drop = 0; drop < dim; ++drop) {
        std::array<int, 3> r{};
        int c = 0;
        for (int k = 0; k < dim; ++k)
          if (k != drop) r[c++] = tris[id].v[k];
        const auto& lst = ridge_map[ridge_key(r, dim - 1)];
        bool boundary = true;
        for (int other : lst)
          if (other != id && tris[other].alive &&
              dot(tris[other].normal, pts[p]) > tris[other].offset)
            boundary = false;
        if (boundary) horizon.push_back(r);
      }
    }
    for (int id : visible) drop_facet(id);
    for (const auto& r : horizon) {
      std::array<int, 4> vs{};
      for (int k = 0; k < dim - 1; ++k) vs[k] = r[k];
      vs[dim - 1] = p;
      add_facet(vs);
    }
  }

  std::vector<Tri> out;
  for (auto& t : tris)
    if (t.alive) out.push_back(t);
  return out;
}

// 2D monotone chain on deduplicated lex-sorted points; returns the
// counter-clockwise ring of extreme points (collinear midpoints dropped).
inline std::vector<int> chain_hull_2d(const std::vector<Vec<Rational>>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> lower, upper;
  for (int i = 0; i < n; ++i) {
    while (lower.size() >= 2) {
      const auto& a = pts[lower[lower.size() - 2]];
      const auto& b = pts[lower.back()];
      if (det2(b - a, pts[i] - a) <= 0)
        lower.pop_back();
      else
        break;
    }
    lower.push_back(i);
  }
  for (int i = n - 1; i >= 0; --i) {
    while (upper.size() >= 2) {
      const auto& a = pts[upper[upper.size() - 2]];
      const auto& b = pts[upper.back()];
      if (det2(b - a, pts[i] - a) <= 0)
        upper.pop_back();
      else
        break;
    }
    upper.push_back(i);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;  // counter-clockwise
}

}  // namespace detail

// Convex hull with minimal vertex set, exact arithmetic, dimensions 2..4.
// Lower-rank inputs are reduced to full rank by projecting onto pivot
// coordinates (an affine bijection on the affine hull, so extremeness is
// preserved).
inline HullData convex_hull(int dim, std::vector<Vec<Rational>> pts);

namespace detail {

inline HullData hull_full_rank_2d(std::vector<Vec<Rational>>& pts) {
  HullData h;
  h.dim = 2;
  h.rank = 2;
  std::vector<int> ring = chain_hull_2d(pts);
  const int m = static_cast<int>(ring.size());
  std::vector<Vec<Rational>> vs(m);
  for (int i = 0; i < m; ++i) vs[i] = pts[ring[i]];
  // Reindex so verts are lex-sorted while the ring stays counter-clockwise.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(vs[a], vs[b]); });
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;
  h.verts.resize(m);
  for (int i = 0; i < m; ++i) h.verts[pos[i]] = vs[i];
  h.ring.resize(m);
  for (int i = 0; i < m; ++i) h.ring[i] = pos[i];

  Rational twice_area(0);
  for (int i = 0; i < m; ++i) {
    const Vec<Rational>& a = h.verts[h.ring[i]];
    const Vec<Rational>& b = h.verts[h.ring[(i + 1) % m]];
    twice_area += det2(a, b);
    h.edges.push_back({h.ring[i], h.ring[(i + 1) % m]});
    HullFacet f;
    f.normal = primitive_vector(rot90(a - b));  // outward for a ccw ring
    f.offset = dot(f.normal, a);
    f.verts = {std::min(h.ring[i], h.ring[(i + 1) % m]), std::max(h.ring[i], h.ring[(i + 1) % m])};
    h.facets.push_back(f);
  }
  h.volume = twice_area / 2;
  return h;
}

inline HullData hull_full_rank(std::vector<Vec<Rational>>& pts, int dim) {
  if (dim == 2) return hull_full_rank_2d(pts);
  HullData h;
  h.dim = dim;
  h.rank = dim;
  std::vector<Tri> tris = incremental_hull(pts, dim);

  // Exact volume from the outward-oriented boundary triangulation.  With
  // facet vertices stored so that det(edges..., outward normal) > 0, the
  // apex determinant det(v_0 - a, ..., v_{dim-1} - a) carries the fixed sign
  // (-1)^(dim-1) for an apex beneath the facet.
  Rational vol(0);
  for (const Tri& t : tris) {
    std::vector<Vec<Rational>> d;
    for (int k = 0; k < dim; ++k) d.push_back(pts[t.v[k]] - pts[0]);
    vol += det_n(d);
  }
  Rational fact(1);
  for (int k = 2; k <= dim; ++k) fact *= k;
  vol /= fact;
  if (dim % 2 == 0) vol = -vol;
  if (vol < 0) throw std::logic_error("hull volume negative: orientation bug");
  h.volume = vol;

  // Merge coplanar triangles by primitive outward normal.
  std::map<std::vector<BigInt>, std::vector<int>> classes;
  std::vector<Vec<Rational>> prim(tris.size());
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
    prim[i] = primitive_vector(tris[i].normal);
    classes[normal_key(prim[i])].push_back(i);
  }

  // A vertex of the hull lies on >= dim facet hyperplanes of full normal rank;
  // triangulation points interior to a face or an edge fail this test.
  std::map<int, std::vector<int>> vert_classes;  // point index -> class ids
  int class_id = 0;
  std::vector<const std::vector<int>*> class_tris;
  std::vector<Vec<Rational>> class_normal;
  for (auto& [key, ids] : classes) {
    for (int id : ids)
      for (int k = 0; k < dim; ++k) vert_classes[tris[id].v[k]].push_back(class_id);
    class_tris.push_back(&ids);
    class_normal.push_back(prim[ids[0]]);
    ++class_id;
  }
  std::vector<int> keep;
  for (auto& [pt, cls] : vert_classes) {
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    if (static_cast<int>(cls.size()) < dim) continue;
    Matrix<Rational> m;
    for (int c : cls) {
      std::vector<Rational> row(dim);
      for (int j = 0; j < dim; ++j) row[j] = class_normal[c].c[j];
      m.push_back(row);
    }
    if (matrix_rank(m) == dim) keep.push_back(pt);
  }
  std::sort(keep.begin(), keep.end(),
            [&](int a, int b) { return lex_less(pts[a], pts[b]); });
  std::vector<int> remap(pts.size(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    remap[keep[i]] = i;
    h.verts.push_back(pts[keep[i]]);
  }

  for (int c = 0; c < class_id; ++c) {
    HullFacet f;
    f.normal = class_normal[c];
    f.offset = dot(f.normal, pts[tris[(*class_tris[c])[0]].v[0]]);
    std::vector<int> vset;
    Vec<Rational> va(dim);
    for (int id : *class_tris[c]) {
      const Tri& t = tris[id];
      for (int k = 0; k < dim; ++k)
        if (remap[t.v[k]] >= 0) vset.push_back(remap[t.v[k]]);
      if (dim == 3) {
        Vec<Rational> cr = cross(pts[t.v[1]] - pts[t.v[0]], pts[t.v[2]] - pts[t.v[0]]);
        va = va + cr * Rational(1, 2);
      }
    }
    std::sort(vset.begin(), vset.end());
    vset.erase(std::unique(vset.begin(), vset.end()), vset.end());
    f.verts = vset;
    if (dim == 3) f.vector_area = va;
    h.facets.push_back(f);
  }

  if (dim == 3) {
    // True edges: pairs of final vertices shared by two distinct facets.
    std::vector<std::array<int, 2>> edges;
    const int nf = static_cast<int>(h.facets.size());
    for (int a = 0; a < nf; ++a)
      for (int b = a + 1; b < nf; ++b) {
        std::vector<int> shared;
        std::set_intersection(h.facets[a].verts.begin(), h.facets[a].verts.end(),
                              h.facets[b].verts.begin(), h.facets[b].verts.end(),
                              std::back_inserter(shared));
        if (shared.size() == 2) edges.push_back({shared[0], shared[1]});
      }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    h.edges = edges;
  }
  return h;
}

}  // namespace detail

inline HullData convex_hull(int dim, std::vector<Vec<Rational>> pts) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("convex_hull: dimension must be 1..4");
  for (const auto& p : pts)
    if (p.n != dim) throw std::invalid_argument("convex_hull: point dimension mismatch");
  std::sort(pts.begin(), pts.end(), lex_less<Rational>);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  HullData h;
  h.dim = dim;
  if (pts.empty()) {
    h.rank = -1;
    return h;
  }
  if (pts.size() == 1) {
    h.rank = 0;
    h.verts = pts;
    return h;
  }

  Matrix<Rational> diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> row(dim);
    for (int c = 0; c < dim; ++c) row[c] = pts[i].c[c] - pts[0].c[c];
    diffs.push_back(row);
  }
  std::vector<int> pivots;
  int rank = matrix_rank(diffs, &pivots);
  h.rank = rank;

  if (rank == dim) {
    if (dim == 1) {
      h.verts = {pts.front(), pts.back()};
      h.volume = pts.back().c[0] - pts.front().c[0];
      return h;
    }
    return detail::hull_full_rank(pts, dim);
  }

  // Rank-deficient: work in the pivot coordinates.
  if (rank == 1 && pivots.size() == 1) {
    int j = pivots[0];
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
      if (pts[i].c[j] < pts[lo].c[j]) lo = i;
      if (pts[i].c[j] > pts[hi].c[j]) hi = i;
    }
    h.verts = {pts[lo], pts[hi]};
    if (lex_less(h.verts[1], h.verts[0])) std::swap(h.verts[0], h.verts[1]);
  } else {
    std::vector<Vec<Rational>> proj(pts.size(), Vec<Rational>(rank));
    for (size_t i = 0; i < pts.size(); ++i)
      for (int k = 0; k < rank; ++k) proj[i].c[k] = pts[i].c[pivots[k]];
    HullData sub = convex_hull(rank, proj);
    std::map<std::vector<Rational>, int, bool (*)(const std::vector<Rational>&, const std::vector<Rational>&)>
        lookup([](const std::vector<Rational>& a, const std::vector<Rational>& b) {
          return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
    for (size_t i = 0; i < pts.size(); ++i) {
      std::vector<Rational> key(proj[i].c.begin(), proj[i].c.begin() + rank);
      lookup.emplace(key, static_cast<int>(i));
    }
    for (const auto& v : sub.verts) {
      std::vector<Rational> key(v.c.begin(), v.c.begin() + rank);
      h.verts.push_back(pts[lookup.at(key)]);
    }
    std::sort(h.verts.begin(), h.verts.end(), lex_less<Rational>);
  }

  if (rank == dim - 1) {
    // Supporting hyperplane normal: orthogonal to rank independent diffs.
    std::vector<Vec<Rational>> ind;
    Matrix<Rational> acc;
    for (size_t i = 1; i < pts.size() && static_cast<int>(ind.size()) < rank; ++i) {
      Matrix<Rational> trial = acc;
      std::vector<Rational> row(dim);
      for (int c = 0; c < dim; ++c) row[c] = pts[i].c[c] - pts[0].c[c];
      trial.push_back(row);
      if (matrix_rank(trial) == static_cast<int>(trial.size())) {
        acc = trial;
        ind.push_back(pts[i] - pts[0]);
      }
    }
    Vec<Rational> n = detail::primitive_vector(generalized_cross(ind, dim));
    for (int j = 0; j < dim; ++j) {
      if (n.c[j] == 0) continue;
      if (n.c[j] < 0) n = -n;
      break;
    }
    h.flat_normal = n;
    h.flat_offset = dot(n, pts[0]);
    // (dim-1)-volume via the coordinate projection dropping the largest
    // normal component j*: vol = vol_proj * |n| / |n_j*|, so the vector area
    // vol * n/|n| = n * vol_proj / |n_j*| stays rational.
    int jstar = 0;
    for (int j = 1; j < dim; ++j)
      if (abs_of(n.c[j]) > abs_of(n.c[jstar])) jstar = j;
    std::vector<Vec<Rational>> dropped(pts.size(), Vec<Rational>(dim - 1));
    for (size_t i = 0; i < pts.size(); ++i) {
      int t = 0;
      for (int j = 0; j < dim; ++j)
        if (j != jstar) dropped[i].c[t++] = pts[i].c[j];
    }
    HullData sub = convex_hull(dim - 1, dropped);
    h.flat_vector_area = n * (sub.volume / abs_of(n.c[jstar]));
  }
  return h;
}

// Exact volume of the convex hull of a point set (0 for lower-rank input).
inline Rational polytope_volume(int dim, const std::vector<Vec<Rational>>& pts) {
  return convex_hull(dim, pts).volume;
}

// --- Halfspace and clipping primitives ---

struct Halfspace {
  Vec<Rational> normal;  // constraint: x . normal <= offset
  Rational offset{0};
  Halfspace complement() const { return Halfspace{-normal, -offset}; }
};

// Candidate vertex set of P `intersect` {x . a <= b}: kept vertices plus the
// crossing points of every in/out vertex pair.  Segments between such pairs
// lie in P, so their crossings lie in the clipped body; hulling the candidates
// reproduces it exactly because the boundary polygon of the cut is spanned by
// edge crossings, which are among the pair crossings.
inline std::vector<Vec<Rational>> clip_candidates(const std::vector<Vec<Rational>>& verts,
                                                  const Halfspace& hs) {
  std::vector<Vec<Rational>> inside, outside, out;
  for (const auto& v : verts) {
    if (dot(hs.normal, v) <= hs.offset)
      inside.push_back(v);
    else
      outside.push_back(v);
  }
  out = inside;
  for (const auto& a : inside) {
    Rational da = hs.offset - dot(hs.normal, a);  // >= 0
    for (const auto& b : outside) {
      Rational db = dot(hs.normal, b) - hs.offset;  // > 0
      Rational t = da / (da + db);
      out.push_back(a + (b - a) * t);
    }
  }
  return out;
}

// --- Brackets ---

// Absolute determinant for n vectors in dimension n, and sqrt of the Gram
// determinant for fewer vectors.  With rational scalars the square root is
// exact whenever the Gram determinant is a perfect square (in particular the
// k == n case is computed as |det| directly); otherwise it carries a single
// deterministic rounding (see rational_sqrt).
template <class S>
inline S bracket(const std::vector<Vec<S>>& vs, int dim) {
  const int k = static_cast<int>(vs.size());
  if (k == 0) return S(1);
  if (k == dim) return abs_of(det_n(vs));
  S g = gram_det(vs);
  if (g < 0) g = S(0);  // exact zero in rational mode; clamp float noise
  return sqrt_of<S>(g);
}

// --- Orthogonal complement bases ---

// Pairwise-orthogonal basis of the orthogonal complement of v (dim-1 vectors),
// by Gram-Schmidt over the coordinate axes without normalization.  With the
// orthogonality of the output, |det(b_1,...,b_{dim-1}, v)| equals
// |b_1|...|b_{dim-1}||v|, which keeps projected-volume corrections rational.
template <class S>
inline std::vector<Vec<S>> orthogonal_complement_basis(const Vec<S>& v) {
  const int dim = v.n;
  std::vector<Vec<S>> basis = {v};
  std::vector<Vec<S>> out;
  for (int axis = 0; axis < dim && static_cast<int>(out.size()) < dim - 1; ++axis) {
    Vec<S> e(dim);
    e.c[axis] = S(1);
    for (const auto& b : basis) {
      S nb = norm_sq(b);
      if (nb == 0) continue;
      e = e - b * (dot(e, b) / nb);
    }
    if (e.is_zero()) continue;
    basis.push_back(e);
    out.push_back(e);
  }
  if (static_cast<int>(out.size()) != dim - 1)
    throw std::logic_error("orthogonal_complement_basis: degenerate input");
  return out;
}

// --- Direction sets ---

// Deterministic quasi-uniform antipodally symmetric direction sets with
// exactly-unit rational coordinates:
//   n = 2: equally spaced angles through the rational tan-half-angle map,
//   n = 3: Fibonacci hemisphere points through rational stereographic rounding,
//   n = 4: additive-recurrence hemisphere points, same rounding.
// Coordinates are exact unit vectors, so downstream identities that quantify
// over the direction set hold exactly in rational mode.
inline std::vector<Vec<Rational>> direction_set(int n, int count) {
  if (n < 2 || n > kMaxDim) throw std::invalid_argument("direction_set: dimension must be 2..4");
  if (count < 2 * n || count % 2 != 0)
    throw std::invalid_argument("direction_set: count must be even and >= 2n");
  const int half = count / 2;
  std::vector<Vec<Rational>> dirs;

  if (n == 2) {
    // u(t) = ((1-t^2)/(1+t^2), 2t/(1+t^2)) with t ~ tan(theta/2), theta = k*pi/half.
    int bits = std::max<int>(8, static_cast<int>(std::ceil(std::log2(8.0 * count * count))));
    bits = std::min(bits, 40);
    const std::int64_t den = std::int64_t(1) << bits;
    for (int k = 0; k < half; ++k) {
      double theta = M_PI * k / half;
      Rational t = rational_round(std::tan(theta / 2), den);
      Rational s = 1 + t * t;
      dirs.push_back(Vec<Rational>{(1 - t * t) / s, 2 * t / s});
    }
  } else {
    // Hemisphere point in double -> stereographic chart (a, b, ...) from the
    // antipode -> round the chart coordinates -> map back exactly:
    //   u = (2a, 2b, [2c,] 1 - |w|^2) / (1 + |w|^2), an exact unit vector.
    int bits = std::max<int>(8, static_cast<int>(std::ceil(std::log2(32.0 * count))));
    bits = std::min(bits, 40);
    const std::int64_t den = std::int64_t(1) << bits;
    const double golden = (std::sqrt(5.0) - 1) / 2;
    // Additive recurrence constants for n = 4 (plastic-number family).
    const double p1 = 0.8191725133961644, p2 = 0.6710436067037892;
    for (int k = 0; k < half; ++k) {
      double x, y, z, w = 0;
      if (n == 3) {
        z = (k + 0.5) / half;  // open upper hemisphere
        double r = std::sqrt(std::max(0.0, 1 - z * z));
        double phi = 2 * M_PI * std::fmod(k * golden, 1.0);
        x = r * std::cos(phi);
        y = r * std::sin(phi);
      } else {
        w = (k + 0.5) / half;
        double r = std::sqrt(std::max(0.0, 1 - w * w));
        double phi = 2 * M_PI * std::fmod(k * p1, 1.0);
        double psi = std::acos(1 - 2 * std::fmod(k * p2 + 0.5 * golden, 1.0));
        x = r * std::sin(psi) * std::cos(phi);
        y = r * std::sin(psi) * std::sin(phi);
        z = r * std::cos(psi);
      }
      const double last = (n == 3) ? z : w;
      std::vector<double> chart = (n == 3) ? std::vector<double>{x / (1 + last), y / (1 + last)}
                                           : std::vector<double>{x / (1 + last), y / (1 + last),
                                                                 z / (1 + last)};
      std::vector<Rational> q;
      Rational norm2(0);
      for (double ci : chart) {
        Rational qi = rational_round(ci, den);
        q.push_back(qi);
        norm2 += qi * qi;
      }
      Rational denom = 1 + norm2;
      Vec<Rational> u(n);
      for (int j = 0; j < n - 1; ++j) u.c[j] = 2 * q[j] / denom;
      u.c[n - 1] = (1 - norm2) / denom;
      dirs.push_back(u);
    }
  }

  std::vector<Vec<Rational>> all;
  for (const auto& u : dirs) {
    all.push_back(u);
    all.push_back(-u);
  }
  std::sort(all.begin(), all.end(), lex_less<Rational>);
  for (size_t i = 1; i < all.size(); ++i)
    if (all[i] == all[i - 1])
      throw std::logic_error("direction_set: duplicate direction after rounding");
  return all;
}

// Canonical representatives of the antipodal classes (lexicographically
// positive member of each {u, -u} pair).
inline std::vector<Vec<Rational>> antipodal_representatives(const std::vector<Vec<Rational>>& dirs) {
  std::vector<Vec<Rational>> reps;
  for (const auto& u : dirs)
    if (lex_less(-u, u)) reps.push_back(u);
  return reps;
}

// --- Orthonormal frames ---

struct Frame {
  int dim = 0;
  std::vector<Vec<Rational>> basis;  // orthonormal, exact

  bool orthonormal() const {
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = i; j < basis.size(); ++j) {
        Rational d = dot(basis[i], basis[j]);
        if (i == j ? d != 1 : d != 0) return false;
      }
    return true;
  }
};

inline Frame make_frame(int dim, std::vector<Vec<Rational>> basis) {
  Frame f{dim, std::move(basis)};
  for (const auto& b : f.basis)
    if (b.n != dim) throw std::invalid_argument("make_frame: vector dimension mismatch");
  if (!f.orthonormal()) throw std::invalid_argument("make_frame: basis not orthonormal");
  return f;
}

inline Frame axis_frame(int dim, const std::vector<int>& axes) {
  std::vector<Vec<Rational>> b;
  for (int a : axes) {
    Vec<Rational> e(dim);
    e.c[a] = 1;
    b.push_back(e);
  }
  return make_frame(dim, std::move(b));
}

}  // namespace minkval
