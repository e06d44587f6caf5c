#pragma once

// Test-side oracles, deliberately built on different algorithms than the
// library paths they cross-check:
//   - exact simplex-based convex-combination membership (linear programming),
//   - pyramid-decomposition volume from the origin with coordinate-projected
//     facet areas (vs. the library's signed boundary triangulation),
//   - misc. exact helpers for polygon areas.

#include <vector>

#include "minkval/kernel.hpp"
#include "minkval/rational.hpp"
#include "minkval/vec.hpp"

namespace testing_oracles {

using minkval::Matrix;
using minkval::Rational;
using minkval::Vec;

// Exact phase-1 simplex (Bland's rule): is there lambda >= 0 with
// A lambda = b?  Used for convex-combination membership queries.
inline bool lp_feasible(Matrix<Rational> a, std::vector<Rational> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int r = 0; r < rows; ++r) {
    if (b[r] < 0) {
      b[r] = -b[r];
      for (int c = 0; c < cols; ++c) a[r][c] = -a[r][c];
    }
  }
  // Tableau with artificial variables cols..cols+rows-1 in the basis.
  const int total = cols + rows;
  Matrix<Rational> t(rows, std::vector<Rational>(total + 1, Rational(0)));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) t[r][c] = a[r][c];
    t[r][cols + r] = 1;
    t[r][total] = b[r];
  }
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = cols + r;
  // Objective: minimize sum of artificials -> reduced costs.
  std::vector<Rational> cost(total + 1, Rational(0));
  for (int c = 0; c <= total; ++c) {
    Rational s(0);
    for (int r = 0; r < rows; ++r) s += t[r][c];
    bool artificial = c >= cols && c < total;
    cost[c] = (artificial ? Rational(1) : Rational(0)) - s;
  }
  while (true) {
    int enter = -1;
    for (int c = 0; c < total; ++c)
      if (cost[c] < 0) {
        enter = c;  // Bland: smallest index
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best(0);
    for (int r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][total] / t[r][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded: cannot happen in phase 1
    Rational piv = t[leave][enter];
    for (int c = 0; c <= total; ++c) t[leave][c] /= piv;
    for (int r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational f = t[r][enter];
      for (int c = 0; c <= total; ++c) t[r][c] -= f * t[leave][c];
    }
    Rational f = cost[enter];
    for (int c = 0; c <= total; ++c) cost[c] -= f * t[leave][c];
    basis[leave] = enter;
  }
  return cost[total] == 0;  // -(objective value)
}

// p in conv(points)?  Exact.
inline bool in_convex_hull(const Vec<Rational>& p, const std::vector<Vec<Rational>>& points) {
  const int d = p.n;
  const int m = static_cast<int>(points.size());
  if (m == 0) return false;
  Matrix<Rational> a(d + 1, std::vector<Rational>(m));
  std::vector<Rational> b(d + 1);
  for (int i = 0; i < m; ++i) {
    for (int r = 0; r < d; ++r) a[r][i] = points[i].c[r];
    a[d][i] = 1;
  }
  for (int r = 0; r < d; ++r) b[r] = p.c[r];
  b[d] = 1;
  return lp_feasible(a, b);
}

// Volume oracle: pyramid decomposition of the hull from the origin,
//   vol = (1/d) * sum_F offset_F * vol_{d-1}(proj F) / |normal_j*|,
// with facet areas obtained from coordinate-dropped lower-dimensional hulls.
inline Rational pyramid_volume(const minkval::HullData& h) {
  using minkval::abs_of;
  if (h.rank != h.dim) return Rational(0);
  const int d = h.dim;
  Rational vol(0);
  for (const auto& f : h.facets) {
    int jstar = 0;
    for (int j = 1; j < d; ++j)
      if (abs_of(f.normal.c[j]) > abs_of(f.normal.c[jstar])) jstar = j;
    std::vector<Vec<Rational>> dropped;
    for (int vi : f.verts) {
      Vec<Rational> q(d - 1);
      int t = 0;
      for (int j = 0; j < d; ++j)
        if (j != jstar) q.c[t++] = h.verts[vi].c[j];
      dropped.push_back(q);
    }
    Rational area_proj = (d - 1 == 1)
                             ? minkval::convex_hull(1, dropped).volume
                             : minkval::convex_hull(d - 1, dropped).volume;
    vol += f.offset * area_proj / abs_of(f.normal.c[jstar]);
  }
  return vol / d;
}

}  // namespace testing_oracles
