#pragma once

// Small fixed-capacity vectors (dimension 2..4) and the handful of exact
// linear-algebra primitives the geometry code needs: determinants, Gram
// determinants, generalized cross products, Gaussian elimination.

#include <array>
#include <stdexcept>
#include <vector>

#include "minkval/rational.hpp"

namespace minkval {

inline constexpr int kMaxDim = 4;

template <class S>
struct Vec {
  std::array<S, kMaxDim> c{};
  int n = 0;

  Vec() = default;
  explicit Vec(int dim) : n(dim) {}
  Vec(std::initializer_list<S> xs) : n(static_cast<int>(xs.size())) {
    int i = 0;
    for (const S& x : xs) c[i++] = x;
  }

  S& operator[](int i) { return c[i]; }
  const S& operator[](int i) const { return c[i]; }

  bool operator==(const Vec& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
      if (c[i] != o.c[i]) return false;
    return true;
  }
  bool operator!=(const Vec& o) const { return !(*this == o); }

  Vec operator+(const Vec& o) const {
    Vec r(n);
    for (int i = 0; i < n; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r(n);
    for (int i = 0; i < n; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Vec operator-() const {
    Vec r(n);
    for (int i = 0; i < n; ++i) r.c[i] = -c[i];
    return r;
  }
  Vec operator*(const S& s) const {
    Vec r(n);
    for (int i = 0; i < n; ++i) r.c[i] = c[i] * s;
    return r;
  }

  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (c[i] != 0) return false;
    return true;
  }
};

template <class S>
inline S dot(const Vec<S>& a, const Vec<S>& b) {
  S r(0);
  for (int i = 0; i < a.n; ++i) r += a.c[i] * b.c[i];
  return r;
}

template <class S>
inline S norm_sq(const Vec<S>& a) {
  return dot(a, a);
}

// 2D: rotate by +90 degrees, (x, y) -> (-y, x).
template <class S>
inline Vec<S> rot90(const Vec<S>& a) {
  return Vec<S>{S(-a.c[1]), S(a.c[0])};
}

template <class S>
inline Vec<S> cross(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r(3);
  r.c[0] = a.c[1] * b.c[2] - a.c[2] * b.c[1];
  r.c[1] = a.c[2] * b.c[0] - a.c[0] * b.c[2];
  r.c[2] = a.c[0] * b.c[1] - a.c[1] * b.c[0];
  return r;
}

template <class S>
inline S det2(const Vec<S>& a, const Vec<S>& b) {
  return a.c[0] * b.c[1] - a.c[1] * b.c[0];
}

template <class S>
inline S det3(const Vec<S>& a, const Vec<S>& b, const Vec<S>& c) {
  return a.c[0] * (b.c[1] * c.c[2] - b.c[2] * c.c[1]) -
         a.c[1] * (b.c[0] * c.c[2] - b.c[2] * c.c[0]) +
         a.c[2] * (b.c[0] * c.c[1] - b.c[1] * c.c[0]);
}

template <class S>
inline S det4(const Vec<S>& a, const Vec<S>& b, const Vec<S>& c, const Vec<S>& d) {
  // Cofactor expansion along the first vector.
  S r(0);
  std::array<const Vec<S>*, 3> rest = {&b, &c, &d};
  for (int j = 0; j < 4; ++j) {
    if (a.c[j] == 0) continue;
    Vec<S> m[3];
    for (int k = 0; k < 3; ++k) {
      m[k] = Vec<S>(3);
      int t = 0;
      for (int col = 0; col < 4; ++col) {
        if (col == j) continue;
        m[k].c[t++] = rest[k]->c[col];
      }
    }
    S minor = det3(m[0], m[1], m[2]);
    r += ((j % 2 == 0) ? a.c[j] : S(-a.c[j])) * minor;
  }
  return r;
}

// Determinant of n vectors in dimension n (n = 1..4).
template <class S>
inline S det_n(const std::vector<Vec<S>>& vs) {
  switch (vs.size()) {
    case 1:
      return vs[0].c[0];
    case 2:
      return det2(vs[0], vs[1]);
    case 3:
      return det3(vs[0], vs[1], vs[2]);
    case 4:
      return det4(vs[0], vs[1], vs[2], vs[3]);
    default:
      throw std::invalid_argument("det_n: dimension out of range");
  }
}

// Gram determinant det(<v_i, v_j>) of k vectors (k = 1..4).
template <class S>
inline S gram_det(const std::vector<Vec<S>>& vs) {
  const int k = static_cast<int>(vs.size());
  if (k < 1 || k > kMaxDim) throw std::invalid_argument("gram_det: 1..4 vectors expected");
  std::vector<Vec<S>> g(k, Vec<S>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g[i].c[j] = dot(vs[i], vs[j]);
  return det_n(g);
}

// Generalized cross product: given d-1 vectors in dimension d, the vector
// orthogonal to all of them with det(v_1, ..., v_{d-1}, cross) >= 0.
template <class S>
inline Vec<S> generalized_cross(const std::vector<Vec<S>>& vs, int dim) {
  if (static_cast<int>(vs.size()) != dim - 1)
    throw std::invalid_argument("generalized_cross: needs dim-1 vectors");
  if (dim == 2) return rot90(vs[0]);
  if (dim == 3) return cross(vs[0], vs[1]);
  if (dim == 4) {
    // Cofactors of the 3x4 matrix, with signs making det(v1,v2,v3,r) = |r|^2.
    Vec<S> r(4);
    for (int j = 0; j < 4; ++j) {
      Vec<S> m[3];
      for (int k = 0; k < 3; ++k) {
        m[k] = Vec<S>(3);
        int t = 0;
        for (int col = 0; col < 4; ++col) {
          if (col == j) continue;
          m[k].c[t++] = vs[k].c[col];
        }
      }
      S minor = det3(m[0], m[1], m[2]);
      r.c[j] = (j % 2 == 0) ? S(-minor) : minor;
    }
    return r;
  }
  throw std::invalid_argument("generalized_cross: dimension out of range");
}

template <class S>
inline Vec<S> vec_cast(const Vec<Rational>& v) {
  Vec<S> r(v.n);
  for (int i = 0; i < v.n; ++i) r.c[i] = scalar_cast<S>(v.c[i]);
  return r;
}

// Lexicographic order (used for deterministic point processing).
template <class S>
inline bool lex_less(const Vec<S>& a, const Vec<S>& b) {
  for (int i = 0; i < a.n; ++i) {
    if (a.c[i] < b.c[i]) return true;
    if (a.c[i] > b.c[i]) return false;
  }
  return false;
}

// --- Dense exact linear algebra on small matrices (row-major) ---

template <class S>
using Matrix = std::vector<std::vector<S>>;

// Row rank by Gaussian elimination; optionally records the pivot columns.
template <class S>
inline int matrix_rank(Matrix<S> m, std::vector<int>* pivot_cols = nullptr) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      S f = m[r][col] / m[rank][col];
      for (int c2 = col; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

// Solve a square system m x = b exactly.  Throws if m is singular.
template <class S>
inline std::vector<S> solve_linear(Matrix<S> m, std::vector<S> b) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("solve_linear: singular matrix");
    std::swap(m[col], m[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      S f = m[r][col] / m[col][col];
      for (int c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
      b[r] -= f * b[col];
    }
  }
  std::vector<S> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

// Exact inverse-Vandermonde weights for polynomial fitting at integer nodes.
// Row j gives the weights w with: coefficient of t^j  =  sum_r w[r] * f(node_r).
inline Matrix<Rational> vandermonde_coefficient_weights(const std::vector<long>& nodes) {
  const int n = static_cast<int>(nodes.size());
  Matrix<Rational> v(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r) {
    Rational p(1);
    for (int j = 0; j < n; ++j) {
      v[r][j] = p;
      p *= nodes[r];
    }
  }
  // Invert by solving against unit vectors; sizes here are at most 6x6.
  Matrix<Rational> inv(n, std::vector<Rational>(n));
  for (int k = 0; k < n; ++k) {
    std::vector<Rational> e(n, Rational(0));
    e[k] = 1;
    std::vector<Rational> col = solve_linear(v, e);
    for (int j = 0; j < n; ++j) inv[j][k] = col[j];
  }
  return inv;
}

}  // namespace minkval
