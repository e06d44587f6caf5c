#pragma once

// Deterministic seeded generation of random rational bodies.  A fixed-width
// splitmix64 stream is used instead of <random> distributions so that the
// same seed yields bit-identical bodies on every platform and compiler.

#include <cstdint>
#include <vector>

#include "minkval/rational.hpp"
#include "minkval/vec.hpp"

namespace minkval {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound) up to negligible modulo bias; deterministic.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Random rational in [0, 1] with denominator at most max_den.
inline Rational seeded_unit_rational(SplitMix64& rng, int max_den = 64) {
  std::int64_t d = static_cast<std::int64_t>(rng.below(max_den)) + 1;
  std::int64_t p = static_cast<std::int64_t>(rng.below(d + 1));
  return Rational(p, d);
}

// Random rational in [-1, 1] with denominator at most max_den.
inline Rational seeded_sym_rational(SplitMix64& rng, int max_den = 64) {
  Rational r = seeded_unit_rational(rng, max_den);
  return rng.below(2) == 0 ? r : Rational(-r);
}

// Random polytope: convex hull of `points` rational points in [0,1]^n.
inline std::vector<Vec<Rational>> seeded_points(SplitMix64& rng, int n, int points,
                                                int max_den = 64) {
  std::vector<Vec<Rational>> pts;
  for (int i = 0; i < points; ++i) {
    Vec<Rational> p(n);
    for (int j = 0; j < n; ++j) p.c[j] = seeded_unit_rational(rng, max_den);
    pts.push_back(p);
  }
  return pts;
}

// Random zonotope generators: `count` nonzero rational vectors in [-1,1]^n.
inline std::vector<Vec<Rational>> seeded_generators(SplitMix64& rng, int n, int count,
                                                    int max_den = 16) {
  std::vector<Vec<Rational>> gens;
  while (static_cast<int>(gens.size()) < count) {
    Vec<Rational> g(n);
    for (int j = 0; j < n; ++j) g.c[j] = seeded_sym_rational(rng, max_den);
    if (!g.is_zero()) gens.push_back(g);
  }
  return gens;
}

}  // namespace minkval
