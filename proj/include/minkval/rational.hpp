#pragma once

// Scalar layer: exact rational arithmetic (GMP-backed) and the float backend.
// Every quantity the library computes is templated on one of these two scalar
// types; `scalar_traits` is the single switch the rest of the code consults.

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace minkval {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static const char* name() { return "exact"; }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static const char* name() { return "float"; }
};

template <class S>
inline S scalar_cast(const Rational& q);

template <>
inline Rational scalar_cast<Rational>(const Rational& q) {
  return q;
}

template <>
inline double scalar_cast<double>(const Rational& q) {
  return to_double(q);
}

// Nearest rational with the given denominator.  Used to pin floating-point
// constructions (direction sets) down to exact coordinates.
inline Rational rational_round(double x, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("rational_round: denominator must be positive");
  double scaled = x * static_cast<double>(den);
  if (!std::isfinite(scaled)) throw std::invalid_argument("rational_round: value not finite");
  auto p = static_cast<std::int64_t>(std::llround(scaled));
  return Rational(p, den);
}

// Square root of a non-negative rational: exact when the value is a perfect
// square of a rational, otherwise the double square root of the exactly
// computed radicand (one rounding, deterministic).
inline Rational rational_sqrt(const Rational& q) {
  if (q < 0) throw std::domain_error("rational_sqrt: negative radicand");
  if (q == 0) return Rational(0);
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  BigInt rn = sqrt(num);
  BigInt rd = sqrt(den);
  if (rn * rn == num && rd * rd == den) return Rational(rn, rd);
  return Rational(std::sqrt(to_double(q)));
}

template <class S>
inline S sqrt_of(const S& x);

template <>
inline Rational sqrt_of<Rational>(const Rational& x) {
  return rational_sqrt(x);
}

template <>
inline double sqrt_of<double>(const double& x) {
  if (x < 0) {
    if (x < -1e-12) throw std::domain_error("sqrt_of: negative radicand");
    return 0.0;
  }
  return std::sqrt(x);
}

template <class S>
inline S abs_of(const S& x) {
  return x < 0 ? S(-x) : x;
}

// Parse "p/q" or "p" (arbitrary precision, exact).
inline Rational rational_parse(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("rational_parse: malformed rational '" + s + "'");
  }
}

inline std::string rational_str(const Rational& q) { return q.str(); }

}  // namespace minkval
