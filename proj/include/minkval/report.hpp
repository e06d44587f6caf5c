#pragma once

// Verification reports: a run configuration, a list of named check results
// with rendered values and slack, and a byte-stable JSON form.  Exact-mode
// values render as rational strings, float-mode values as shortest
// round-trip decimals; key order is fixed, so identical configurations
// produce identical bytes.

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "minkval/rational.hpp"

namespace minkval {

using json = nlohmann::ordered_json;

inline std::string render_scalar(const Rational& x) { return rational_str(x); }

inline std::string render_scalar(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

struct RunConfig {
  std::string suite;
  int n = 3;
  int ball_n = 32;
  double tol = 1e-9;
  std::string arith = "exact";
  std::uint64_t seed = 1;

  json to_json() const {
    json j;
    j["n"] = n;
    j["ballN"] = ball_n;
    j["tol"] = tol;
    j["arith"] = arith;
    j["seed"] = seed;
    return j;
  }
};

struct CaseResult {
  std::string name;
  std::string lhs, rhs;
  std::string relation;  // "==" or ">="
  double slack = 0;      // >= 0 exactly when the case passes
  bool pass = false;
  json witness;

  json to_json() const {
    json j;
    j["name"] = name;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["relation"] = relation;
    j["slack"] = slack;
    j["pass"] = pass;
    if (!witness.is_null()) j["witness"] = witness;
    return j;
  }
};

struct VerificationReport {
  RunConfig config;
  std::vector<CaseResult> cases;
  json meta;
  bool pass = true;

  void add(CaseResult c) {
    pass = pass && c.pass;
    cases.push_back(std::move(c));
  }

  json to_json() const {
    json j;
    j["suite"] = config.suite;
    j["config"] = config.to_json();
    if (!meta.is_null()) j["meta"] = meta;
    json cs = json::array();
    for (const auto& c : cases) cs.push_back(c.to_json());
    j["cases"] = cs;
    j["pass"] = pass;
    return j;
  }

  std::string to_text() const {
    std::string out;
    out += "suite " + config.suite + " (n=" + std::to_string(config.n) +
           ", arith=" + config.arith + ")\n";
    for (const auto& c : cases) {
      out += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name + ": " + c.lhs + " " +
             c.relation + " " + c.rhs + " (slack " + render_scalar(c.slack) + ")\n";
    }
    out += std::string(pass ? "PASS" : "FAIL") + "  overall\n";
    return out;
  }
};

// Equality check: in exact arithmetic the values must be identical; in float
// arithmetic they must agree within tol relative to the value scale.
template <class S>
CaseResult check_equal(const std::string& name, const S& lhs, const S& rhs, double tol) {
  CaseResult c;
  c.name = name;
  c.lhs = render_scalar(lhs);
  c.rhs = render_scalar(rhs);
  c.relation = "==";
  if constexpr (scalar_traits<S>::exact) {
    c.pass = (lhs == rhs);
    c.slack = c.pass ? 0.0 : -std::abs(to_double(lhs - rhs));
  } else {
    double scale = 1.0 + std::max(std::abs(lhs), std::abs(rhs));
    double err = std::abs(lhs - rhs);
    c.pass = err <= tol * scale;
    c.slack = tol * scale - err;
  }
  return c;
}

// Inequality check lhs >= rhs, allowing tol * scale of float slack in both
// modes (exact values convert to double only for the slack report).
template <class S>
CaseResult check_ge(const std::string& name, const S& lhs, const S& rhs, double tol) {
  CaseResult c;
  c.name = name;
  c.lhs = render_scalar(lhs);
  c.rhs = render_scalar(rhs);
  c.relation = ">=";
  double l = to_double(lhs), r = to_double(rhs);
  double scale = 1.0 + std::max(std::abs(l), std::abs(r));
  if constexpr (scalar_traits<S>::exact) {
    c.pass = (lhs >= rhs);
    c.slack = to_double(Rational(lhs - rhs));
    if (!c.pass && c.slack == 0.0) c.slack = -1e-300;  // tiny exact deficit survives rounding
  } else {
    c.slack = l - r;
    c.pass = c.slack >= -tol * scale;
  }
  return c;
}

}  // namespace minkval
