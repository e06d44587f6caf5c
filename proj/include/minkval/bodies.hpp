#pragma once

// Convex bodies at desk scale: polytopes carrying their exact hull structure,
// zonotopes as center + generator lists (each generator g encodes the segment
// [-g, g]), and closure-backed bodies known only through their support
// function.  All stored coordinates are rational; the float backend evaluates
// against cached double mirrors of the same exact data, so both arithmetic
// modes see identical combinatorics.

#include <json.hpp>

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "minkval/kernel.hpp"
#include "minkval/rational.hpp"
#include "minkval/vec.hpp"

namespace minkval {

// Zonotopes with more generators than this refuse vertex materialization;
// support-function and generator-level algorithms remain available.
inline constexpr int kZonotopeVertexCap = 16;

class Polytope {
 public:
  Polytope() = default;

  static Polytope from_points(int dim, std::vector<Vec<Rational>> pts) {
    Polytope p;
    p.hull_ = std::make_shared<HullData>(convex_hull(dim, std::move(pts)));
    std::vector<Vec<double>> mirror;
    for (const auto& v : p.hull_->verts) mirror.push_back(vec_cast<double>(v));
    p.mirror_ = std::make_shared<std::vector<Vec<double>>>(std::move(mirror));
    return p;
  }

  static Polytope cube01(int n) {
    std::vector<Vec<Rational>> pts;
    for (int mask = 0; mask < (1 << n); ++mask) {
      Vec<Rational> p(n);
      for (int j = 0; j < n; ++j) p.c[j] = (mask >> j) & 1;
      pts.push_back(p);
    }
    return from_points(n, std::move(pts));
  }

  static Polytope cube_sym(int n) {
    std::vector<Vec<Rational>> pts;
    for (int mask = 0; mask < (1 << n); ++mask) {
      Vec<Rational> p(n);
      for (int j = 0; j < n; ++j) p.c[j] = ((mask >> j) & 1) ? 1 : -1;
      pts.push_back(p);
    }
    return from_points(n, std::move(pts));
  }

  bool empty() const { return !hull_ || hull_->rank < 0; }
  int dim() const { return hull_ ? hull_->dim : 0; }
  int rank() const { return hull_ ? hull_->rank : -1; }
  const std::vector<Vec<Rational>>& verts() const { return hull_->verts; }
  const std::vector<Vec<double>>& verts_d() const { return *mirror_; }
  const HullData& hull() const { return *hull_; }
  const Rational& volume() const { return hull_->volume; }

 private:
  std::shared_ptr<const HullData> hull_;
  std::shared_ptr<const std::vector<Vec<double>>> mirror_;
};

class Zonotope {
 public:
  Zonotope() = default;

  // Generators are canonicalized (zero generators dropped, signs fixed so the
  // lexicographically positive representative is stored, list sorted); the
  // segment [-g, g] is sign-blind, so this changes nothing geometrically.
  Zonotope(int dim, Vec<Rational> center, std::vector<Vec<Rational>> gens) : dim_(dim) {
    if (center.n != dim) throw std::invalid_argument("Zonotope: center dimension mismatch");
    center_ = std::move(center);
    for (auto& g : gens) {
      if (g.n != dim) throw std::invalid_argument("Zonotope: generator dimension mismatch");
      if (g.is_zero()) continue;
      gens_.push_back(lex_less(-g, g) ? g : -g);
    }
    std::sort(gens_.begin(), gens_.end(), lex_less<Rational>);
    center_d_ = vec_cast<double>(center_);
    for (const auto& g : gens_) gens_d_.push_back(vec_cast<double>(g));
  }

  static Zonotope cube_sym(int n) {
    std::vector<Vec<Rational>> gens;
    for (int j = 0; j < n; ++j) {
      Vec<Rational> e(n);
      e.c[j] = 1;
      gens.push_back(e);
    }
    return Zonotope(n, Vec<Rational>(n), std::move(gens));
  }

  int dim() const { return dim_; }
  const Vec<Rational>& center() const { return center_; }
  const std::vector<Vec<Rational>>& gens() const { return gens_; }
  const Vec<double>& center_d() const { return center_d_; }
  const std::vector<Vec<double>>& gens_d() const { return gens_d_; }

  // Exact vertex set by incremental hulling, one generator at a time.  The
  // 2^m sign expansion is never formed; still, the result is capped to keep
  // desk-scale costs honest.
  const std::vector<Vec<Rational>>& vertices() const {
    if (!verts_) {
      if (static_cast<int>(gens_.size()) > kZonotopeVertexCap)
        throw std::domain_error("Zonotope: vertex materialization beyond generator cap");
      std::vector<Vec<Rational>> cur = {center_};
      for (const auto& g : gens_) {
        std::vector<Vec<Rational>> next;
        next.reserve(2 * cur.size());
        for (const auto& v : cur) {
          next.push_back(v + g);
          next.push_back(v - g);
        }
        cur = convex_hull(dim_, std::move(next)).verts;
      }
      verts_ = std::make_shared<std::vector<Vec<Rational>>>(std::move(cur));
    }
    return *verts_;
  }

  const Polytope& polytope() const {
    if (!poly_) poly_ = std::make_shared<Polytope>(Polytope::from_points(dim_, vertices()));
    return *poly_;
  }

 private:
  int dim_ = 0;
  Vec<Rational> center_;
  std::vector<Vec<Rational>> gens_;
  Vec<double> center_d_;
  std::vector<Vec<double>> gens_d_;
  mutable std::shared_ptr<const std::vector<Vec<Rational>>> verts_;
  mutable std::shared_ptr<Polytope> poly_;
};

// A convex body known only through its (positively 1-homogeneous, sublinear)
// support function.  Produced by derived operators whose values are natural
// as support-function closures rather than vertex or generator lists.
template <class S>
struct SupportBody {
  int dim = 0;
  std::function<S(const Vec<S>&)> h;
  std::string label;
};

template <class S>
using Body = std::variant<Polytope, Zonotope, SupportBody<S>>;

template <class S>
inline int body_dim(const Body<S>& b) {
  if (const auto* p = std::get_if<Polytope>(&b)) return p->dim();
  if (const auto* z = std::get_if<Zonotope>(&b)) return z->dim();
  return std::get<SupportBody<S>>(b).dim;
}

// --- Support functions ---

template <class S>
inline S support(const Polytope& p, const Vec<S>& x) {
  if (p.empty()) throw std::domain_error("support: empty body");
  bool first = true;
  S best(0);
  if constexpr (scalar_traits<S>::exact) {
    for (const auto& v : p.verts()) {
      S d = dot(v, x);
      if (first || d > best) best = d;
      first = false;
    }
  } else {
    for (const auto& v : p.verts_d()) {
      S d = dot(v, x);
      if (first || d > best) best = d;
      first = false;
    }
  }
  return best;
}

template <class S>
inline S support(const Zonotope& z, const Vec<S>& x) {
  if constexpr (scalar_traits<S>::exact) {
    S r = dot(z.center(), x);
    for (const auto& g : z.gens()) r += abs_of(dot(g, x));
    return r;
  } else {
    S r = dot(z.center_d(), x);
    for (const auto& g : z.gens_d()) r += abs_of(dot(g, x));
    return r;
  }
}

template <class S>
inline S support(const Body<S>& b, const Vec<S>& x) {
  if (const auto* p = std::get_if<Polytope>(&b)) return support<S>(*p, x);
  if (const auto* z = std::get_if<Zonotope>(&b)) return support<S>(*z, x);
  return std::get<SupportBody<S>>(b).h(x);
}

// --- Rigid motions of stored bodies ---

inline Polytope translate(const Polytope& p, const Vec<Rational>& t) {
  if (p.empty()) throw std::domain_error("translate: empty body");
  std::vector<Vec<Rational>> pts;
  for (const auto& v : p.verts()) pts.push_back(v + t);
  return Polytope::from_points(p.dim(), std::move(pts));
}

inline Polytope scale(const Polytope& p, const Rational& s) {
  if (p.empty()) throw std::domain_error("scale: empty body");
  std::vector<Vec<Rational>> pts;
  for (const auto& v : p.verts()) pts.push_back(v * s);
  return Polytope::from_points(p.dim(), std::move(pts));
}

inline Zonotope translate(const Zonotope& z, const Vec<Rational>& t) {
  return Zonotope(z.dim(), z.center() + t, z.gens());
}

inline Zonotope scale(const Zonotope& z, const Rational& s) {
  std::vector<Vec<Rational>> gens;
  for (const auto& g : z.gens()) gens.push_back(g * s);
  return Zonotope(z.dim(), z.center() * s, std::move(gens));
}

template <class S>
inline Body<S> translate(const Body<S>& b, const Vec<Rational>& t) {
  if (const auto* p = std::get_if<Polytope>(&b)) return translate(*p, t);
  if (const auto* z = std::get_if<Zonotope>(&b)) return translate(*z, t);
  const auto& sb = std::get<SupportBody<S>>(b);
  Vec<S> ts = vec_cast<S>(t);
  return SupportBody<S>{sb.dim, [h = sb.h, ts](const Vec<S>& x) { return h(x) + dot(ts, x); },
                        sb.label + "+t"};
}

template <class S>
inline Body<S> scale(const Body<S>& b, const Rational& s) {
  if (const auto* p = std::get_if<Polytope>(&b)) return scale(*p, s);
  if (const auto* z = std::get_if<Zonotope>(&b)) return scale(*z, s);
  const auto& sb = std::get<SupportBody<S>>(b);
  S ss = scalar_cast<S>(s);
  if (ss < 0)
    return SupportBody<S>{sb.dim, [h = sb.h, ss](const Vec<S>& x) { return -ss * h(-x); },
                          sb.label + "*s"};
  return SupportBody<S>{sb.dim, [h = sb.h, ss](const Vec<S>& x) { return ss * h(x); },
                        sb.label + "*s"};
}

// --- Minkowski sums ---

inline Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.empty() || b.empty()) throw std::domain_error("minkowski_sum: empty body");
  std::vector<Vec<Rational>> pts;
  pts.reserve(a.verts().size() * b.verts().size());
  for (const auto& u : a.verts())
    for (const auto& v : b.verts()) pts.push_back(u + v);
  return Polytope::from_points(a.dim(), std::move(pts));
}

inline Zonotope minkowski_sum(const Zonotope& a, const Zonotope& b) {
  std::vector<Vec<Rational>> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Zonotope(a.dim(), a.center() + b.center(), std::move(gens));
}

inline Polytope minkowski_sum(const Polytope& a, const Zonotope& b) {
  if (a.empty()) throw std::domain_error("minkowski_sum: empty body");
  std::vector<Vec<Rational>> pts;
  for (const auto& u : a.verts())
    for (const auto& v : b.vertices()) pts.push_back(u + v);
  return Polytope::from_points(a.dim(), std::move(pts));
}

template <class S>
inline Body<S> minkowski_sum(const Body<S>& a, const Body<S>& b) {
  if (body_dim(a) != body_dim(b)) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  const auto* pa = std::get_if<Polytope>(&a);
  const auto* pb = std::get_if<Polytope>(&b);
  const auto* za = std::get_if<Zonotope>(&a);
  const auto* zb = std::get_if<Zonotope>(&b);
  if (pa && pb) return minkowski_sum(*pa, *pb);
  if (za && zb) return minkowski_sum(*za, *zb);
  if (pa && zb && static_cast<int>(zb->gens().size()) <= kZonotopeVertexCap)
    return minkowski_sum(*pa, *zb);
  if (za && pb && static_cast<int>(za->gens().size()) <= kZonotopeVertexCap)
    return minkowski_sum(*pb, *za);
  // Fall back to the additive support-function closure.
  auto ha = [a](const Vec<S>& x) { return support<S>(a, x); };
  auto hb = [b](const Vec<S>& x) { return support<S>(b, x); };
  return SupportBody<S>{body_dim(a), [ha, hb](const Vec<S>& x) { return ha(x) + hb(x); }, "sum"};
}

// --- Clipping ---

inline Polytope clip(const Polytope& p, const Halfspace& hs) {
  if (p.empty()) throw std::domain_error("clip: empty body");
  return Polytope::from_points(p.dim(), clip_candidates(p.verts(), hs));
}

// --- Ball approximation ---

inline double ball_volume_d(int m) {
  switch (m) {
    case 0:
      return 1.0;
    case 1:
      return 2.0;
    case 2:
      return M_PI;
    case 3:
      return 4.0 * M_PI / 3.0;
    case 4:
      return M_PI * M_PI / 2.0;
    default:
      throw std::invalid_argument("ball_volume_d: dimension out of range");
  }
}

// Zonotope approximation of the unit ball: one generator per antipodal class
// of direction_set(n, N), scaled by a rational constant that makes the
// average of the support function over the direction set equal to 1 up to a
// 2^-24 rounding.  The constant is deliberately rounded to a short rational:
// the exact value is a sum over all direction pairs whose denominator
// explodes combinatorially and would poison every later exact computation
// touching the generators, while the rounding error sits far below the
// directional discretization error.  The analytic constant
// n*kappa_n / (N*kappa_{n-1}) relating |x| to the spherical mean of |x . u|
// serves as a build-time cross-check.
inline const Zonotope& ball_zonotope(int n, int N) {
  static std::map<std::pair<int, int>, Zonotope> cache;
  auto key = std::make_pair(n, N);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<Vec<Rational>> dirs = direction_set(n, N);
  std::vector<Vec<Rational>> reps = antipodal_representatives(dirs);
  std::vector<Vec<double>> dirs_d, reps_d;
  for (const auto& u : dirs) dirs_d.push_back(vec_cast<double>(u));
  for (const auto& r : reps) reps_d.push_back(vec_cast<double>(r));
  double avg = 0;  // positive terms only: the fixed summation order is stable
  for (const auto& u : dirs_d)
    for (const auto& r : reps_d) avg += std::abs(dot(u, r));
  avg /= N;
  if (!(avg > 0)) throw std::logic_error("ball_zonotope: degenerate direction set");
  Rational c = rational_round(1.0 / avg, int64_t(1) << 24);

  double analytic = n * ball_volume_d(n) / (N * ball_volume_d(n - 1));
  double ratio = to_double(c) / analytic;
  if (ratio < 0.6 || ratio > 1.7)
    throw std::logic_error("ball_zonotope: normalization far from the analytic constant");

  std::vector<Vec<Rational>> gens;
  for (const auto& r : reps) gens.push_back(r * c);
  auto [pos, inserted] = cache.emplace(key, Zonotope(n, Vec<Rational>(n), std::move(gens)));
  return pos->second;
}

// --- Generating measures ---

// Even discrete measure on the sphere generating the support function of a
// centered zonotope: an atom at +-g/|g| with mass |g|/2 for each generator,
// h(Z - c, x) = integral |x . u| d mu = sum over atoms of mass * |x . u|.
// Atoms are stored as unnormalized rays so that downstream exact formulas can
// cancel the irrational unit normalization against the mass (mass times the
// unit dot equals |x . ray| / 2, which is rational).
struct GeneratingMeasure {
  int dim = 0;
  Vec<Rational> center;
  std::vector<Vec<Rational>> rays;  // closed under ray -> -ray

  // Exact support reconstruction: x.center + (1/2) sum |x.ray|.
  template <class S>
  S reconstruct(const Vec<S>& x) const {
    S r = dot(vec_cast<S>(center), x);
    S half = scalar_cast<S>(Rational(1, 2));
    for (const auto& ray : rays) r += half * abs_of(dot(vec_cast<S>(ray), x));
    return r;
  }

  double atom_mass(size_t i) const { return std::sqrt(to_double(norm_sq(rays[i]))) / 2; }
};

inline GeneratingMeasure generating_measure(const Zonotope& z) {
  GeneratingMeasure m;
  m.dim = z.dim();
  m.center = z.center();
  for (const auto& g : z.gens()) {
    m.rays.push_back(g);
    m.rays.push_back(-g);
  }
  return m;
}

// --- JSON body interchange ---

using json = nlohmann::ordered_json;

inline json vec_to_json(const Vec<Rational>& v) {
  json a = json::array();
  for (int i = 0; i < v.n; ++i) a.push_back(rational_str(v.c[i]));
  return a;
}

inline Vec<Rational> vec_from_json(const json& a, const char* field) {
  if (!a.is_array() || a.size() < 1 || a.size() > static_cast<size_t>(kMaxDim))
    throw std::invalid_argument(std::string("body json: field '") + field +
                                "' must be an array of 1..4 rational strings");
  Vec<Rational> v(static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_string())
      throw std::invalid_argument(std::string("body json: field '") + field +
                                  "' entries must be rational strings like \"3/4\"");
    v.c[static_cast<int>(i)] = rational_parse(a[i].get<std::string>());
  }
  return v;
}

inline json polytope_to_json(const Polytope& p) {
  json j;
  j["type"] = "polytope";
  json vs = json::array();
  for (const auto& v : p.verts()) vs.push_back(vec_to_json(v));
  j["vertices"] = vs;
  return j;
}

inline json zonotope_to_json(const Zonotope& z) {
  json j;
  j["type"] = "zonotope";
  j["center"] = vec_to_json(z.center());
  json gs = json::array();
  for (const auto& g : z.gens()) gs.push_back(vec_to_json(g));
  j["generators"] = gs;
  return j;
}

template <class S>
inline json body_to_json(const Body<S>& b) {
  if (const auto* p = std::get_if<Polytope>(&b)) return polytope_to_json(*p);
  if (const auto* z = std::get_if<Zonotope>(&b)) return zonotope_to_json(*z);
  throw std::invalid_argument("body json: support-function bodies are not serializable");
}

template <class S = Rational>
inline Body<S> body_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw std::invalid_argument("body json: missing string field 'type'");
  std::string type = j["type"].get<std::string>();
  if (type == "polytope") {
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
      throw std::invalid_argument("body json: polytope needs a nonempty 'vertices' array");
    std::vector<Vec<Rational>> pts;
    int dim = -1;
    for (const auto& e : j["vertices"]) {
      Vec<Rational> v = vec_from_json(e, "vertices");
      if (dim < 0) dim = v.n;
      if (v.n != dim) throw std::invalid_argument("body json: inconsistent vertex dimensions");
      pts.push_back(v);
    }
    return Polytope::from_points(dim, std::move(pts));
  }
  if (type == "zonotope") {
    if (!j.contains("center"))
      throw std::invalid_argument("body json: zonotope needs field 'center'");
    Vec<Rational> c = vec_from_json(j["center"], "center");
    if (!j.contains("generators") || !j["generators"].is_array())
      throw std::invalid_argument("body json: zonotope needs array field 'generators'");
    std::vector<Vec<Rational>> gens;
    for (const auto& e : j["generators"]) {
      Vec<Rational> g = vec_from_json(e, "generators");
      if (g.n != c.n) throw std::invalid_argument("body json: inconsistent generator dimensions");
      gens.push_back(g);
    }
    return Zonotope(c.n, c, std::move(gens));
  }
  throw std::invalid_argument("body json: unknown type '" + type + "'");
}

}  // namespace minkval
