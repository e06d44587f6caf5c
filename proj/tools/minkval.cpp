// Command-line front end: load JSON bodies, run computations (volumes, mixed
// volumes, intrinsic volumes, projection bodies, Steiner points, Klain
// inversion) and verification suites, and emit deterministic reports.
//
// Exit codes: 0 = success / all checks passed, 1 = a verification case
// failed, 2 = malformed input or flags (diagnostic names the offending field).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "minkval/inequalities.hpp"

namespace {

using namespace minkval;

struct CommonFlags {
  int n = 0;  // 0 = infer from the input bodies
  std::string arith = "exact";
  double tol = 1e-9;
  int ball_n = 32;
  std::uint64_t seed = 2026;
  std::string format = "json";
  std::string out;
};

void add_common_flags(CLI::App* cmd, CommonFlags& fl) {
  cmd->add_option("--n", fl.n, "ambient dimension (default: inferred / 3 for verify)");
  cmd->add_option("--arith", fl.arith, "arithmetic backend")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--tol", fl.tol, "float-mode tolerance");
  cmd->add_option("--ballN", fl.ball_n, "ball zonotope resolution")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", fl.seed, "seed for generated bodies and directions");
  cmd->add_option("--format", fl.format, "output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", fl.out, "write the result to this file instead of stdout");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("input file '" + path + "': cannot open");
  try {
    json j;
    in >> j;
    return j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("input file '" + path + "': " + std::string(e.what()));
  }
}

void emit(const CommonFlags& fl, const std::string& payload) {
  if (!fl.out.empty()) {
    std::ofstream out(fl.out, std::ios::binary);
    if (!out) throw std::invalid_argument("flag --out: cannot open '" + fl.out + "' for writing");
    out << payload << "\n";
    return;
  }
  std::cout << payload << "\n";
}

// "K:1,L:2" -> per-file multiplicities, in positional order.
std::vector<int> parse_mv_spec(const std::string& spec, size_t nfiles) {
  std::vector<int> mult;
  if (spec.empty()) {
    mult.assign(nfiles, 1);
    return mult;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto pos = item.find(':');
    if (pos == std::string::npos || pos + 1 >= item.size())
      throw std::invalid_argument("flag --spec: entry '" + item + "' must look like LABEL:COUNT");
    int m = 0;
    try {
      m = std::stoi(item.substr(pos + 1));
    } catch (...) {
      m = 0;
    }
    if (m < 1)
      throw std::invalid_argument("flag --spec: multiplicity in '" + item +
                                  "' must be a positive integer");
    mult.push_back(m);
  }
  if (mult.size() != nfiles)
    throw std::invalid_argument("flag --spec: lists " + std::to_string(mult.size()) +
                                " bodies but " + std::to_string(nfiles) + " files were given");
  return mult;
}

template <class S>
std::string render_point(const Vec<S>& v) {
  json a = json::array();
  for (int i = 0; i < v.n; ++i) a.push_back(render_scalar(v.c[i]));
  return a.dump();
}

template <class S>
int run_compute(const std::string& kind, const std::vector<std::string>& files,
                const CommonFlags& fl, const std::string& spec, int order) {
  if (files.empty()) throw std::invalid_argument("compute: at least one body file is required");
  std::vector<Body<S>> bodies;
  for (const auto& f : files) bodies.push_back(body_from_json<S>(load_json_file(f)));
  const int n = body_dim(bodies.front());
  for (size_t k = 0; k < bodies.size(); ++k)
    if (body_dim(bodies[k]) != n)
      throw std::invalid_argument("input file '" + files[k] + "': dimension " +
                                  std::to_string(body_dim(bodies[k])) +
                                  " does not match the first body (" + std::to_string(n) + ")");
  if (fl.n != 0 && fl.n != n)
    throw std::invalid_argument("flag --n: bodies have dimension " + std::to_string(n) +
                                ", but --n says " + std::to_string(fl.n));

  if (kind == "volume") {
    emit(fl, render_scalar(body_volume<S>(bodies.front())));
    return 0;
  }
  if (kind == "mixed-volume") {
    std::vector<int> mult = parse_mv_spec(spec, bodies.size());
    std::vector<Body<S>> args;
    for (size_t k = 0; k < bodies.size(); ++k)
      for (int t = 0; t < mult[k]; ++t) args.push_back(bodies[k]);
    if (static_cast<int>(args.size()) != n)
      throw std::invalid_argument("flag --spec: multiplicities sum to " +
                                  std::to_string(args.size()) + ", expected the dimension " +
                                  std::to_string(n));
    emit(fl, render_scalar(mixed_volume<S>(args)));
    return 0;
  }
  if (kind == "intrinsic") {
    if (order < 0 || order > n)
      throw std::invalid_argument("flag --i: intrinsic-volume index must lie in 0.." +
                                  std::to_string(n));
    emit(fl, render_scalar(intrinsic_volume<S>(order, bodies.front(), fl.ball_n)));
    return 0;
  }
  if (kind == "projection-body") {
    emit(fl, body_to_json<S>(projection_body<S>(bodies.front())).dump(2));
    return 0;
  }
  if (kind == "steiner-point") {
    emit(fl, render_point<S>(steiner_point<S>(bodies.front(), fl.ball_n)));
    return 0;
  }
  if (kind == "klain-invert") {
    if (order < 1 || order > n)
      throw std::invalid_argument("flag --i: Klain degree must lie in 1.." + std::to_string(n));
    if (bodies.size() != 1 && static_cast<int>(bodies.size()) != order)
      throw std::invalid_argument("compute klain-invert: give one zonotope (reused) or exactly " +
                                  std::to_string(order) + " zonotopes");
    std::vector<GeneratingMeasure> ms;
    for (int t = 0; t < order; ++t) {
      const Body<S>& b = bodies.size() == 1 ? bodies.front() : bodies[t];
      const auto* z = std::get_if<Zonotope>(&b);
      if (!z)
        throw std::invalid_argument("input file '" + files[bodies.size() == 1 ? 0 : t] +
                                    "': klain-invert needs bodies of type 'zonotope'");
      ms.push_back(generating_measure(*z));
    }
    auto one = [](const std::vector<Vec<Rational>>&) { return S(1); };
    emit(fl, render_scalar(klain_invert<S>(order, one, ms)));
    return 0;
  }
  throw std::invalid_argument("compute: unknown kind '" + kind + "'");
}

template <class S>
int run_verify(const std::string& suite, const SuiteParams& p, const CommonFlags& fl) {
  VerificationReport rep = run_suite<S>(suite, p);
  emit(fl, fl.format == "text" ? rep.to_text() : rep.to_json().dump(2));
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minkval: exact and floating checks for Minkowski valuations on polytopes"};
  app.require_subcommand(1);

  // --- compute ---
  auto* compute = app.add_subcommand("compute", "evaluate one quantity on explicit bodies");
  std::string kind;
  std::vector<std::string> files;
  std::string spec;
  int order = -1;
  CommonFlags cfl;
  compute->add_option("kind", kind, "what to compute")
      ->required()
      ->check(CLI::IsMember({"volume", "mixed-volume", "intrinsic", "projection-body",
                             "steiner-point", "klain-invert"}));
  compute->add_option("files", files, "JSON body files")->required();
  compute->add_option("--spec", spec, "mixed-volume multiplicities, e.g. \"K:1,L:1\"");
  compute->add_option("--i", order, "index (intrinsic volume) or degree (klain-invert)");
  add_common_flags(compute, cfl);

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int pairs = 6;
  std::vector<int> orders;
  std::string operator_name;
  CommonFlags vfl;
  vfl.n = 3;
  verify->add_option("suite", suite, "which suite to run")
      ->required()
      ->check(CLI::IsMember({"steiner", "symmetry", "durch", "bm", "main", "valuation-property",
                             "klain"}));
  verify->add_option("--pairs", pairs, "seeded bodies / pairs / splits per suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--i", orders, "restrict mixed-volume orders, e.g. --i 1,2,3")
      ->delimiter(',');
  verify->add_option("--operator", operator_name, "restrict to one registered operator");
  add_common_flags(verify, vfl);

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e);
      return code == 0 ? 0 : 2;  // help/version exit clean; bad usage is an input error
    }

    if (compute->parsed()) {
      if (cfl.arith == "float") return run_compute<double>(kind, files, cfl, spec, order);
      return run_compute<Rational>(kind, files, cfl, spec, order);
    }

    if (vfl.n < 2 || vfl.n > 4)
      throw std::invalid_argument("flag --n: suite dimension must be 2, 3, or 4");
    SuiteParams p;
    p.n = vfl.n;
    p.ball_n = vfl.ball_n;
    p.tol = vfl.tol;
    p.seed = vfl.seed;
    p.count = pairs;
    p.orders = orders;
    p.operator_name = operator_name;
    if (vfl.arith == "float") return run_verify<double>(suite, p, vfl);
    return run_verify<Rational>(suite, p, vfl);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
