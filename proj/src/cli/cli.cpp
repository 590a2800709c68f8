#include "ptchain/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptchain/errors.hpp"
#include "ptchain/golden.hpp"
#include "ptchain/oracle.hpp"
#include "ptchain/spectrum.hpp"
#include "ptchain/sturmian.hpp"

namespace ptchain {

namespace {

using nlohmann::ordered_json;

struct Options {
  int J = 0;
  std::string values;
  std::string pairs;
  std::string config;
  bool raw = false;
  bool symbolic = false;
  int symbolic_limit = 7;
  std::string plane;
  std::string range;
  std::string step = "0.05";
  double tol = 1e-12;
  int oracle_N = 0;
  std::string format = "text";
  std::string out;
  bool wavefunction = false;
  int random = 0;
  bool golden = false;
  std::string golden_dir;
  unsigned seed = 1;
  unsigned threads = 0;
  std::string boundary_out;
};

std::string fmt(long double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", value);
  return buf;
}

std::string fmt(const BigRational& value) { return fmt(to_long_double(value)); }

void check_J(const Options& o, int J) {
  if (o.J != 0 && o.J != J) {
    throw Error(ErrorCode::InvalidArgument, "--J " + std::to_string(o.J) + " does not match " + std::to_string(J) + " given couplings");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Numeric couplings from --config, --pairs or --values.
ParamSet numeric_params(const Options& o) {
  ParamSet params;
  if (!o.config.empty()) {
    params = parse_param_document(read_file(o.config));
  } else if (!o.pairs.empty()) {
    params = RawParams(parse_pair_list(o.pairs));
  } else if (!o.values.empty()) {
    params = ReducedParams::numeric(parse_value_list(o.values));
  } else {
    throw Error(ErrorCode::InvalidArgument, "couplings required: --values, --pairs or --config (or --symbolic)");
  }
  check_J(o, std::visit([](const auto& p) { return p.J; }, params));
  return params;
}

ReducedParams reduced_of(const ParamSet& params) {
  if (const auto* raw = std::get_if<RawParams>(&params)) return reduce_regular(*raw);
  return std::get<ReducedParams>(params);
}

RawParams raw_of(const ParamSet& params) {
  if (const auto* raw = std::get_if<RawParams>(&params)) {
    reduce_regular(*raw);
    return *raw;
  }
  return embed(std::get<ReducedParams>(params));
}

ReducedParams symbolic_params(const Options& o) {
  if (o.J < 1) throw Error(ErrorCode::InvalidArgument, "--symbolic needs --J");
  const int limit = std::min(o.symbolic_limit, kMaxCouplings);
  if (o.J > limit) {
    throw Error(ErrorCode::ResourceLimit, "symbolic mode is limited to J <= " + std::to_string(limit));
  }
  return ReducedParams::symbolic(o.J);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.out);
  file << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- secular

int cmd_secular(const Options& o, std::ostream& out) {
  ReducedParams params = o.symbolic ? symbolic_params(o) : reduced_of(numeric_params(o));
  SecularPoly sp = secular_poly(params);
  if (o.format == "json") {
    ordered_json j;
    j["J"] = sp.J;
    j["mode"] = o.symbolic ? "symbolic" : "numeric";
    j["prefactor_power"] = sp.prefactor_power;
    j["polynomial"] = to_string(sp.poly);
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : sp.poly.coeffs()) coeffs.push_back(c.to_string());
    j["coefficients"] = coeffs;
    emit(o, dump(j), out);
  } else {
    emit(o, to_string(sp.poly) + "\n", out);
  }
  return 0;
}

// --------------------------------------------------------------- sturmian

int cmd_sturmian(const Options& o, std::ostream& out) {
  ReducedParams params = o.symbolic ? symbolic_params(o) : reduced_of(numeric_params(o));
  RatFunc f = f_rational(params);
  PartialFraction pf = partial_fractions(f);
  JFraction jf = jfraction(f, params.J);
  std::optional<ShapeClassification> shape;
  if (!o.symbolic) shape = shape_classify(f);

  auto coef_name = [&](char letter, int k, bool tilded) {
    return std::string(1, letter) + std::to_string(k) + (tilded ? "~" : "");
  };
  if (o.format == "json") {
    ordered_json j;
    j["J"] = params.J;
    j["f"] = f.to_string();
    j["N"] = to_string(f.N);
    j["D"] = to_string(f.D);
    j["partial_fraction"] = pf.to_string();
    ordered_json a = ordered_json::array(), b = ordered_json::array();
    for (std::size_t k = 0; k < jf.A.size(); ++k) {
      a.push_back({{"k", k}, {"value", jf.A[k].to_string()}, {"tilded", jf.a_tilded(static_cast<int>(k))}});
    }
    for (std::size_t k = 0; k < jf.B.size(); ++k) {
      b.push_back({{"k", k + 1}, {"value", jf.B[k].to_string()}, {"tilded", jf.b_tilded(static_cast<int>(k + 1))}});
    }
    j["A"] = a;
    j["B"] = b;
    j["tilde_from"] = jf.tilde_from;
    j["terminated"] = true;
    if (shape) {
      ordered_json s;
      s["label"] = shape->label;
      ordered_json poles = ordered_json::array();
      for (auto p : shape->poles) poles.push_back(fmt(p));
      s["poles"] = poles;
      s["complex_poles"] = shape->complex_poles;
      s["real_zeros"] = shape->real_zeros;
      ordered_json ivs = ordered_json::array();
      for (const auto& iv : shape->intervals) {
        ivs.push_back({{"lo", iv.lo ? fmt(*iv.lo) : "-inf"},
                       {"hi", iv.hi ? fmt(*iv.hi) : "inf"},
                       {"zero_count", iv.zero_count},
                       {"full_range", iv.full_range},
                       {"shape", iv.shape}});
      }
      s["intervals"] = ivs;
      s["nominal_intersections"] = shape->nominal_intersections;
      j["shape"] = s;
    }
    emit(o, dump(j), out);
    return 0;
  }
  std::ostringstream s;
  s << "f = " << f.to_string() << "\n";
  s << "N = " << to_string(f.N) << "\n";
  s << "D = " << to_string(f.D) << "\n";
  s << "partial_fraction = " << pf.to_string() << "\n";
  // Interleaved order A0, B1, A1, B2, ...
  for (std::size_t k = 0; k < jf.A.size(); ++k) {
    if (k > 0) s << coef_name('B', static_cast<int>(k), jf.b_tilded(static_cast<int>(k))) << " = " << jf.B[k - 1].to_string() << "\n";
    s << coef_name('A', static_cast<int>(k), jf.a_tilded(static_cast<int>(k))) << " = " << jf.A[k].to_string() << "\n";
  }
  s << "tilde_from = " << jf.tilde_from << "\n";
  s << "terminated = true\n";
  if (shape) {
    s << "shape = " << shape->label << "\n";
    s << "nominal_intersections = " << shape->nominal_intersections << "\n";
  }
  emit(o, s.str(), out);
  return 0;
}

// --------------------------------------------------------------- spectrum

int cmd_spectrum(const Options& o, std::ostream& out) {
  const ParamSet params = numeric_params(o);
  const ReducedParams reduced = reduced_of(params);
  const RawParams raw = raw_of(params);
  const SpectrumReport report = bound_states(reduced, o.tol);

  ordered_json j;
  j["J"] = reduced.J;
  j["secular"] = to_string(report.secular.poly);
  ordered_json states = ordered_json::array();
  std::ostringstream text;
  text << "secular: " << to_string(report.secular.poly) << "\n";
  text << "bound states: " << report.states.size() << "\n";
  for (const auto& s : report.states) {
    ordered_json st;
    st["level"] = s.level;
    st["t"] = fmt(s.t);
    st["phi"] = fmt(s.phi);
    st["energy"] = fmt(s.energy);
    st["multiplicity"] = s.multiplicity;
    st["t_bracket"] = {{"lo", to_string(s.bracket.lo)}, {"hi", to_string(s.bracket.hi)}};
    text << "level " << s.level << ": t=" << fmt(s.t) << " phi=" << fmt(s.phi) << " E=" << fmt(s.energy);
    if (s.multiplicity > 1) text << " multiplicity=" << s.multiplicity;
    text << "\n";
    if (o.wavefunction) {
      Wavefunction wf = wavefunction(raw, s);
      ordered_json w;
      w["lambda"] = fmt(wf.lambda);
      w["rho"] = fmt(wf.rho);
      ordered_json interior = ordered_json::array();
      for (auto v : wf.interior) interior.push_back(fmt(v));
      w["interior"] = interior;
      w["residual"] = fmt(wavefunction_residual(raw, wf, s.energy));
      st["wavefunction"] = w;
      text << "  lambda=" << fmt(wf.lambda) << " rho=" << fmt(wf.rho) << " interior=[";
      for (std::size_t i = 0; i < wf.interior.size(); ++i) text << (i ? ", " : "") << fmt(wf.interior[i]);
      text << "] residual=" << fmt(wavefunction_residual(raw, wf, s.energy)) << "\n";
    }
    states.push_back(st);
  }
  j["states"] = states;
  j["spurious_roots"] = report.census.distinct_unit;
  j["complex_roots"] = report.census.complex_count;
  text << "spurious roots in (0,1]: " << report.census.distinct_unit << ", complex roots: " << report.census.complex_count << "\n";
  emit(o, o.format == "json" ? dump(j) : text.str(), out);
  return 0;
}

// ----------------------------------------------------------------- domain

std::pair<std::string, std::string> split2(const std::string& text, char sep, const std::string& what) {
  auto pos = text.find(sep);
  if (pos == std::string::npos) throw Error(ErrorCode::ParseError, what + " needs two parts: " + text);
  return {text.substr(0, pos), text.substr(pos + 1)};
}

int cmd_domain(const Options& o, std::ostream& out) {
  PlaneSpec plane;
  plane.raw = o.raw;
  const std::string plane_text = o.plane.empty() ? (o.raw ? "a,ap" : "u,v") : o.plane;
  std::tie(plane.param1, plane.param2) = split2(plane_text, ',', "--plane");
  const std::string range_text = o.range.empty() ? "-4:4,-4:4" : o.range;
  auto [r1, r2] = split2(range_text, ',', "--range");
  auto [lo1, hi1] = split2(r1, ':', "--range");
  auto [lo2, hi2] = split2(r2, ':', "--range");
  plane.lo1 = parse_rational(lo1);
  plane.hi1 = parse_rational(hi1);
  plane.lo2 = parse_rational(lo2);
  plane.hi2 = parse_rational(hi2);
  if (o.step.find(',') != std::string::npos) {
    auto [s1, s2] = split2(o.step, ',', "--step");
    plane.step1 = parse_rational(s1);
    plane.step2 = parse_rational(s2);
  } else {
    plane.step1 = plane.step2 = parse_rational(o.step);
  }
  std::vector<BigRational> fixed_reduced;
  std::vector<std::pair<BigRational, BigRational>> fixed_raw;
  if (!o.values.empty()) fixed_reduced = parse_value_list(o.values);
  if (!o.pairs.empty()) fixed_raw = parse_pair_list(o.pairs);
  int J = o.J;
  if (J == 0) J = static_cast<int>(std::max<std::size_t>({fixed_reduced.size(), fixed_raw.size(), 1}));

  const DomainGrid grid = domain_scan(J, plane, fixed_reduced, fixed_raw, o.threads);
  const auto boundaries = boundary_extract(grid);

  auto boundary_json = [&] {
    ordered_json b = ordered_json::array();
    for (const auto& level : boundaries) {
      ordered_json lines = ordered_json::array();
      for (const auto& line : level.polylines) {
        ordered_json pts = ordered_json::array();
        for (const auto& [x, y] : line) pts.push_back({fmt(x), fmt(y)});
        lines.push_back(pts);
      }
      b.push_back({{"level", level.level}, {"polylines", lines}});
    }
    return b;
  };
  if (!o.boundary_out.empty()) {
    std::ofstream file(o.boundary_out);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.boundary_out);
    file << dump(boundary_json());
  }
  if (o.format == "json") {
    ordered_json j;
    j["J"] = J;
    j["plane"] = {{"param1", plane.param1}, {"param2", plane.param2}, {"raw", plane.raw}, {"points", {grid.n1, grid.n2}}};
    ordered_json cells = ordered_json::array();
    for (const auto& c : grid.cells) cells.push_back({fmt(c.p1), fmt(c.p2), c.count, c.complex_flag ? 1 : 0});
    j["cells"] = cells;
    j["boundaries"] = boundary_json();
    emit(o, dump(j), out);
    return 0;
  }
  std::ostringstream csv;
  csv << "param1,param2,count,complex_flag\n";
  for (const auto& c : grid.cells) csv << fmt(c.p1) << "," << fmt(c.p2) << "," << c.count << "," << (c.complex_flag ? 1 : 0) << "\n";
  emit(o, csv.str(), out);
  return 0;
}

// ----------------------------------------------------------------- verify

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

BigRational random_coupling(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 10);
  BigRational q;
  do {
    q = BigRational(num(rng), den(rng));
    q.canonicalize();
  } while (q == 0 || q == -1);
  return q;
}

std::vector<Check> random_suite(int J, int draws, unsigned seed) {
  std::vector<Check> checks;
  std::mt19937 rng(seed);
  for (int k = 0; k < draws; ++k) {
    std::vector<BigRational> values;
    for (int i = 0; i < J; ++i) values.push_back(random_coupling(rng));
    const ReducedParams params = ReducedParams::numeric(values);
    const std::string tag = "draw " + std::to_string(k + 1) + " (" + params.to_string() + ")";

    // Dense determinant against the normalized polynomial at random x.
    const SecularPoly sp = secular_poly(params);
    const QPoly q = to_rational(sp.poly);
    bool dense_ok = true;
    for (int trial = 0; trial < 3; ++trial) {
      BigRational x = random_coupling(rng);
      BigRational lhs = secular_eval_direct(params, x);
      BigRational t = x * x, scale = 1;
      for (int s = 0; s < sp.prefactor_power; ++s) scale *= t;
      if (lhs * scale != q.evaluate(t)) dense_ok = false;
    }
    checks.push_back({"dense determinant " + tag, dense_ok, ""});

    // Factorization identity with the drawn u substituted.
    const RatFunc f = f_rational(params);
    const QPoly n = to_rational(f.N), d = to_rational(f.D);
    const QPoly tq({BigRational(0), BigRational(1)});
    QPoly lhs = n * n - QPoly::constant(BigRational(1 + values[0])) * tq * d * d;
    bool identity_ok = false;
    for (int e = 0; e <= 1 && !identity_ok; ++e) identity_ok = lhs == to_rational(from_rational(q).shifted(e));
    checks.push_back({"factorization identity " + tag, identity_ok, ""});

    // Continued fraction round trip.
    try {
      checks.push_back({"continued fraction round trip " + tag, reconstruct(jfraction(f, J)) == f, ""});
    } catch (const Error& e) {
      checks.push_back({"continued fraction round trip " + tag, e.code() == ErrorCode::DegenerateStep, e.what()});
    }

    // Sturmian coupling recovers u at every physical root.
    bool coupling_ok = true;
    for (const auto& s : bound_states(params).states) {
      try {
        long double u = sturmian_coupling(s.t, f);
        long double want = to_long_double(values[0]);
        if (std::fabs(u - want) > 1e-10L * std::max<long double>(1, std::fabs(want))) coupling_ok = false;
      } catch (const Error&) {
      }
    }
    checks.push_back({"sturmian coupling round trip " + tag, coupling_ok, ""});
  }
  return checks;
}

std::vector<Check> oracle_check(const ParamSet& params, int N) {
  const ReducedParams reduced = reduced_of(params);
  const RawParams raw = raw_of(params);
  const SpectrumReport report = bound_states(reduced, 1e-18);
  const auto eigen = eigen_below_continuum(build_truncated(raw, N));
  std::vector<Check> checks;
  std::vector<bool> used(eigen.size(), false);
  for (const auto& s : report.states) {
    long double best = std::numeric_limits<long double>::infinity();
    std::size_t best_i = eigen.size();
    for (std::size_t i = 0; i < eigen.size(); ++i) {
      if (std::fabs(eigen[i] - s.energy) < best) {
        best = std::fabs(eigen[i] - s.energy);
        best_i = i;
      }
    }
    if (best_i < eigen.size()) used[best_i] = true;
    checks.push_back({"level " + std::to_string(s.level) + " energy " + fmt(s.energy), best < 1e-8L, "difference " + fmt(best)});
  }
  for (std::size_t i = 0; i < eigen.size(); ++i) {
    if (!used[i] && eigen[i] < -1e-6L) checks.push_back({"unmatched eigenvalue " + fmt(eigen[i]), false, ""});
  }
  return checks;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<Check> checks;
  const bool want_oracle = o.oracle_N > 0;
  const bool want_random = o.random > 0;
  const bool want_golden = o.golden || (!want_oracle && !want_random);
  if (want_golden) {
    for (const auto& g : run_golden(o.golden_dir.empty() ? default_golden_dir() : o.golden_dir)) {
      checks.push_back({"golden " + g.name, g.passed, g.passed ? g.message : g.message + " expected " + g.expected + " actual " + g.actual});
    }
  }
  if (want_random) {
    const int J = o.J > 0 ? o.J : 4;
    auto more = random_suite(J, o.random, o.seed);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  if (want_oracle) {
    auto more = oracle_check(numeric_params(o), o.oracle_N);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  if (o.format == "json") {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = arr;
    j["passed"] = all;
    emit(o, dump(j), out);
  } else {
    std::ostringstream s;
    for (const auto& c : checks) {
      s << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) s << ": " << c.detail;
      s << "\n";
    }
    s << (all ? "all checks passed" : "some checks failed") << " (" << checks.size() << ")\n";
    emit(o, s.str(), out);
  }
  return all ? 0 : 1;
}

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
  ordered_json j;
  j["error"] = {{"code", code}, {"message", message}};
  err << j.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact secular equations and bound states of PT-symmetric tridiagonal chains"};
  app.require_subcommand(1);
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--J", o.J, "number of coupling pairs");
    sub->add_option("--values", o.values, "reduced couplings u,v,w,... (exact decimals)");
    sub->add_option("--pairs", o.pairs, "raw pairs a:a',b:b',...");
    sub->add_option("--config", o.config, "parameter document (JSON)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--threads", o.threads, "worker threads (0 = hardware)");
  };
  auto* secular = app.add_subcommand("secular", "normalized secular polynomial in t");
  add_params(secular);
  secular->add_flag("--symbolic", o.symbolic, "keep all couplings symbolic");
  secular->add_option("--symbolic-limit", o.symbolic_limit, "largest J accepted in symbolic mode");

  auto* sturmian = app.add_subcommand("sturmian", "f_J = N/D, partial fractions and continued fraction");
  add_params(sturmian);
  sturmian->add_flag("--symbolic", o.symbolic, "keep all couplings symbolic");
  sturmian->add_option("--symbolic-limit", o.symbolic_limit, "largest J accepted in symbolic mode");

  auto* spectrum = app.add_subcommand("spectrum", "bound states below the continuum");
  add_params(spectrum);
  spectrum->add_option("--tol", o.tol, "relative root tolerance");
  spectrum->add_flag("--wavefunction", o.wavefunction, "include wavefunctions");

  auto* domain = app.add_subcommand("domain", "bound-state counts on a parameter plane");
  add_params(domain);
  domain->add_flag("--raw", o.raw, "scan raw (p, p') parameters");
  domain->add_option("--plane", o.plane, "two parameter names, e.g. u,v or a,ap");
  domain->add_option("--range", o.range, "lo1:hi1,lo2:hi2");
  domain->add_option("--step", o.step, "grid step, or step1,step2");
  domain->add_option("--boundary-out", o.boundary_out, "write boundary polylines (JSON)");

  auto* verify = app.add_subcommand("verify", "golden fixtures, property checks and lattice oracle");
  add_params(verify);
  verify->add_option("--random", o.random, "random parameter draws for the property suite");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_flag("--golden", o.golden, "compare printed-polynomial fixtures");
  verify->add_option("--golden-dir", o.golden_dir, "fixture directory");
  verify->add_option("--oracle-N", o.oracle_N, "truncation half-width for the lattice oracle");

  std::vector<std::string> argv_store{"ptchain"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return 2;
  }
  if (o.format == "csv" && !domain->parsed()) {
    report_error(err, "UsageError", "csv output is only available for domain");
    return 2;
  }
  if (domain->parsed() && o.format == "text") o.format = "csv";
  try {
    if (secular->parsed()) return cmd_secular(o, out);
    if (sturmian->parsed()) return cmd_sturmian(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (domain->parsed()) return cmd_domain(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    report_error(err, error_code_name(e.code()), e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return 2;
  }
  return 2;
}

}  // namespace ptchain
