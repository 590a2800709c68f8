#include "ptchain/golden.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ptchain/errors.hpp"
#include "ptchain/parse.hpp"
#include "ptchain/sturmian.hpp"

#ifndef PTCHAIN_GOLDEN_DIR
#define PTCHAIN_GOLDEN_DIR "data/golden"
#endif

namespace ptchain {

namespace {

std::string read_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open fixture " + path);
  std::string line, text;
  while (std::getline(in, line)) text += line;
  return text;
}

SymbolicFraction as_fraction(const Poly& p) { return SymbolicFraction(to_multipoly(p)); }

SymbolicFraction as_fraction(const RatFunc& f) {
  MultiPoly dn, dd;
  MultiPoly n = to_multipoly(f.N, &dn), d = to_multipoly(f.D, &dd);
  // N/D = (n/dn)/(d/dd)
  return SymbolicFraction(n * dd, d * dn);
}

}  // namespace

std::string canonical_of(const SymbolicFraction& f) { return f.to_string(); }

std::string canonical_expression(const std::string& text) { return canonical_of(parse_expression(text)); }

std::string canonical_up_to_sign(const std::string& text) {
  SymbolicFraction f = parse_expression(text);
  auto by_t = f.numerator().coefficients_in(Var::t);
  if (!by_t.empty() && by_t.back().content() < 0) f = -f;
  return canonical_of(f);
}

std::string default_golden_dir() { return PTCHAIN_GOLDEN_DIR; }

std::vector<GoldenResult> run_golden(const std::string& dir) {
  std::map<int, RatFunc> f;
  auto f_of = [&](int J) -> const RatFunc& {
    auto it = f.find(J);
    if (it == f.end()) it = f.emplace(J, f_rational(ReducedParams::symbolic(J))).first;
    return it->second;
  };
  std::map<int, JFraction> jf;
  auto jf_of = [&](int J) -> const JFraction& {
    auto it = jf.find(J);
    if (it == jf.end()) it = jf.emplace(J, jfraction(f_of(J), J)).first;
    return it->second;
  };

  struct Fixture {
    std::string name;
    bool up_to_sign;
    std::function<SymbolicFraction()> compute;
  };
  auto coef = [](const Coef& c) { return c.symbolic(); };
  const std::vector<Fixture> fixtures = {
      {"secular_j2", false, [] { return as_fraction(secular_poly(ReducedParams::symbolic(2)).poly); }},
      {"secular_j3", false, [] { return as_fraction(secular_poly(ReducedParams::symbolic(3)).poly); }},
      {"secular_j4", false, [] { return as_fraction(secular_poly(ReducedParams::symbolic(4)).poly); }},
      {"f_j1", false, [&] { return as_fraction(f_of(1)); }},
      {"f_j2", false, [&] { return as_fraction(f_of(2)); }},
      {"f_j3", false, [&] { return as_fraction(f_of(3)); }},
      {"f_j3_partial", false, [&] { return as_fraction(f_of(3)); }},
      {"f_j4_numerator", true, [&] { return as_fraction(f_of(4).N); }},
      {"f_j4_denominator", true, [&] { return as_fraction(f_of(4).D); }},
      {"f_j4_partial", false, [&] { return as_fraction(f_of(4)); }},
      {"f_j7_numerator", true, [&] { return as_fraction(f_of(7).N); }},
      {"f_j7_denominator", true, [&] { return as_fraction(f_of(7).D); }},
      {"jfraction_j4_A0", false, [&] { return coef(jf_of(4).A.at(0)); }},
      {"jfraction_j4_B1", false, [&] { return coef(jf_of(4).B.at(0)); }},
      {"jfraction_j4_A1", false, [&] { return coef(jf_of(4).A.at(1)); }},
      {"jfraction_j4_B2_tilde", false, [&] { return coef(jf_of(4).B.at(1)); }},
      {"jfraction_j4_A2_tilde", false, [&] { return coef(jf_of(4).A.at(2)); }},
      {"jfraction_j5_B2", true, [&] { return coef(jf_of(5).B.at(1)); }},
      {"jfraction_j6_A2", false, [&] { return coef(jf_of(6).A.at(2)); }},
  };

  std::vector<GoldenResult> results;
  for (const auto& fx : fixtures) {
    GoldenResult r;
    r.name = fx.name;
    try {
      std::string text = read_fixture(dir + "/" + fx.name + ".txt");
      r.expected = canonical_expression(text);
      const SymbolicFraction value = fx.compute();
      r.actual = canonical_of(value);
      r.passed = r.expected == r.actual;
      if (!r.passed && fx.up_to_sign && r.expected == canonical_of(-value)) {
        r.passed = true;
        r.message = "matches up to overall sign";
      }
      if (!r.passed) r.message = "canonical forms differ";
    } catch (const std::exception& e) {
      r.message = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ptchain
