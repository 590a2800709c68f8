#include "ptchain/sturmian.hpp"

#include <algorithm>
#include <cmath>

#include "ptchain/errors.hpp"
#include "ptchain/roots.hpp"

namespace ptchain {

namespace {

[[noreturn]] void factorization_failed(const std::string& why) { throw Error(ErrorCode::FactorizationFailed, why); }

// Splits each coefficient c = c0 + u c1.
std::pair<Poly, Poly> split_affine_in_u(const Poly& p) {
  std::vector<Coef> p0, p1;
  for (const auto& c : p.coeffs()) {
    if (c.is_constant()) {
      p0.push_back(c.demoted());
      p1.emplace_back(0);
      continue;
    }
    const SymbolicFraction f = c.symbolic();
    if (f.denominator().contains(Var::u)) factorization_failed("coefficient has u in its denominator: " + c.to_string());
    auto parts = f.numerator().coefficients_in(Var::u);
    if (parts.size() > 2) factorization_failed("secular polynomial is not affine in u");
    parts.resize(2);
    p0.push_back(Coef(SymbolicFraction(parts[0], f.denominator())).demoted());
    p1.push_back(Coef(SymbolicFraction(parts[1], f.denominator())).demoted());
  }
  return {Poly(std::move(p0)), Poly(std::move(p1))};
}

std::string paren_if_needed(const Coef& c) {
  std::string s = c.to_string();
  return c.is_atomic() ? s : "(" + s + ")";
}

long double eval_ld(const QPoly& p, long double x) {
  long double acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + to_long_double(p.coeff(k));
  return acc;
}

}  // namespace

std::string RatFunc::to_string() const {
  if (D.degree() == 0) return ptchain::to_string(N);
  return "(" + ptchain::to_string(N) + ")/(" + ptchain::to_string(D) + ")";
}

Factorization factorize(const SecularPoly& secular) {
  auto [P0, P1] = split_affine_in_u(secular.poly);
  if (P1.is_zero()) factorization_failed("secular polynomial does not depend on u");
  const Poly tu = Poly({Coef(0), Coef::variable(Var::u)}) + Poly::identity();  // t(1+u)
  for (int extra = 0; extra <= 1; ++extra) {
    Poly p0 = P0.shifted(extra), p1 = P1.shifted(extra);
    if (!p1.coeff(0).is_zero()) continue;
    Factorization out;
    out.extra_t_power = extra;
    try {
      out.D = poly_sqrt(-p1.shifted(-1));
      out.N = poly_sqrt(p0 - p1);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotAPerfectSquare) continue;
      throw;
    }
    Poly lhs = out.N * out.N - tu * (out.D * out.D);
    if (!(demoted(lhs) == demoted(secular.poly.shifted(extra)))) {
      factorization_failed("N^2 - t(1+u)D^2 does not reproduce the secular polynomial");
    }
    return out;
  }
  factorization_failed("u-coefficient or u=-1 specialization is not a perfect square");
}

RatFunc normalize(Poly N, Poly D) {
  if (D.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (D.degree() > 0 && N.degree() > 0) {
    Poly g = poly_gcd_symbolic(N, D);
    if (g.degree() > 0) {
      auto [qn, rn] = N.divrem(g);
      auto [qd, rd] = D.divrem(g);
      if (!rn.is_zero() || !rd.is_zero()) throw Error(ErrorCode::NotExactDivision, "gcd does not divide N and D");
      N = std::move(qn);
      D = std::move(qd);
    }
  }
  Coef scale = D.leading();
  if (!scale.is_one()) {
    N = (Coef(1) / scale) * N;
    D = (Coef(1) / scale) * D;
  }
  Coef lead = N.leading();
  if (!lead.is_one()) {
    // Only an overall sign or constant can remain; keep D monic and N exact.
    if (!lead.is_constant()) throw Error(ErrorCode::InvalidArgument, "numerator leading coefficient is not constant");
  }
  return {demoted(N), demoted(D)};
}

RatFunc f_rational(const ReducedParams& others) {
  Factorization fac = factorize(secular_poly(others, /*keep_u_symbolic=*/true));
  return normalize(std::move(fac.N), std::move(fac.D));
}

BigRational sturmian_coupling(const BigRational& t, const RatFunc& f) {
  BigRational d = to_rational(f.D).evaluate(t);
  if (d == 0 || t == 0) throw Error(ErrorCode::PoleHit, "denominator of f vanishes at t=" + to_string(t));
  BigRational n = to_rational(f.N).evaluate(t);
  return n * n / (t * d * d) - 1;
}

long double sturmian_coupling(long double t, const RatFunc& f) {
  QPoly nq = to_rational(f.N), dq = to_rational(f.D);
  long double d = eval_ld(dq, t);
  if (d == 0 || t == 0) throw Error(ErrorCode::PoleHit, "denominator of f vanishes at the requested t");
  long double n = eval_ld(nq, t);
  return n * n / (t * d * d) - 1;
}

std::string PartialFraction::to_string() const {
  std::string out = "t";
  if (!A0.is_zero()) {
    if (A0.display_sign() < 0) {
      out += " + " + paren_if_needed(-A0);
    } else {
      out += " - " + paren_if_needed(A0);
    }
  }
  if (!R.is_zero()) {
    const bool flip = R.degree() == 0 && R.coeff(0).display_sign() < 0;
    std::string r = R.degree() == 0 ? paren_if_needed(flip ? -R.coeff(0) : R.coeff(0)) : "(" + ptchain::to_string(R) + ")";
    out += (flip ? " + " : " - ") + r + "/(" + ptchain::to_string(D) + ")";
  }
  return out;
}

PartialFraction partial_fractions(const RatFunc& f) {
  auto [q, r] = f.N.divrem(f.D);
  if (q.degree() != 1 || !q.leading().is_one()) {
    throw Error(ErrorCode::InvalidArgument, "f is not of the form t + O(1): " + f.to_string());
  }
  PartialFraction pf;
  pf.A0 = -q.coeff(0);
  pf.R = -r;
  pf.D = f.D;
  if (is_numeric(f.D) && f.D.degree() > 0 && !pf.R.is_zero()) {
    QPoly dq = to_rational(f.D), rq = to_rational(pf.R), ddq = dq.derivative();
    for (const auto& bracket : sturm_isolate(dq, std::nullopt, std::nullopt)) {
      if (bracket.multiplicity != 1) continue;
      long double g = refine_root(dq, bracket, 1e-15);
      pf.poles.push_back({g, eval_ld(rq, g) / eval_ld(ddq, g)});
    }
  }
  return pf;
}

JFraction jfraction(const RatFunc& f, int J) {
  JFraction jf;
  jf.tilde_from = J - 1;
  Poly num = f.N, den = f.D;
  for (int level = 0;; ++level) {
    auto [q, r] = num.divrem(den);
    if (q.degree() != 1 || !q.leading().is_one()) {
      throw Error(ErrorCode::DegenerateStep, "level " + std::to_string(level) + ": quotient is not monic linear");
    }
    jf.A.push_back(demoted(Poly::constant(-q.coeff(0))).coeff(0));
    if (r.is_zero()) break;
    if (r.degree() != den.degree() - 1) {
      throw Error(ErrorCode::DegenerateStep,
                  "level " + std::to_string(level) + ": remainder degree drops from " + std::to_string(den.degree()) +
                      " to " + std::to_string(r.degree()));
    }
    Coef lc = r.leading();
    jf.B.push_back((-lc).demoted());
    Poly next = (Coef(1) / lc) * r;
    num = std::move(den);
    den = demoted(next);
  }
  return jf;
}

RatFunc reconstruct(const JFraction& jf) {
  if (jf.A.empty()) throw Error(ErrorCode::InvalidArgument, "empty continued fraction");
  const std::size_t last = jf.A.size() - 1;
  Poly num = Poly::identity() - Poly::constant(jf.A[last]);
  Poly den = Poly::constant(Coef(1));
  for (std::size_t k = last; k-- > 0;) {
    // f_k = t - A_k - B_{k+1} / f_{k+1}
    Poly next_num = (Poly::identity() - Poly::constant(jf.A[k])) * num - jf.B[k] * den;
    den = std::move(num);
    num = std::move(next_num);
  }
  return normalize(std::move(num), std::move(den));
}

ShapeClassification shape_classify(const RatFunc& f) {
  if (!is_numeric(f.N) || !is_numeric(f.D)) {
    throw Error(ErrorCode::InvalidArgument, "shape classification needs numeric couplings");
  }
  ShapeClassification sc;
  const QPoly nq = to_rational(f.N), dq = to_rational(f.D);
  int real_pole_mult = 0;
  for (const auto& b : sturm_isolate(dq, std::nullopt, std::nullopt)) {
    sc.poles.push_back(refine_root(dq, b, 1e-15));
    real_pole_mult += b.multiplicity;
  }
  sc.complex_poles = std::max(0, dq.degree()) - real_pole_mult;
  std::vector<std::pair<long double, int>> zeros;
  for (const auto& b : sturm_isolate(nq, std::nullopt, std::nullopt)) {
    zeros.emplace_back(refine_root(nq, b, 1e-15), b.multiplicity);
    sc.real_zeros += b.multiplicity;
  }
  const std::size_t n_int = sc.poles.size() + 1;
  for (std::size_t i = 0; i < n_int; ++i) {
    ShapeInterval iv;
    if (i > 0) iv.lo = sc.poles[i - 1];
    if (i < sc.poles.size()) iv.hi = sc.poles[i];
    std::optional<long double> first_zero;
    for (const auto& [z, mult] : zeros) {
      if ((!iv.lo || z > *iv.lo) && (!iv.hi || z < *iv.hi)) {
        iv.zero_count += mult;
        if (!first_zero || z < *first_zero) first_zero = z;
      }
    }
    iv.full_range = iv.zero_count % 2 == 1;
    if (iv.full_range) {
      iv.shape = "/";
      ++sc.full_range_count;
    } else {
      int side_sign;
      if (!iv.lo) {
        side_sign = -1;  // f ~ t as t -> -infinity
      } else if (!iv.hi) {
        side_sign = 1;
      } else {
        long double right = first_zero ? *first_zero : *iv.hi;
        long double probe = (*iv.lo + right) / 2;
        long double value = eval_ld(nq, probe) / eval_ld(dq, probe);
        side_sign = value < 0 ? -1 : 1;
      }
      iv.shape = side_sign < 0 ? "cap" : "cup";
    }
    if (!sc.label.empty()) sc.label += "+";
    sc.label += iv.shape;
    sc.intervals.push_back(std::move(iv));
  }
  sc.nominal_intersections = 2 * sc.full_range_count;
  return sc;
}

}  // namespace ptchain
