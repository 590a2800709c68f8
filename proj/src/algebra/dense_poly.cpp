#include "ptchain/dense_poly.hpp"

namespace ptchain {

namespace {

std::string power_of(char var, int k) {
  std::string s(1, var);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Coef& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c.display_sign() < 0;
    const Coef magnitude = negative ? -c : c;
    std::string body;
    if (k == 0) {
      body = magnitude.to_string();
      if (!magnitude.is_atomic()) body = "(" + body + ")";
    } else if (magnitude.is_one()) {
      body = power_of(var, k);
    } else {
      body = magnitude.to_string();
      if (!magnitude.is_atomic()) body = "(" + body + ")";
      body += "*" + power_of(var, k);
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

std::string to_string(const QPoly& p, char var) { return to_string(from_rational(p), var); }

bool is_numeric(const Poly& p) {
  for (const auto& c : p.coeffs()) {
    if (!c.is_constant()) return false;
  }
  return true;
}

QPoly to_rational(const Poly& p) {
  std::vector<BigRational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.constant_value());
  return QPoly(std::move(out));
}

Poly from_rational(const QPoly& p) {
  return p.map([](const BigRational& c) { return Coef(c); });
}

Poly demoted(const Poly& p) {
  return p.map([](const Coef& c) { return c.demoted(); });
}

Poly substitute(const Poly& p, Var var, const BigRational& value) {
  return p.map([&](const Coef& c) { return c.substitute(var, value); });
}

Poly poly_sqrt(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "square root of the zero polynomial");
  if (p.degree() % 2 != 0) {
    throw Error(ErrorCode::NotAPerfectSquare, "odd degree polynomial is not a square: " + to_string(p));
  }
  const Coef& lead = p.leading();
  if (!lead.is_constant()) {
    throw Error(ErrorCode::NotAPerfectSquare, "leading coefficient is not a rational square: " + lead.to_string());
  }
  auto root = rational_sqrt(lead.constant_value());
  if (!root) {
    throw Error(ErrorCode::NotAPerfectSquare, "leading coefficient is not a rational square: " + lead.to_string());
  }
  const int h = p.degree() / 2;
  std::vector<Coef> q(static_cast<std::size_t>(h) + 1);
  q[static_cast<std::size_t>(h)] = lead.is_numeric() ? Coef(*root) : Coef(MultiPoly(*root));
  const Coef twice_lead = Coef(2) * q[static_cast<std::size_t>(h)];
  for (int k = h - 1; k >= 0; --k) {
    Coef s = p.coeff(h + k);
    for (int i = k + 1; i <= h - 1; ++i) {
      s -= q[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(h + k - i)];
    }
    q[static_cast<std::size_t>(k)] = s / twice_lead;
  }
  Poly result(std::move(q));
  if (!(result * result == p)) {
    throw Error(ErrorCode::NotAPerfectSquare, "polynomial is not a perfect square: " + to_string(p));
  }
  return result;
}

MultiPoly to_multipoly(const Poly& p, MultiPoly* cleared_denominator) {
  MultiPoly lcm(1);
  for (const auto& c : p.coeffs()) {
    if (c.is_zero() || c.is_numeric()) continue;
    const MultiPoly den = c.symbolic().denominator();
    if (den.is_constant()) continue;
    MultiPoly g = gcd(lcm, den);
    lcm = lcm * den.divide_exact(g);
  }
  MultiPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Coef& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    SymbolicFraction f = c.symbolic();
    MultiPoly term = f.numerator() * lcm.divide_exact(f.denominator());
    out += term * MultiPoly::monomial(Monomial::of(Var::t, k), BigRational(1));
  }
  if (cleared_denominator) *cleared_denominator = lcm;
  return out;
}

Poly from_multipoly(const MultiPoly& p) {
  std::vector<Coef> out;
  for (auto& c : p.coefficients_in(Var::t)) out.emplace_back(c);
  return Poly(std::move(out));
}

Poly poly_gcd_symbolic(const Poly& a, const Poly& b) {
  if (is_numeric(a) && is_numeric(b)) {
    return from_rational(poly_gcd(to_rational(a), to_rational(b)));
  }
  MultiPoly g = gcd(to_multipoly(a), to_multipoly(b));
  auto coeffs = g.coefficients_in(Var::t);
  if (coeffs.size() <= 1) return Poly::constant(Coef(1));
  MultiPoly content;
  for (const auto& c : coeffs) content = gcd(content, c);
  std::vector<Coef> out;
  for (const auto& c : coeffs) out.emplace_back(c.divide_exact(content));
  return Poly(std::move(out)).monic();
}

}  // namespace ptchain
