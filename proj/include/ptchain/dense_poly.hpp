#pragma once

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ptchain/coef.hpp"
#include "ptchain/errors.hpp"
#include "ptchain/rational.hpp"

namespace ptchain {

// Dense univariate polynomial, coefficient k multiplies t^k. The leading
// stored coefficient is nonzero unless the polynomial is zero (empty).
template <typename R>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }

  static DensePoly constant(const R& c) { return DensePoly(std::vector<R>{c}); }
  static DensePoly monomial(const R& c, int k) {
    std::vector<R> coeffs(static_cast<std::size_t>(k) + 1, R(0));
    coeffs.back() = c;
    return DensePoly(std::move(coeffs));
  }
  static DensePoly identity() { return monomial(R(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  R coeff(int k) const {
    if (k < 0 || k > degree()) return R(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const R& leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  DensePoly operator-() const {
    DensePoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  DensePoly& operator+=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero_coef(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (is_zero_coef(b.coeffs_[j])) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return DensePoly(std::move(out));
  }
  friend DensePoly operator*(const R& s, const DensePoly& p) {
    if (is_zero_coef(s)) return {};
    std::vector<R> out;
    out.reserve(p.coeffs_.size());
    for (const auto& c : p.coeffs_) out.push_back(s * c);
    return DensePoly(std::move(out));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    }
    return true;
  }

  // Multiplication by t^k (k may be negative when the low coefficients vanish).
  DensePoly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k > 0) {
      std::vector<R> out(static_cast<std::size_t>(k), R(0));
      out.insert(out.end(), coeffs_.begin(), coeffs_.end());
      return DensePoly(std::move(out));
    }
    for (int i = 0; i < -k; ++i) {
      if (!is_zero_coef(coeff(i))) throw Error(ErrorCode::NotExactDivision, "division by t leaves a remainder");
    }
    return DensePoly(std::vector<R>(coeffs_.begin() + (-k), coeffs_.end()));
  }

  // Quotient and remainder with deg(remainder) < deg(divisor).
  std::pair<DensePoly, DensePoly> divrem(const DensePoly& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const int dd = divisor.degree();
    if (degree() < dd) return {DensePoly{}, *this};
    std::vector<R> rem = coeffs_;
    std::vector<R> quot(static_cast<std::size_t>(degree() - dd) + 1, R(0));
    const R& lead = divisor.leading();
    const bool monic = is_one_coef(lead);
    for (int k = degree() - dd; k >= 0; --k) {
      R& top = rem[static_cast<std::size_t>(k + dd)];
      if (is_zero_coef(top)) continue;
      R q = top;
      if (!monic) q = top / lead;
      for (int i = 0; i <= dd; ++i) {
        rem[static_cast<std::size_t>(k + i)] -= q * divisor.coeffs_[static_cast<std::size_t>(i)];
      }
      quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
  }

  R evaluate(const R& x) const {
    R acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  DensePoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<R> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(R(static_cast<int>(k)) * coeffs_[k]);
    return DensePoly(std::move(out));
  }

  DensePoly monic() const {
    if (is_zero() || is_one_coef(leading())) return *this;
    R inv = R(1) / leading();
    return inv * *this;
  }

  template <typename F>
  auto map(F&& f) const {
    using Out = decltype(f(std::declval<const R&>()));
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return DensePoly<Out>(std::move(out));
  }

 private:
  static bool is_zero_coef(const R& c) {
    if constexpr (std::is_same_v<R, Coef>) {
      return c.is_zero();
    } else {
      return c == 0;
    }
  }
  static bool is_one_coef(const R& c) {
    if constexpr (std::is_same_v<R, Coef>) {
      return c.is_one();
    } else {
      return c == 1;
    }
  }
  void trim() {
    while (!coeffs_.empty() && is_zero_coef(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

using Poly = DensePoly<Coef>;
using QPoly = DensePoly<BigRational>;

// Monic gcd over the coefficient field (Euclid).
template <typename R>
DensePoly<R> poly_gcd(DensePoly<R> a, DensePoly<R> b) {
  while (!b.is_zero()) {
    auto r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Canonical text form: descending degree, exact coefficients, e.g.
// "t^2 - (1+u+2*v)*t + v^2".
std::string to_string(const Poly& p, char var = 't');
std::string to_string(const QPoly& p, char var = 't');

bool is_numeric(const Poly& p);
// Requires every coefficient to be constant.
QPoly to_rational(const Poly& p);
Poly from_rational(const QPoly& p);
// Coefficientwise demotion of constant symbolic coefficients.
Poly demoted(const Poly& p);
Poly substitute(const Poly& p, Var var, const BigRational& value);

// Exact square root with the sign chosen so the leading coefficient is
// positive (monic when p is monic). Throws NotAPerfectSquare.
Poly poly_sqrt(const Poly& p);

// Symbolic-capable gcd of two polynomials in t whose coefficients are
// polynomial in the couplings; the result is monic in t.
Poly poly_gcd_symbolic(const Poly& a, const Poly& b);

// Conversions between a polynomial in t over Coef and a multivariate
// polynomial containing Var::t. to_multipoly clears denominators, returning
// the multiplier used.
MultiPoly to_multipoly(const Poly& p, MultiPoly* cleared_denominator = nullptr);
Poly from_multipoly(const MultiPoly& p);

}  // namespace ptchain
