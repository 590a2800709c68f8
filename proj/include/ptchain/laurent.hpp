#pragma once

#include <string>
#include <vector>

#include "ptchain/dense_poly.hpp"

namespace ptchain {

// Polynomial in x and 1/x: coefficient i multiplies x^(min_exponent + i).
// The first and last stored coefficients are nonzero unless the polynomial
// is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int min_exponent, std::vector<Coef> coeffs);

  static LaurentPoly monomial(const Coef& c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return min_exp_; }
  int max_exponent() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  Coef coeff(int exponent) const;
  const std::vector<Coef>& coeffs() const { return coeffs_; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Coef& s, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
  }
  LaurentPoly shifted(int k) const;

  bool has_only_even_exponents() const;
  // Substitutes t = x^2; requires even exponents. Returns the polynomial in t
  // after multiplication by t^s, with s = max(0, -min exponent in t).
  Poly to_t_polynomial(int* prefactor_power) const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();

  int min_exp_ = 0;
  std::vector<Coef> coeffs_;
};

}  // namespace ptchain
