#pragma once

#include <map>
#include <string>
#include <variant>

#include "ptchain/multipoly.hpp"

namespace ptchain {

// Reduced fraction of multivariate polynomials. The denominator has coprime
// integer coefficients and a positive leading coefficient.
class SymbolicFraction {
 public:
  SymbolicFraction() : den_(1) {}
  SymbolicFraction(MultiPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  SymbolicFraction(MultiPoly num, MultiPoly den);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  friend SymbolicFraction operator+(const SymbolicFraction& a, const SymbolicFraction& b);
  friend SymbolicFraction operator-(const SymbolicFraction& a, const SymbolicFraction& b);
  friend SymbolicFraction operator*(const SymbolicFraction& a, const SymbolicFraction& b);
  friend SymbolicFraction operator/(const SymbolicFraction& a, const SymbolicFraction& b);
  SymbolicFraction operator-() const;
  friend bool operator==(const SymbolicFraction& a, const SymbolicFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  struct Reduced {};
  SymbolicFraction(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  static SymbolicFraction normalized(MultiPoly num, MultiPoly den);

  MultiPoly num_;
  MultiPoly den_;
};

// A coefficient of a polynomial in t: either a plain rational (numeric mode)
// or a rational function of the reduced couplings (symbolic mode). Mixed
// arithmetic promotes to symbolic.
class Coef {
 public:
  Coef() : value_(BigRational(0)) {}
  Coef(int value) : value_(BigRational(value)) {}                    // NOLINT
  Coef(const BigRational& value) : value_(value) {}                  // NOLINT
  Coef(const MultiPoly& value) : value_(SymbolicFraction(value)) {}  // NOLINT
  Coef(const SymbolicFraction& value) : value_(value) {}             // NOLINT

  static Coef variable(Var var) { return Coef(MultiPoly::variable(var)); }

  bool is_numeric() const { return std::holds_alternative<BigRational>(value_); }
  bool is_symbolic() const { return !is_numeric(); }
  const BigRational& numeric() const;
  SymbolicFraction symbolic() const;  // numeric values are promoted

  bool is_zero() const;
  bool is_one() const;
  // True when the value does not depend on any variable.
  bool is_constant() const;
  // The rational value of a constant coefficient.
  BigRational constant_value() const;
  // Symbolic constants become numeric.
  Coef demoted() const;

  Coef operator-() const;
  Coef& operator+=(const Coef& o) { return *this = *this + o; }
  Coef& operator-=(const Coef& o) { return *this = *this - o; }
  Coef& operator*=(const Coef& o) { return *this = *this * o; }
  Coef& operator/=(const Coef& o) { return *this = *this / o; }
  friend Coef operator+(const Coef& a, const Coef& b);
  friend Coef operator-(const Coef& a, const Coef& b);
  friend Coef operator*(const Coef& a, const Coef& b);
  friend Coef operator/(const Coef& a, const Coef& b);
  // Value equality across modes.
  friend bool operator==(const Coef& a, const Coef& b);

  Coef substitute(Var var, const BigRational& value) const;
  BigRational evaluate(const std::map<Var, BigRational>& point) const;

  // Sign used when pulling a minus out of a printed term: the sign of the
  // first printed numerator term.
  int display_sign() const;
  // True when the printed form is a single factor that needs no parentheses
  // in a product.
  bool is_atomic() const;
  std::string to_string() const;

 private:
  std::variant<BigRational, SymbolicFraction> value_;
};

}  // namespace ptchain
