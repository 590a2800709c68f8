#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptchain/rational.hpp"

namespace ptchain {

// Symbols of the polynomial ring. The reduced couplings are listed innermost
// first; t is only used internally (gcd of numerator/denominator pairs and
// expression parsing).
enum class Var : std::uint8_t { t = 0, u, v, w, y, z, m, n };

inline constexpr int kNumVars = 8;
inline constexpr int kMaxTotalDegree = 63;

char var_name(Var var);
std::optional<Var> var_from_name(std::string_view name);
// k-th reduced coupling (0 -> u, 1 -> v, ...); k < 7.
Var coupling_var(int k);

// Packed exponent vector: total degree in bits 48..63, variable i in a 6-bit
// field at bit (7 - i) * 6. Integer comparison of keys is graded lex order
// with t > u > v > ... > n.
class Monomial {
 public:
  using Key = std::uint64_t;

  static Key one() { return 0; }
  static Key make(const std::array<int, kNumVars>& exponents);
  static Key of(Var var, int power = 1);

  static int exponent(Key key, Var var) {
    return static_cast<int>((key >> shift(var)) & 0x3F);
  }
  static int total_degree(Key key) { return static_cast<int>(key >> 48); }
  static Key multiply(Key a, Key b);
  static bool divides(Key divisor, Key dividend);
  static Key divide(Key dividend, Key divisor) { return dividend - divisor; }
  static Key without(Key key, Var var);
  static std::string to_string(Key key);

 private:
  static int shift(Var var) { return (7 - static_cast<int>(var)) * 6; }
};

// Sparse multivariate polynomial over the rationals. Terms are kept sorted
// by descending monomial key with no zero coefficients, so equality is
// structural.
class MultiPoly {
 public:
  struct Term {
    Monomial::Key key;
    BigRational coef;
  };

  MultiPoly() = default;
  MultiPoly(const BigRational& constant);  // NOLINT: implicit by design of the ring
  MultiPoly(int constant) : MultiPoly(BigRational(constant)) {}

  static MultiPoly variable(Var var);
  static MultiPoly monomial(Monomial::Key key, const BigRational& coef);
  static MultiPoly from_terms(std::vector<Term> terms);  // any order, duplicates summed

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_value() const;  // coefficient of the unit monomial
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  int degree(Var var) const;
  int total_degree() const;
  bool contains(Var var) const { return degree(var) > 0; }
  std::vector<Var> variables() const;
  std::uint32_t variable_mask() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const BigRational& scalar);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& s) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned exponent) const;

  // Exact quotient if divisor divides *this, otherwise nullopt.
  std::optional<MultiPoly> try_divide(const MultiPoly& divisor) const;
  // Throws Error(NotExactDivision) when the division leaves a remainder.
  MultiPoly divide_exact(const MultiPoly& divisor) const;

  MultiPoly substitute(Var var, const BigRational& value) const;
  MultiPoly substitute(Var var, const MultiPoly& value) const;
  BigRational evaluate(const std::map<Var, BigRational>& point) const;

  // Coefficients as a polynomial in var (index = power); var is removed.
  std::vector<MultiPoly> coefficients_in(Var var) const;
  static MultiPoly from_coefficients_in(Var var, const std::vector<MultiPoly>& coeffs);

  // Rational content: c with *this / c having coprime integer coefficients and
  // a positive leading coefficient.
  BigRational content() const;
  MultiPoly primitive() const;

  // Terms in ascending total degree, ties in descending key order, e.g.
  // "1+u+2*v" or "-w^2*u".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

// Greatest common divisor of maximal total degree, normalized to coprime
// integer coefficients with a positive leading coefficient; gcd with a nonzero
// constant is 1. Recursive primitive polynomial remainder sequences.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace ptchain
