#include "ptchain/coef.hpp"

#include "ptchain/errors.hpp"

namespace ptchain {

// ------------------------------------------------------- SymbolicFraction

SymbolicFraction::SymbolicFraction(MultiPoly num, MultiPoly den) {
  *this = normalized(std::move(num), std::move(den));
}

SymbolicFraction SymbolicFraction::normalized(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "symbolic fraction with zero denominator");
  if (num.is_zero()) return SymbolicFraction(MultiPoly{}, MultiPoly(1), Reduced{});
  if (den.is_constant()) {
    num *= BigRational(1 / den.constant_value());
    return SymbolicFraction(std::move(num), MultiPoly(1), Reduced{});
  }
  MultiPoly g = gcd(num, den);
  if (!g.is_constant()) {
    num = num.divide_exact(g);
    den = den.divide_exact(g);
  }
  BigRational c = den.content();
  BigRational inv = 1 / c;
  num *= inv;
  den *= inv;
  return SymbolicFraction(std::move(num), std::move(den), Reduced{});
}

SymbolicFraction SymbolicFraction::operator-() const {
  return SymbolicFraction(-num_, den_, Reduced{});
}

SymbolicFraction operator+(const SymbolicFraction& a, const SymbolicFraction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) {
    return SymbolicFraction(a.num_ + b.num_, MultiPoly(1), SymbolicFraction::Reduced{});
  }
  if (a.den_ == b.den_) return SymbolicFraction::normalized(a.num_ + b.num_, a.den_);
  MultiPoly g = gcd(a.den_, b.den_);
  if (g.is_constant()) {
    // Coprime denominators: the sum is already reduced.
    MultiPoly num = a.num_ * b.den_ + b.num_ * a.den_;
    MultiPoly den = a.den_ * b.den_;
    BigRational inv = 1 / den.content();
    num *= inv;
    den *= inv;
    return SymbolicFraction(std::move(num), std::move(den), SymbolicFraction::Reduced{});
  }
  MultiPoly ra = a.den_.divide_exact(g), rb = b.den_.divide_exact(g);
  MultiPoly num = a.num_ * rb + b.num_ * ra;
  MultiPoly den = ra * rb * g;
  if (num.is_zero()) return {};
  MultiPoly h = gcd(num, g);
  if (!h.is_constant()) {
    num = num.divide_exact(h);
    den = den.divide_exact(h);
  }
  BigRational inv = 1 / den.content();
  num *= inv;
  den *= inv;
  return SymbolicFraction(std::move(num), std::move(den), SymbolicFraction::Reduced{});
}

SymbolicFraction operator-(const SymbolicFraction& a, const SymbolicFraction& b) { return a + (-b); }

SymbolicFraction operator*(const SymbolicFraction& a, const SymbolicFraction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) {
    return SymbolicFraction(a.num_ * b.num_, MultiPoly(1), SymbolicFraction::Reduced{});
  }
  MultiPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant()) {
    MultiPoly g = gcd(an, bd);
    if (!g.is_constant()) {
      an = an.divide_exact(g);
      bd = bd.divide_exact(g);
    }
  }
  if (!ad.is_constant()) {
    MultiPoly g = gcd(bn, ad);
    if (!g.is_constant()) {
      bn = bn.divide_exact(g);
      ad = ad.divide_exact(g);
    }
  }
  MultiPoly num = an * bn, den = ad * bd;
  BigRational inv = 1 / den.content();
  num *= inv;
  den *= inv;
  return SymbolicFraction(std::move(num), std::move(den), SymbolicFraction::Reduced{});
}

SymbolicFraction operator/(const SymbolicFraction& a, const SymbolicFraction& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by a zero coefficient");
  if (a.is_zero()) return {};
  // b inverted: den b.num_ normalized to positive primitive form.
  BigRational c = b.num_.content();
  BigRational inv = 1 / c;
  SymbolicFraction inverse(b.den_ * inv, b.num_ * inv, SymbolicFraction::Reduced{});
  return a * inverse;
}

std::string SymbolicFraction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string num = num_.to_string();
  if (num_.term_count() > 1) num = "(" + num + ")";
  std::string den = den_.to_string();
  bool den_plain = den_.term_count() == 1 && den_.leading().coef == 1;
  if (!den_plain) den = "(" + den + ")";
  return num + "/" + den;
}

// ------------------------------------------------------------------- Coef

const BigRational& Coef::numeric() const {
  if (!is_numeric()) throw Error(ErrorCode::InvalidArgument, "coefficient is symbolic: " + to_string());
  return std::get<BigRational>(value_);
}

SymbolicFraction Coef::symbolic() const {
  if (is_numeric()) return SymbolicFraction(MultiPoly(std::get<BigRational>(value_)));
  return std::get<SymbolicFraction>(value_);
}

bool Coef::is_zero() const {
  if (is_numeric()) return std::get<BigRational>(value_) == 0;
  return std::get<SymbolicFraction>(value_).is_zero();
}

bool Coef::is_one() const { return is_constant() && constant_value() == 1; }

bool Coef::is_constant() const {
  if (is_numeric()) return true;
  return std::get<SymbolicFraction>(value_).is_constant();
}

BigRational Coef::constant_value() const {
  if (is_numeric()) return std::get<BigRational>(value_);
  const auto& f = std::get<SymbolicFraction>(value_);
  if (!f.is_constant()) throw Error(ErrorCode::InvalidArgument, "coefficient is not constant: " + f.to_string());
  return f.numerator().constant_value() / f.denominator().constant_value();
}

Coef Coef::demoted() const {
  if (is_numeric() || !is_constant()) return *this;
  return Coef(constant_value());
}

Coef Coef::operator-() const {
  if (is_numeric()) return Coef(BigRational(-std::get<BigRational>(value_)));
  return Coef(-std::get<SymbolicFraction>(value_));
}

Coef operator+(const Coef& a, const Coef& b) {
  if (a.is_numeric() && b.is_numeric()) return Coef(BigRational(a.numeric() + b.numeric()));
  return Coef(a.symbolic() + b.symbolic());
}

Coef operator-(const Coef& a, const Coef& b) {
  if (a.is_numeric() && b.is_numeric()) return Coef(BigRational(a.numeric() - b.numeric()));
  return Coef(a.symbolic() - b.symbolic());
}

Coef operator*(const Coef& a, const Coef& b) {
  if (a.is_numeric() && b.is_numeric()) return Coef(BigRational(a.numeric() * b.numeric()));
  return Coef(a.symbolic() * b.symbolic());
}

Coef operator/(const Coef& a, const Coef& b) {
  if (a.is_numeric() && b.is_numeric()) {
    if (b.numeric() == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
    return Coef(BigRational(a.numeric() / b.numeric()));
  }
  return Coef(a.symbolic() / b.symbolic());
}

bool operator==(const Coef& a, const Coef& b) {
  if (a.is_numeric() && b.is_numeric()) return a.numeric() == b.numeric();
  return a.symbolic() == b.symbolic();
}

Coef Coef::substitute(Var var, const BigRational& value) const {
  if (is_numeric()) return *this;
  const auto& f = std::get<SymbolicFraction>(value_);
  MultiPoly den = f.denominator().substitute(var, value);
  if (den.is_zero()) {
    throw Error(ErrorCode::DivisionByZero,
                std::string("denominator vanishes at ") + var_name(var) + "=" + ptchain::to_string(value));
  }
  return Coef(SymbolicFraction(f.numerator().substitute(var, value), den));
}

BigRational Coef::evaluate(const std::map<Var, BigRational>& point) const {
  if (is_numeric()) return numeric();
  const auto& f = std::get<SymbolicFraction>(value_);
  BigRational den = f.denominator().evaluate(point);
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes at evaluation point");
  return f.numerator().evaluate(point) / den;
}

int Coef::display_sign() const {
  if (is_numeric()) return sgn(numeric());
  const auto& terms = std::get<SymbolicFraction>(value_).numerator().terms();
  if (terms.empty()) return 0;
  // First printed term: lowest total degree, highest key within it.
  std::size_t i = terms.size() - 1;
  const int low = Monomial::total_degree(terms[i].key);
  while (i > 0 && Monomial::total_degree(terms[i - 1].key) == low) --i;
  return sgn(terms[i].coef);
}

bool Coef::is_atomic() const {
  if (is_numeric()) return true;
  const auto& f = std::get<SymbolicFraction>(value_);
  return f.is_polynomial() && f.numerator().term_count() <= 1;
}

std::string Coef::to_string() const {
  if (is_numeric()) return ptchain::to_string(numeric());
  return std::get<SymbolicFraction>(value_).to_string();
}

}  // namespace ptchain
