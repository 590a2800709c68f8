#include "ptchain/laurent.hpp"

#include <algorithm>

namespace ptchain {

LaurentPoly::LaurentPoly(int min_exponent, std::vector<Coef> coeffs)
    : min_exp_(min_exponent), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const Coef& c, int exponent) { return LaurentPoly(exponent, {c}); }

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_exp_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) min_exp_ = 0;
}

Coef LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < min_exp_ || exponent > max_exponent()) return Coef(0);
  return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.min_exp_, b.min_exp_);
  const int hi = std::max(a.max_exponent(), b.max_exponent());
  std::vector<Coef> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i + static_cast<std::size_t>(a.min_exp_ - lo)] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i + static_cast<std::size_t>(b.min_exp_ - lo)] += b.coeffs_[i];
  return LaurentPoly(lo, std::move(out));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coef> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentPoly(a.min_exp_ + b.min_exp_, std::move(out));
}

LaurentPoly operator*(const Coef& s, const LaurentPoly& p) {
  if (s.is_zero() || p.is_zero()) return {};
  std::vector<Coef> out;
  out.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.push_back(s * c);
  return LaurentPoly(p.min_exp_, std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.min_exp_ += k;
  return p;
}

bool LaurentPoly::has_only_even_exponents() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    int e = min_exp_ + static_cast<int>(i);
    if (e % 2 != 0 && !coeffs_[i].is_zero()) return false;
  }
  return true;
}

Poly LaurentPoly::to_t_polynomial(int* prefactor_power) const {
  if (!has_only_even_exponents()) {
    throw Error(ErrorCode::OddExponentFound, "Laurent polynomial has odd exponents: " + to_string());
  }
  if (is_zero()) {
    if (prefactor_power) *prefactor_power = 0;
    return {};
  }
  const int min_t = min_exp_ / 2;  // exact: min_exp_ is even here
  const int s = std::max(0, -min_t);
  std::vector<Coef> out(static_cast<std::size_t>(max_exponent() / 2 + s) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); i += 2) {
    int e = (min_exp_ + static_cast<int>(i)) / 2 + s;
    out[static_cast<std::size_t>(e)] = coeffs_[i];
  }
  if (prefactor_power) *prefactor_power = s;
  return Poly(std::move(out));
}

std::string LaurentPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = max_exponent(); e >= min_exp_; --e) {
    Coef c = coeff(e);
    if (c.is_zero()) continue;
    const bool negative = c.display_sign() < 0;
    const Coef magnitude = negative ? -c : c;
    std::string power = e == 0 ? "" : (e == 1 ? std::string(1, var) : std::string(1, var) + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e)));
    std::string body;
    if (power.empty()) {
      body = magnitude.is_atomic() ? magnitude.to_string() : "(" + magnitude.to_string() + ")";
    } else if (magnitude.is_one()) {
      body = power;
    } else {
      body = (magnitude.is_atomic() ? magnitude.to_string() : "(" + magnitude.to_string() + ")") + "*" + power;
    }
    out += first ? (negative ? "-" + body : body) : (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace ptchain
