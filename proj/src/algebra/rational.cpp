#include "ptchain/rational.hpp"

#include <cctype>
#include <cmath>

#include "ptchain/errors.hpp"

namespace ptchain {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotAPerfectSquare: return "NotAPerfectSquare";
    case ErrorCode::NotExactDivision: return "NotExactDivision";
    case ErrorCode::OddExponentFound: return "OddExponentFound";
    case ErrorCode::FactorizationFailed: return "FactorizationFailed";
    case ErrorCode::DegenerateStep: return "DegenerateStep";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::SingularParameters: return "SingularParameters";
    case ErrorCode::RankDeficiencyAmbiguous: return "RankDeficiencyAmbiguous";
    case ErrorCode::NoRootAboveOne: return "NoRootAboveOne";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
}

BigInteger pow10(unsigned long e) {
  BigInteger r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) bad_number(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigRational num = parse_rational(s.substr(0, slash));
    BigRational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    return BigRational(num / den);
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false, any_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) bad_number(text);
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') bad_number(text);
    ++i;
    std::string_view rest = s.substr(i);
    if (rest.empty()) bad_number(text);
    std::size_t j = 0;
    bool eneg = false;
    if (rest[j] == '+' || rest[j] == '-') {
      eneg = rest[j] == '-';
      ++j;
    }
    if (j == rest.size()) bad_number(text);
    for (; j < rest.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(rest[j]))) bad_number(text);
      exponent = exponent * 10 + (rest[j] - '0');
      if (exponent > 100000) bad_number(text);
    }
    if (eneg) exponent = -exponent;
  }
  BigInteger mantissa(digits, 10);
  long scale = exponent - frac_digits;
  BigRational result;
  if (scale >= 0) {
    result = BigRational(mantissa * pow10(static_cast<unsigned long>(scale)));
  } else {
    result = BigRational(mantissa, pow10(static_cast<unsigned long>(-scale)));
    result.canonicalize();
  }
  return negative ? BigRational(-result) : result;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

double to_double(const BigRational& q) { return q.get_d(); }

long double to_long_double(const BigRational& q) {
  double hi = q.get_d();
  if (!std::isfinite(hi)) return hi;
  BigRational rest = q - BigRational(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

BigRational from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  return BigRational(value);
}

std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (q < 0) return std::nullopt;
  const BigInteger& num = q.get_num();
  const BigInteger& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  BigInteger rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  BigRational r(rn, rd);
  r.canonicalize();
  return r;
}

int sign(const BigRational& q) { return sgn(q); }

}  // namespace ptchain
