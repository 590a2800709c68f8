#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ptchain {

// Exact rational; GMP keeps it canonical (den > 0, reduced, zero is 0/1).
using BigRational = mpq_class;
using BigInteger = mpz_class;

// Accepts "7", "-3/4", "0.05", "1e-3", "-2.5E+2".
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& q);

double to_double(const BigRational& q);
// Double-double style conversion; exact to long double precision.
long double to_long_double(const BigRational& q);

// Exact conversion of a finite double.
BigRational from_double(double value);

// Returns r with r*r == q, r >= 0, if q is the square of a rational.
std::optional<BigRational> rational_sqrt(const BigRational& q);

int sign(const BigRational& q);

}  // namespace ptchain
