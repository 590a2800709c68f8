#pragma once

#include <string_view>

#include "ptchain/coef.hpp"
#include "ptchain/dense_poly.hpp"

namespace ptchain {

// Rational expression over the symbols t, u, v, w, y, z, m, n with
// + - * / ^ (non-negative integer exponents) and parentheses; numbers may be
// integers, fractions via '/', or decimals. Multiplication must be explicit.
SymbolicFraction parse_expression(std::string_view text);

// Expression whose denominator is free of t, returned as a polynomial in t.
Poly parse_poly(std::string_view text);

// Expression free of t.
Coef parse_coef(std::string_view text);

}  // namespace ptchain
