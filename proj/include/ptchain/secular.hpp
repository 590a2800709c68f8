#pragma once

#include <vector>

#include "ptchain/dense_poly.hpp"
#include "ptchain/laurent.hpp"
#include "ptchain/model.hpp"

namespace ptchain {

// 2J x 2J tridiagonal matching matrix in x = e^phi. Diagonal: corners x,
// interior x + 1/x. Bond i (0-based, outermost left to outermost right)
// carries coupling pair k = |i - (J-1)| + 1 with super -1+p_k, sub -1-p_k'.
struct MatchingMatrix {
  int J = 0;
  std::vector<Coef> super;
  std::vector<Coef> sub;

  int dimension() const { return 2 * J; }
  Coef bond_product(int i) const { return super[static_cast<std::size_t>(i)] * sub[static_cast<std::size_t>(i)]; }
  // Numeric matrix at x (numeric couplings only), row-major.
  std::vector<std::vector<long double>> evaluate(long double x) const;
  std::vector<std::vector<BigRational>> evaluate_exact(const BigRational& x) const;
};

int matching_bond_pair(int bond, int J);

MatchingMatrix matching_matrix(const RawParams& raw);
// Canonical gauge (p' = 0, p = -value); symbolic values allowed.
MatchingMatrix matching_matrix(const ReducedParams& reduced);

struct SecularPoly {
  int J = 0;
  Poly poly;                // monic in t
  int prefactor_power = 0;  // t^s multiplying the Laurent determinant
};

LaurentPoly secular_laurent(const ReducedParams& reduced, bool keep_u_symbolic = false);
SecularPoly secular_poly(const ReducedParams& reduced, bool keep_u_symbolic = false);

// Dense elimination on the numeric matching matrix; independent of the
// three-term recursion.
BigRational secular_eval_direct(const ReducedParams& reduced, const BigRational& x);
long double secular_eval_direct(const ReducedParams& reduced, long double x);

// Exact determinant of a dense square matrix by fraction-free pivoting.
BigRational dense_determinant(std::vector<std::vector<BigRational>> m);

}  // namespace ptchain
