#include "ptchain/secular.hpp"

#include <cmath>
#include <utility>

#include "ptchain/errors.hpp"

namespace ptchain {

int matching_bond_pair(int bond, int J) { return bond <= J - 1 ? J - bond : bond - J + 2; }

std::vector<std::vector<long double>> MatchingMatrix::evaluate(long double x) const {
  const int n = dimension();
  std::vector<std::vector<long double>> m(static_cast<std::size_t>(n), std::vector<long double>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = (i == 0 || i == n - 1) ? x : x + 1 / x;
    if (i + 1 < n) {
      m[i][i + 1] = to_long_double(super[static_cast<std::size_t>(i)].constant_value());
      m[i + 1][i] = to_long_double(sub[static_cast<std::size_t>(i)].constant_value());
    }
  }
  return m;
}

std::vector<std::vector<BigRational>> MatchingMatrix::evaluate_exact(const BigRational& x) const {
  const int n = dimension();
  std::vector<std::vector<BigRational>> m(static_cast<std::size_t>(n), std::vector<BigRational>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = (i == 0 || i == n - 1) ? x : BigRational(x + 1 / x);
    if (i + 1 < n) {
      m[i][i + 1] = super[static_cast<std::size_t>(i)].constant_value();
      m[i + 1][i] = sub[static_cast<std::size_t>(i)].constant_value();
    }
  }
  return m;
}

MatchingMatrix matching_matrix(const RawParams& raw) {
  MatchingMatrix m;
  m.J = raw.J;
  for (int i = 0; i < 2 * raw.J - 1; ++i) {
    const auto& [p, pp] = raw.pairs[static_cast<std::size_t>(matching_bond_pair(i, raw.J) - 1)];
    m.super.emplace_back(BigRational(-1 + p));
    m.sub.emplace_back(BigRational(-1 - pp));
  }
  return m;
}

MatchingMatrix matching_matrix(const ReducedParams& reduced) {
  MatchingMatrix m;
  m.J = reduced.J;
  for (int i = 0; i < 2 * reduced.J - 1; ++i) {
    const Coef& value = reduced.values[static_cast<std::size_t>(matching_bond_pair(i, reduced.J) - 1)];
    m.super.push_back(Coef(-1) - value);
    m.sub.emplace_back(-1);
  }
  return m;
}

LaurentPoly secular_laurent(const ReducedParams& reduced, bool keep_u_symbolic) {
  const ReducedParams params = keep_u_symbolic ? reduced.with_symbolic_u() : reduced;
  const int n = 2 * params.J;
  std::vector<Coef> bonds;
  for (int i = 0; i + 1 < n; ++i) {
    bonds.push_back(Coef(1) + params.values[static_cast<std::size_t>(matching_bond_pair(i, params.J) - 1)]);
  }
  const LaurentPoly corner = LaurentPoly::monomial(Coef(1), 1);
  const LaurentPoly interior = corner + LaurentPoly::monomial(Coef(1), -1);
  LaurentPoly prev = LaurentPoly::monomial(Coef(1), 0);
  LaurentPoly cur = corner;
  for (int i = 1; i < n; ++i) {
    const LaurentPoly& d = (i == n - 1) ? corner : interior;
    LaurentPoly next = d * cur - bonds[static_cast<std::size_t>(i - 1)] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (!cur.has_only_even_exponents()) {
    throw Error(ErrorCode::OddExponentFound, "matching determinant has an odd power of x at J=" + std::to_string(params.J));
  }
  return cur;
}

SecularPoly secular_poly(const ReducedParams& reduced, bool keep_u_symbolic) {
  SecularPoly out;
  out.J = reduced.J;
  Poly p = secular_laurent(reduced, keep_u_symbolic).to_t_polynomial(&out.prefactor_power);
  out.poly = demoted(p.monic());
  return out;
}

BigRational dense_determinant(std::vector<std::vector<BigRational>> m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      BigRational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

BigRational secular_eval_direct(const ReducedParams& reduced, const BigRational& x) {
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "x must be nonzero");
  return dense_determinant(matching_matrix(reduced).evaluate_exact(x));
}

long double secular_eval_direct(const ReducedParams& reduced, long double x) {
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "x must be nonzero");
  auto m = matching_matrix(reduced).evaluate(x);
  const std::size_t n = m.size();
  long double det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      long double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace ptchain
