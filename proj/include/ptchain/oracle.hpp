#pragma once

#include <optional>
#include <vector>

#include "ptchain/model.hpp"

namespace ptchain {

struct CharValue {
  int sign = 0;
  long double log_magnitude = 0;  // natural log of |det(H - E)|
};

// det(H - E I) by the three-term recurrence with per-step rescaling.
CharValue char_eval(const TruncatedHamiltonian& h, long double energy);
BigRational char_eval_exact(const TruncatedHamiltonian& h, const BigRational& energy);

// Lowest possible eigenvalue (Gershgorin row bound).
long double gershgorin_floor(const TruncatedHamiltonian& h);

struct EigenSearch {
  std::optional<long double> floor;  // default: Gershgorin bound
  long double ceiling = -1e-12;      // search window upper end (< 0)
  int samples = 2000;
  long double tol = 1e-12;
};

// Real eigenvalues in the window. With positive bond products the matrix is
// similar to a symmetric one and inertia counts find every eigenvalue;
// otherwise sampled sign changes of char_eval are bisected (odd
// multiplicities only).
std::vector<long double> eigen_below_continuum(const TruncatedHamiltonian& h, const EigenSearch& search = {});

struct OracleReport {
  std::vector<int> sizes;
  std::vector<std::vector<long double>> eigenvalues;  // per N
  std::vector<long double> secular_energies;
  // differences[i][k]: eigenvalue matched to secular energy k at sizes[i]
  // minus that energy; NaN when unmatched.
  std::vector<std::vector<long double>> differences;
  std::vector<std::optional<double>> decay_rate;  // per state, per unit N
  std::vector<double> expected_rate;              // 2 phi = ln t per state
  std::vector<bool> slow;                         // expected rate below 0.05
};

OracleReport convergence_study(const RawParams& raw, const std::vector<int>& sizes, long double tol = 1e-15,
                               unsigned threads = 0);

}  // namespace ptchain
