#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptchain/model.hpp"
#include "ptchain/roots.hpp"
#include "ptchain/secular.hpp"

namespace ptchain {

struct BoundState {
  long double t = 0;
  long double phi = 0;
  long double energy = 0;
  int level = 0;  // 0 = ground state (largest t)
  int multiplicity = 1;
  RootBracket bracket;
};

struct SpectrumReport {
  std::vector<BoundState> states;  // sorted by decreasing t
  RootCensus census;               // includes spurious and complex roots
  SecularPoly secular;
};

SpectrumReport bound_states(const ReducedParams& reduced, double tol = 1e-12);

struct Wavefunction {
  long double lambda = 0;
  long double rho = 0;
  long double phi = 0;
  int J = 0;
  std::vector<long double> interior;  // psi_{-J+1} .. psi_{J-2}

  // Amplitude at any site n.
  long double at(int n) const;
};

// Null vector of the matching matrix at x = sqrt(t) with exponential tails.
// Normalized so the largest component is +1.
Wavefunction wavefunction(const RawParams& raw, const BoundState& state);
Wavefunction wavefunction(const ReducedParams& reduced, const BoundState& state);

// max |((H - E) psi)_n| over sites |n| <= n_max on the infinite lattice.
long double wavefunction_residual(const RawParams& raw, const Wavefunction& psi, long double energy, int n_max = 40);

// Names: reduced u, v, w, y, z, m, n; raw a, ap, b, bp, c, cp, d, dp, ...
struct PlaneSpec {
  std::string param1, param2;
  BigRational lo1, hi1, lo2, hi2;
  BigRational step1, step2;
  bool raw = false;
};

struct DomainCell {
  BigRational p1, p2;
  int count = 0;  // distinct secular roots t > 1
  bool complex_flag = false;
  bool singular = false;  // raw parameters on a singular line
};

struct DomainGrid {
  PlaneSpec plane;
  int n1 = 0, n2 = 0;  // points along each axis
  std::vector<DomainCell> cells;  // index i2 * n1 + i1

  const DomainCell& at(int i1, int i2) const { return cells[static_cast<std::size_t>(i2 * n1 + i1)]; }
};

// Fixed parameters: reduced values, or raw pairs when plane.raw is set. The
// plane's two parameters override the fixed ones.
DomainGrid domain_scan(int J, const PlaneSpec& plane, const std::vector<BigRational>& fixed_reduced,
                       const std::vector<std::pair<BigRational, BigRational>>& fixed_raw, unsigned threads = 0);

using Polyline = std::vector<std::pair<double, double>>;

struct BoundaryLevel {
  int level = 0;  // separates count >= level from count < level
  std::vector<Polyline> polylines;
};

// Marching squares on the point grid; vertices at edge midpoints.
std::vector<BoundaryLevel> boundary_extract(const DomainGrid& grid);

struct ProbePoint {
  BigRational lambda;
  std::optional<long double> t0;
  long double residual = 0;  // t0 - (1 + u + 2v + 2w + ...)
  std::string error;
};

struct ProbeResult {
  std::vector<ProbePoint> points;
  std::optional<double> slope;  // log-log fit of |residual| vs lambda
  bool exact = false;           // every residual vanishes
  long double linear_coefficient = 0;  // u + 2v + 2w + ... along the direction
  long double phi0_coefficient = 0;    // phi0 / lambda at the smallest lambda
  long double energy0_coefficient = 0; // E0 / lambda^2 at the smallest lambda
};

ProbeResult perturbative_probe(int J, const std::vector<BigRational>& direction, const std::vector<BigRational>& lambdas,
                               unsigned threads = 0);

// Least-squares slope of log|y| against log x.
std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ptchain
