#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptchain/dense_poly.hpp"
#include "ptchain/model.hpp"
#include "ptchain/secular.hpp"

namespace ptchain {

// f_J = N / D with N, D monic and coprime.
struct RatFunc {
  Poly N;
  Poly D;

  std::string to_string() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.N == b.N && a.D == b.D; }
};

struct Factorization {
  Poly N;
  Poly D;
  // Power of t multiplying the secular polynomial in the identity
  // N^2 - t(1+u)D^2 = t^extra * P (1 for J = 1, else 0).
  int extra_t_power = 0;
};

// Splits P = P0 + u P1 and takes D = sqrt(-P1/t), N = sqrt(P0 - P1).
// Throws FactorizationFailed.
Factorization factorize(const SecularPoly& secular_u_symbolic);

// Divides out gcd(N, D) and makes both monic.
RatFunc normalize(Poly N, Poly D);

// Uses every coupling except u (values[0] is ignored).
RatFunc f_rational(const ReducedParams& others);

// u = N(t)^2 / (t D(t)^2) - 1. Throws PoleHit when D(t) = 0.
BigRational sturmian_coupling(const BigRational& t, const RatFunc& f);
long double sturmian_coupling(long double t, const RatFunc& f);

// f = t - A0 - R(t)/D(t) with deg R < deg D.
struct PartialFraction {
  Coef A0;
  Poly R;
  Poly D;
  struct Pole {
    long double location;
    long double residue;  // of R/D
  };
  std::vector<Pole> poles;  // real simple poles, numeric mode only

  std::string to_string() const;
};

PartialFraction partial_fractions(const RatFunc& f);

struct JFraction {
  std::vector<Coef> A;  // A_0, A_1, ...
  std::vector<Coef> B;  // B_1, B_2, ... (B[0] is B_1)
  // Position in the interleaved sequence A_0, B_1, A_1, B_2, ... from which
  // coefficients still depend on the truncation J.
  int tilde_from = 0;

  bool a_tilded(int k) const { return 2 * k >= tilde_from; }
  bool b_tilded(int k) const { return 2 * k - 1 >= tilde_from; }
};

// Repeated monic division. Throws DegenerateStep when a remainder degree
// drops by more than one.
JFraction jfraction(const RatFunc& f, int J);
RatFunc reconstruct(const JFraction& jf);

struct ShapeInterval {
  std::optional<long double> lo;  // nullopt: -infinity
  std::optional<long double> hi;  // nullopt: +infinity
  int zero_count = 0;             // zeros of N inside, with multiplicity
  bool full_range = false;        // odd zero count: f sweeps all reals
  std::string shape;              // "/", "cap" or "cup"
};

struct ShapeClassification {
  std::vector<long double> poles;
  int complex_poles = 0;
  int real_zeros = 0;
  std::vector<ShapeInterval> intervals;
  std::string label;        // interval shapes joined with '+', e.g. "/+/"
  int full_range_count = 0;
  int nominal_intersections = 0;  // two per full-range interval
};

ShapeClassification shape_classify(const RatFunc& f);

}  // namespace ptchain
