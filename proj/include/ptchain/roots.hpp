#pragma once

#include <optional>
#include <vector>

#include "ptchain/dense_poly.hpp"

namespace ptchain {

// Isolating interval for one real root: the open interval (lo, hi), or the
// exact root lo when lo == hi.
struct RootBracket {
  BigRational lo;
  BigRational hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
};

// Square-free factors f_1, f_2, ... (monic) with p = c * prod f_i^i.
// Entry i-1 holds f_i; constant factors are kept as 1.
std::vector<QPoly> squarefree_decomposition(const QPoly& p);
QPoly squarefree_part(const QPoly& p);

// All real roots have absolute value strictly below this bound.
BigRational root_bound(const QPoly& p);

class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& squarefree);

  int variations_at(const BigRational& x) const;
  int variations_at_infinity(bool positive) const;
  // Distinct roots in the open interval; nullopt endpoints are infinite.
  int count(const std::optional<BigRational>& lo, const std::optional<BigRational>& hi) const;
  const QPoly& base() const { return chain_.front(); }

 private:
  std::vector<QPoly> chain_;
};

// Disjoint isolating brackets, sorted ascending, for every real root in the
// open interval (lo, hi). Repeated roots are reported once with their
// multiplicity.
std::vector<RootBracket> sturm_isolate(const QPoly& p, const std::optional<BigRational>& lo,
                                       const std::optional<BigRational>& hi);

// Safeguarded Newton on the square-free part inside the bracket.
long double refine_root(const QPoly& p, const RootBracket& bracket, double rel_tol = 1e-12);

struct RootCensus {
  int degree = 0;
  int distinct_real = 0;
  int real_with_multiplicity = 0;
  int distinct_above_one = 0;  // t > 1
  int distinct_unit = 0;       // t in (0, 1]
  int complex_count = 0;       // degree - real roots counted with multiplicity
  bool has_repeated_above_one = false;
};

RootCensus root_census(const QPoly& p);

}  // namespace ptchain
