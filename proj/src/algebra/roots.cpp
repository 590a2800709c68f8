#include "ptchain/roots.hpp"

#include <algorithm>
#include <cmath>

namespace ptchain {

namespace {

int sign_at(const QPoly& p, const BigRational& x) { return sgn(p.evaluate(x)); }

long double eval_ld(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

}  // namespace

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<QPoly> out;
  QPoly dp = p.derivative();
  QPoly a = poly_gcd(p, dp);
  QPoly b = p.divrem(a).first;
  QPoly c = dp.divrem(a).first;
  QPoly d = c - b.derivative();
  while (b.degree() > 0) {
    QPoly f = poly_gcd(b, d);
    b = b.divrem(f).first;
    c = d.divrem(f).first;
    d = c - b.derivative();
    out.push_back(f.monic());
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p;
  return p.divrem(poly_gcd(p, p.derivative())).first.monic();
}

BigRational root_bound(const QPoly& p) {
  BigRational bound = 0;
  const BigRational& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    BigRational r = abs(p.coeffs()[static_cast<std::size_t>(k)] / lead);
    if (r > bound) bound = r;
  }
  return bound + 1;
}

SturmSequence::SturmSequence(const QPoly& squarefree) {
  chain_.push_back(squarefree);
  if (squarefree.degree() <= 0) return;
  chain_.push_back(squarefree.derivative());
  while (chain_.back().degree() > 0) {
    QPoly r = chain_[chain_.size() - 2].divrem(chain_.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and bounds coefficient growth.
    BigRational scale = abs(r.leading());
    chain_.push_back(BigRational(-1 / scale) * r);
  }
}

int SturmSequence::variations_at(const BigRational& x) const {
  int changes = 0, last = 0;
  for (const auto& p : chain_) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int changes = 0, last = 0;
  for (const auto& p : chain_) {
    if (p.is_zero()) continue;
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 != 0) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const std::optional<BigRational>& lo, const std::optional<BigRational>& hi) const {
  if (base().degree() <= 0) return 0;
  int v_lo = lo ? variations_at(*lo) : variations_at_infinity(false);
  int v_hi = hi ? variations_at(*hi) : variations_at_infinity(true);
  int n = v_lo - v_hi;  // roots in (lo, hi]
  if (hi && sign_at(base(), *hi) == 0) --n;
  return n;
}

std::vector<RootBracket> sturm_isolate(const QPoly& p, const std::optional<BigRational>& lo,
                                       const std::optional<BigRational>& hi) {
  std::vector<RootBracket> out;
  if (p.degree() <= 0) return out;
  const QPoly sqf = squarefree_part(p);
  const SturmSequence sturm(sqf);
  const BigRational bound = root_bound(sqf);
  BigRational a = lo ? *lo : BigRational(-bound);
  BigRational b = hi ? *hi : bound;
  if (lo && hi && *lo >= *hi) return out;
  if (lo && !hi && a >= b) return out;
  if (!lo && hi && a >= b) return out;

  // Half-open work items (a, b] with their root counts.
  struct Item {
    BigRational a, b;
    int count;
  };
  std::vector<Item> stack;
  int total = sturm.variations_at(a) - sturm.variations_at(b);
  if (hi && sign_at(sqf, b) == 0) {
    --total;
    // Exclude the endpoint root by nudging b inward until it is not a root
    // and no root lies in (b', b).
    BigRational step = (b - a) / 2;
    BigRational nb = b - step;
    while (sign_at(sqf, nb) == 0 || sturm.variations_at(nb) - sturm.variations_at(b) != 1) {
      step /= 2;
      nb = b - step;
    }
    b = nb;
  }
  if (total > 0) stack.push_back({a, b, total});

  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    if (item.count == 0) continue;
    if (item.count == 1) {
      if (sign_at(sqf, item.b) == 0) {
        out.push_back({item.b, item.b, 1});
        continue;
      }
      // Move the left end off a root so the bracket has a strict sign change.
      while (sign_at(sqf, item.a) == 0) {
        BigRational m = (item.a + item.b) / 2;
        if (sign_at(sqf, m) == 0) {
          item.a = item.b = m;
          break;
        }
        if (sturm.variations_at(m) - sturm.variations_at(item.b) == 1) {
          item.a = m;
        } else {
          item.b = m;
        }
      }
      out.push_back({item.a, item.b, 1});
      continue;
    }
    BigRational m = (item.a + item.b) / 2;
    int left = sturm.variations_at(item.a) - sturm.variations_at(m);
    stack.push_back({m, item.b, item.count - left});
    stack.push_back({item.a, m, left});
  }

  std::sort(out.begin(), out.end(), [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });

  const auto factors = squarefree_decomposition(p);
  if (factors.size() > 1) {
    for (auto& bracket : out) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0) continue;
        bool hit;
        if (bracket.is_exact()) {
          hit = sign_at(factors[i], bracket.lo) == 0;
        } else {
          hit = SturmSequence(factors[i]).count(bracket.lo, bracket.hi) > 0;
        }
        if (hit) {
          bracket.multiplicity = static_cast<int>(i) + 1;
          break;
        }
      }
    }
  }
  return out;
}

long double refine_root(const QPoly& p, const RootBracket& bracket, double rel_tol) {
  if (bracket.is_exact()) return to_long_double(bracket.lo);
  const QPoly q = squarefree_part(p);
  BigRational a = bracket.lo, b = bracket.hi;
  const int sa = sign_at(q, a);
  // Exact bisection until the bracket is narrow relative to its position.
  for (int it = 0; it < 200; ++it) {
    BigRational width = b - a;
    BigRational scale = std::max(abs(a), abs(b));
    if (width * 1000 <= scale || width < BigRational(1, 1000000)) break;
    BigRational m = (a + b) / 2;
    int sm = sign_at(q, m);
    if (sm == 0) return to_long_double(m);
    if (sm == sa) {
      a = m;
    } else {
      b = m;
    }
  }
  std::vector<long double> c, dc;
  for (const auto& coef : q.coeffs()) c.push_back(to_long_double(coef));
  for (std::size_t k = 1; k < c.size(); ++k) dc.push_back(static_cast<long double>(k) * c[k]);

  long double lo = to_long_double(a), hi = to_long_double(b);
  long double x = (lo + hi) / 2;
  const long double tol = static_cast<long double>(rel_tol);
  long double best = x, best_f = std::numeric_limits<long double>::infinity();
  int polish = -1;
  for (int it = 0; it < 500 && polish != 0; ++it) {
    long double fx = eval_ld(c, x);
    if (fx == 0) return x;
    if (std::fabs(fx) < best_f) {
      best_f = std::fabs(fx);
      best = x;
    }
    if ((fx > 0 ? 1 : -1) == sa) {
      lo = x;
    } else {
      hi = x;
    }
    long double dfx = eval_ld(dc, x);
    long double raw = dfx != 0 ? fx / dfx : std::numeric_limits<long double>::infinity();
    long double next = x - raw;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    if (polish > 0) --polish;
    // A couple of polishing steps once the Newton correction is below tolerance.
    if (polish < 0 && (std::fabs(raw) <= tol * std::fabs(x) || hi - lo <= tol * std::fabs(x))) polish = 2;
    if (hi - lo <= std::numeric_limits<long double>::epsilon() * std::fabs(x)) break;
    x = next;
  }
  return best;
}

RootCensus root_census(const QPoly& p) {
  RootCensus census;
  census.degree = p.degree();
  if (p.degree() <= 0) return census;
  const auto factors = squarefree_decomposition(p);
  const BigRational one(1), zero(0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    SturmSequence sturm(factors[i]);
    const int real = sturm.count(std::nullopt, std::nullopt);
    const int above = sturm.count(one, std::nullopt);
    // (0, 1]: open count plus a root exactly at 1.
    const int unit = sturm.count(zero, one) + (sign_at(factors[i], one) == 0 ? 1 : 0);
    const int mult = static_cast<int>(i) + 1;
    census.distinct_real += real;
    census.real_with_multiplicity += real * mult;
    census.distinct_above_one += above;
    census.distinct_unit += unit;
    if (mult > 1 && above > 0) census.has_repeated_above_one = true;
  }
  census.complex_count = census.degree - census.real_with_multiplicity;
  return census;
}

}  // namespace ptchain
