#include "ptchain/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "ptchain/errors.hpp"
#include "ptchain/parallel.hpp"
#include "ptchain/spectrum.hpp"

namespace ptchain {

namespace {

struct Bands {
  std::vector<long double> diag, product;  // product[i] = super[i] * sub[i]
};

Bands bands_of(const TruncatedHamiltonian& h) {
  Bands b;
  for (const auto& d : h.diag) b.diag.push_back(to_long_double(d));
  for (std::size_t i = 0; i < h.super.size(); ++i) b.product.push_back(to_long_double(BigRational(h.super[i] * h.sub[i])));
  return b;
}

// Eigenvalues below E of the symmetrized matrix (all products > 0).
int inertia_count(const Bands& b, long double energy) {
  int negatives = 0;
  long double q = 1;
  for (std::size_t i = 0; i < b.diag.size(); ++i) {
    q = (b.diag[i] - energy) - (i > 0 ? b.product[i - 1] / q : 0);
    if (q == 0) q = -std::numeric_limits<long double>::epsilon() * (std::fabs(b.diag[i] - energy) + 1);
    if (q < 0) ++negatives;
  }
  return negatives;
}

}  // namespace

CharValue char_eval(const TruncatedHamiltonian& h, long double energy) {
  const Bands b = bands_of(h);
  long double prev = 1, cur = b.diag[0] - energy, log_scale = 0;
  for (std::size_t i = 1; i < b.diag.size(); ++i) {
    long double next = (b.diag[i] - energy) * cur - b.product[i - 1] * prev;
    prev = cur;
    cur = next;
    long double s = std::max(std::fabs(cur), std::fabs(prev));
    if (s > 1e100L || (s < 1e-100L && s > 0)) {
      prev /= s;
      cur /= s;
      log_scale += std::log(s);
    }
  }
  CharValue out;
  out.sign = cur > 0 ? 1 : (cur < 0 ? -1 : 0);
  out.log_magnitude = cur == 0 ? -std::numeric_limits<long double>::infinity() : log_scale + std::log(std::fabs(cur));
  return out;
}

BigRational char_eval_exact(const TruncatedHamiltonian& h, const BigRational& energy) {
  BigRational prev = 1, cur = h.diag[0] - energy;
  for (std::size_t i = 1; i < h.diag.size(); ++i) {
    BigRational next = (h.diag[i] - energy) * cur - h.super[i - 1] * h.sub[i - 1] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

long double gershgorin_floor(const TruncatedHamiltonian& h) {
  long double lowest = std::numeric_limits<long double>::infinity();
  const std::size_t n = h.diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    long double r = 0;
    if (i > 0) r += std::fabs(to_long_double(h.sub[i - 1]));
    if (i + 1 < n) r += std::fabs(to_long_double(h.super[i]));
    lowest = std::min(lowest, to_long_double(h.diag[i]) - r);
  }
  return lowest;
}

std::vector<long double> eigen_below_continuum(const TruncatedHamiltonian& h, const EigenSearch& search) {
  const long double floor = search.floor ? *search.floor : gershgorin_floor(h) - 1;
  const long double ceiling = search.ceiling;
  std::vector<long double> out;
  if (!(floor < ceiling)) return out;
  const Bands b = bands_of(h);
  const bool symmetrizable = std::all_of(b.product.begin(), b.product.end(), [](long double p) { return p > 0; });

  if (symmetrizable) {
    const int below_floor = inertia_count(b, floor);
    const int below_ceiling = inertia_count(b, ceiling);
    for (int k = below_floor; k < below_ceiling; ++k) {
      long double lo = floor, hi = ceiling;
      while (hi - lo > search.tol) {
        long double mid = (lo + hi) / 2;
        if (mid <= lo || mid >= hi) break;
        if (inertia_count(b, mid) > k) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      out.push_back((lo + hi) / 2);
    }
    return out;
  }

  const int samples = std::max(2, search.samples);
  std::vector<long double> grid;
  std::vector<CharValue> values;
  for (int i = 0; i <= samples; ++i) {
    grid.push_back(floor + (ceiling - floor) * i / samples);
    values.push_back(char_eval(h, grid.back()));
  }
  auto bisect = [&](long double lo, long double hi, int slo) {
    while (hi - lo > search.tol) {
      long double mid = (lo + hi) / 2;
      if (mid <= lo || mid >= hi) break;
      int sm = char_eval(h, mid).sign;
      if (sm == 0) return mid;
      if (sm == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return (lo + hi) / 2;
  };
  for (int i = 1; i <= samples; ++i) {
    const int s = values[static_cast<std::size_t>(i)].sign, prev = values[static_cast<std::size_t>(i - 1)].sign;
    if (s == 0) {
      out.push_back(grid[static_cast<std::size_t>(i)]);
    } else if (prev != 0 && s != prev) {
      out.push_back(bisect(grid[static_cast<std::size_t>(i - 1)], grid[static_cast<std::size_t>(i)], prev));
    }
  }
  // A close pair of roots between two samples leaves the sign unchanged but
  // shows up as a dip in |det|; look for a sign flip at the bottom.
  for (int i = 1; i < samples; ++i) {
    const auto& left = values[static_cast<std::size_t>(i - 1)];
    const auto& mid = values[static_cast<std::size_t>(i)];
    const auto& right = values[static_cast<std::size_t>(i + 1)];
    if (left.sign == 0 || mid.sign != left.sign || right.sign != left.sign) continue;
    if (!(mid.log_magnitude < left.log_magnitude && mid.log_magnitude <= right.log_magnitude)) continue;
    long double lo = grid[static_cast<std::size_t>(i - 1)], hi = grid[static_cast<std::size_t>(i + 1)];
    std::optional<long double> flip;
    for (int iter = 0; iter < 200 && hi - lo > search.tol && !flip; ++iter) {
      long double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      CharValue c1 = char_eval(h, m1), c2 = char_eval(h, m2);
      if (c1.sign != left.sign) {
        flip = m1;
      } else if (c2.sign != left.sign) {
        flip = m2;
      } else if (c1.log_magnitude < c2.log_magnitude) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    if (!flip) continue;
    if (char_eval(h, *flip).sign == 0) {
      out.push_back(*flip);
      continue;
    }
    out.push_back(bisect(grid[static_cast<std::size_t>(i - 1)], *flip, left.sign));
    out.push_back(bisect(*flip, grid[static_cast<std::size_t>(i + 1)], -left.sign));
  }
  std::sort(out.begin(), out.end());
  return out;
}

OracleReport convergence_study(const RawParams& raw, const std::vector<int>& sizes, long double tol, unsigned threads) {
  if (sizes.size() < 2) throw Error(ErrorCode::InvalidArgument, "convergence study needs at least two truncation sizes");
  OracleReport report;
  report.sizes = sizes;
  const SpectrumReport spectrum = bound_states(reduce_regular(raw), 1e-18);
  for (const auto& s : spectrum.states) {
    report.secular_energies.push_back(s.energy);
    report.expected_rate.push_back(static_cast<double>(std::log(s.t)));
    report.slow.push_back(std::log(s.t) < 0.05L);
  }
  report.eigenvalues.resize(sizes.size());
  report.differences.resize(sizes.size());
  parallel_for(sizes.size(), threads, [&](std::size_t i) {
    EigenSearch search;
    search.tol = tol;
    report.eigenvalues[i] = eigen_below_continuum(build_truncated(raw, sizes[i]), search);
    for (long double e : report.secular_energies) {
      long double best = std::numeric_limits<long double>::quiet_NaN();
      for (long double ev : report.eigenvalues[i]) {
        if (std::isnan(best) || std::fabs(ev - e) < std::fabs(best)) best = ev - e;
      }
      report.differences[i].push_back(best);
    }
  });
  for (std::size_t k = 0; k < report.secular_energies.size(); ++k) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      long double d = std::fabs(report.differences[i][k]);
      if (!(d > 1e-17L) || std::isnan(d)) continue;
      double x = sizes[i], y = std::log(static_cast<double>(d));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
    double denom = n * sxx - sx * sx;
    if (n >= 2 && denom != 0) {
      report.decay_rate.push_back(-(n * sxy - sx * sy) / denom);
    } else {
      report.decay_rate.push_back(std::nullopt);
    }
  }
  return report;
}

}  // namespace ptchain
