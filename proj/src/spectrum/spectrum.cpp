#include "ptchain/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "ptchain/errors.hpp"
#include "ptchain/parallel.hpp"

namespace ptchain {

SpectrumReport bound_states(const ReducedParams& reduced, double tol) {
  if (!reduced.is_numeric()) throw Error(ErrorCode::InvalidArgument, "bound states need numeric couplings");
  SpectrumReport report;
  report.secular = secular_poly(reduced);
  const QPoly q = to_rational(report.secular.poly);
  report.census = root_census(q);
  for (const auto& bracket : sturm_isolate(q, BigRational(1), std::nullopt)) {
    BoundState s;
    s.t = refine_root(q, bracket, tol);
    s.phi = phi_of_t(s.t);
    s.energy = energy_of_t(s.t);
    s.multiplicity = bracket.multiplicity;
    s.bracket = bracket;
    report.states.push_back(s);
  }
  std::sort(report.states.begin(), report.states.end(), [](const BoundState& a, const BoundState& b) { return a.t > b.t; });
  for (std::size_t i = 0; i < report.states.size(); ++i) report.states[i].level = static_cast<int>(i);
  return report;
}

long double Wavefunction::at(int n) const {
  if (n <= -J) return lambda * std::exp(static_cast<long double>(n + J) * phi);
  if (n >= J - 1) return rho * std::exp(static_cast<long double>(J - 1 - n) * phi);
  return interior[static_cast<std::size_t>(n + J - 1)];
}

Wavefunction wavefunction(const RawParams& raw, const BoundState& state) {
  const long double x = std::sqrt(state.t);
  auto m = matching_matrix(raw).evaluate(x);
  const int n = static_cast<int>(m.size());
  std::vector<int> col(static_cast<std::size_t>(n));
  std::iota(col.begin(), col.end(), 0);
  long double scale = 0;
  std::vector<long double> pivots;
  // Gaussian elimination with complete pivoting.
  for (int k = 0; k < n; ++k) {
    int pr = k, pc = k;
    for (int i = k; i < n; ++i) {
      for (int j = k; j < n; ++j) {
        if (std::fabs(m[i][j]) > std::fabs(m[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    }
    std::swap(m[k], m[pr]);
    if (pc != k) {
      for (auto& row : m) std::swap(row[k], row[pc]);
      std::swap(col[k], col[pc]);
    }
    const long double p = m[k][k];
    pivots.push_back(std::fabs(p));
    scale = std::max(scale, std::fabs(p));
    if (p == 0) continue;
    for (int i = k + 1; i < n; ++i) {
      long double f = m[i][k] / p;
      if (f == 0) continue;
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  int nullity = 0;
  for (long double p : pivots) {
    if (p <= 1e-8L * scale) ++nullity;
  }
  if (nullity > 1) {
    throw Error(ErrorCode::RankDeficiencyAmbiguous,
                "matching matrix has a " + std::to_string(nullity) + "-dimensional null space at t=" + std::to_string(static_cast<double>(state.t)));
  }
  std::vector<long double> y(static_cast<std::size_t>(n), 0);
  y[static_cast<std::size_t>(n - 1)] = 1;
  for (int k = n - 2; k >= 0; --k) {
    long double acc = 0;
    for (int j = k + 1; j < n; ++j) acc += m[k][j] * y[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(k)] = m[k][k] != 0 ? -acc / m[k][k] : 0;
  }
  std::vector<long double> psi(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) psi[static_cast<std::size_t>(col[static_cast<std::size_t>(k)])] = y[static_cast<std::size_t>(k)];
  long double peak = 0;
  for (long double v : psi) {
    if (std::fabs(v) > std::fabs(peak)) peak = v;
  }
  for (auto& v : psi) v /= peak;

  Wavefunction wf;
  wf.J = raw.J;
  wf.phi = state.phi;
  wf.lambda = psi.front();
  wf.rho = psi.back();
  wf.interior.assign(psi.begin() + 1, psi.end() - 1);
  return wf;
}

Wavefunction wavefunction(const ReducedParams& reduced, const BoundState& state) {
  return wavefunction(embed(reduced), state);
}

long double wavefunction_residual(const RawParams& raw, const Wavefunction& psi, long double energy, int n_max) {
  auto bond = [&](int n) {
    // Entries of the bond between sites n and n+1: (super, sub).
    int k = bond_pair_index(n, raw.J);
    if (k == 0) return std::pair<long double, long double>(-1, -1);
    const auto& [p, pp] = raw.pairs[static_cast<std::size_t>(k - 1)];
    return std::pair<long double, long double>(-1 + to_long_double(p), -1 - to_long_double(pp));
  };
  long double worst = 0;
  for (int n = -n_max; n <= n_max; ++n) {
    long double value = (2 - energy) * psi.at(n) + bond(n).first * psi.at(n + 1) + bond(n - 1).second * psi.at(n - 1);
    worst = std::max(worst, std::fabs(value));
  }
  return worst;
}

namespace {

struct ParamSlot {
  int index = 0;
  bool primed = false;
};

ParamSlot resolve_name(const std::string& name, bool raw, int J) {
  ParamSlot slot;
  if (raw) {
    if (name.empty() || name[0] < 'a' || name[0] > 'g' || (name.size() > 1 && name.substr(1) != "p")) {
      throw Error(ErrorCode::InvalidArgument, "raw plane parameter must be one of a, ap, b, bp, ..., g, gp: " + name);
    }
    slot.index = name[0] - 'a';
    slot.primed = name.size() > 1;
  } else {
    auto var = var_from_name(name);
    if (!var || *var == Var::t) throw Error(ErrorCode::InvalidArgument, "reduced plane parameter must be one of u, v, w, y, z, m, n: " + name);
    slot.index = static_cast<int>(*var) - 1;
  }
  if (slot.index >= J) throw Error(ErrorCode::InvalidArgument, "plane parameter " + name + " is beyond J=" + std::to_string(J));
  return slot;
}

int axis_points(const BigRational& lo, const BigRational& hi, const BigRational& step) {
  if (step <= 0) throw Error(ErrorCode::InvalidArgument, "grid step must be positive");
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "grid range must have lo <= hi");
  BigRational span = (hi - lo) / step;
  BigInteger whole = span.get_num() / span.get_den();
  if (whole > 100000) throw Error(ErrorCode::ResourceLimit, "grid axis exceeds 100000 points");
  return static_cast<int>(whole.get_si()) + 1;
}

}  // namespace

DomainGrid domain_scan(int J, const PlaneSpec& plane, const std::vector<BigRational>& fixed_reduced,
                       const std::vector<std::pair<BigRational, BigRational>>& fixed_raw, unsigned threads) {
  if (J < 1) throw Error(ErrorCode::InvalidArgument, "J must be at least 1");
  const ParamSlot s1 = resolve_name(plane.param1, plane.raw, J);
  const ParamSlot s2 = resolve_name(plane.param2, plane.raw, J);
  if (s1.index == s2.index && s1.primed == s2.primed) throw Error(ErrorCode::InvalidArgument, "plane axes must differ");

  DomainGrid grid;
  grid.plane = plane;
  grid.n1 = axis_points(plane.lo1, plane.hi1, plane.step1);
  grid.n2 = axis_points(plane.lo2, plane.hi2, plane.step2);
  grid.cells.resize(static_cast<std::size_t>(grid.n1) * static_cast<std::size_t>(grid.n2));

  std::vector<BigRational> base_reduced(fixed_reduced);
  base_reduced.resize(static_cast<std::size_t>(J), BigRational(0));
  std::vector<std::pair<BigRational, BigRational>> base_raw(fixed_raw);
  base_raw.resize(static_cast<std::size_t>(J), {BigRational(0), BigRational(0)});

  auto set_raw = [](std::vector<std::pair<BigRational, BigRational>>& pairs, ParamSlot s, const BigRational& v) {
    auto& pr = pairs[static_cast<std::size_t>(s.index)];
    (s.primed ? pr.second : pr.first) = v;
  };

  parallel_for(grid.cells.size(), threads, [&](std::size_t idx) {
    const int i1 = static_cast<int>(idx % static_cast<std::size_t>(grid.n1));
    const int i2 = static_cast<int>(idx / static_cast<std::size_t>(grid.n1));
    DomainCell& cell = grid.cells[idx];
    cell.p1 = plane.lo1 + i1 * plane.step1;
    cell.p2 = plane.lo2 + i2 * plane.step2;
    ReducedParams reduced;
    if (plane.raw) {
      auto pairs = base_raw;
      set_raw(pairs, s1, cell.p1);
      set_raw(pairs, s2, cell.p2);
      RawParams rp(std::move(pairs));
      if (rp.is_singular()) {
        cell.singular = true;
        return;
      }
      reduced = reduce(rp);
    } else {
      auto values = base_reduced;
      values[static_cast<std::size_t>(s1.index)] = cell.p1;
      values[static_cast<std::size_t>(s2.index)] = cell.p2;
      reduced = ReducedParams::numeric(values);
    }
    RootCensus census = root_census(to_rational(secular_poly(reduced).poly));
    cell.count = census.distinct_above_one;
    cell.complex_flag = census.complex_count > 0;
  });
  return grid;
}

std::vector<BoundaryLevel> boundary_extract(const DomainGrid& grid) {
  std::vector<BoundaryLevel> out;
  int max_count = 0;
  for (const auto& c : grid.cells) max_count = std::max(max_count, c.count);
  const double lo1 = to_double(grid.plane.lo1), lo2 = to_double(grid.plane.lo2);
  const double st1 = to_double(grid.plane.step1), st2 = to_double(grid.plane.step2);

  using Key = std::pair<int, int>;  // doubled grid coordinates
  for (int level = 1; level <= max_count; ++level) {
    auto inside = [&](int i1, int i2) { return grid.at(i1, i2).count >= level; };
    std::map<Key, std::vector<std::size_t>> incidence;
    std::vector<std::pair<Key, Key>> segments;
    auto add = [&](Key a, Key b) {
      incidence[a].push_back(segments.size());
      incidence[b].push_back(segments.size());
      segments.emplace_back(a, b);
    };
    for (int i2 = 0; i2 + 1 < grid.n2; ++i2) {
      for (int i1 = 0; i1 + 1 < grid.n1; ++i1) {
        const bool v0 = inside(i1, i2), v1 = inside(i1 + 1, i2), v2 = inside(i1 + 1, i2 + 1), v3 = inside(i1, i2 + 1);
        const Key e0{2 * i1 + 1, 2 * i2}, e1{2 * i1 + 2, 2 * i2 + 1}, e2{2 * i1 + 1, 2 * i2 + 2}, e3{2 * i1, 2 * i2 + 1};
        const int mask = (v0 ? 1 : 0) | (v1 ? 2 : 0) | (v2 ? 4 : 0) | (v3 ? 8 : 0);
        switch (mask) {
          case 0:
          case 15:
            break;
          case 1: case 14: add(e3, e0); break;
          case 2: case 13: add(e0, e1); break;
          case 4: case 11: add(e1, e2); break;
          case 8: case 7: add(e2, e3); break;
          case 3: case 12: add(e3, e1); break;
          case 6: case 9: add(e0, e2); break;
          case 5:  // v0, v2 inside: cut both corners off
            add(e3, e0);
            add(e1, e2);
            break;
          case 10:
            add(e0, e1);
            add(e2, e3);
            break;
        }
      }
    }
    BoundaryLevel bl;
    bl.level = level;
    std::vector<bool> used(segments.size(), false);
    auto to_point = [&](Key k) { return std::pair<double, double>(lo1 + 0.5 * k.first * st1, lo2 + 0.5 * k.second * st2); };
    auto walk = [&](Key start) {
      Polyline line{to_point(start)};
      Key cur = start;
      for (;;) {
        std::size_t next_seg = segments.size();
        for (std::size_t s : incidence[cur]) {
          if (!used[s]) {
            next_seg = s;
            break;
          }
        }
        if (next_seg == segments.size()) break;
        used[next_seg] = true;
        cur = segments[next_seg].first == cur ? segments[next_seg].second : segments[next_seg].first;
        line.push_back(to_point(cur));
        if (cur == start) break;
      }
      return line;
    };
    // Open chains start at endpoints of degree one, then closed loops.
    for (const auto& [key, segs] : incidence) {
      if (segs.size() == 1 && !used[segs[0]]) bl.polylines.push_back(walk(key));
    }
    for (const auto& [key, segs] : incidence) {
      for (std::size_t s : segs) {
        if (!used[s]) bl.polylines.push_back(walk(key));
      }
    }
    out.push_back(std::move(bl));
  }
  return out;
}

std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] > 0) || y[i] == 0 || !std::isfinite(y[i])) continue;
    double lx = std::log(x[i]), ly = std::log(std::fabs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return std::nullopt;
  double denom = n * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

ProbeResult perturbative_probe(int J, const std::vector<BigRational>& direction, const std::vector<BigRational>& lambdas,
                               unsigned threads) {
  if (static_cast<int>(direction.size()) != J) throw Error(ErrorCode::InvalidArgument, "direction must have J components");
  for (const auto& d : direction) {
    if (d <= 0) throw Error(ErrorCode::InvalidArgument, "probe direction must have positive components");
  }
  ProbeResult result;
  BigRational linear = 0;
  for (int k = 0; k < J; ++k) linear += (k == 0 ? 1 : 2) * direction[static_cast<std::size_t>(k)];
  result.linear_coefficient = to_long_double(linear);
  result.points.resize(lambdas.size());
  parallel_for(lambdas.size(), threads, [&](std::size_t i) {
    ProbePoint& pt = result.points[i];
    pt.lambda = lambdas[i];
    std::vector<BigRational> values;
    for (const auto& d : direction) values.push_back(lambdas[i] * d);
    auto report = bound_states(ReducedParams::numeric(values), 1e-19);
    if (report.states.empty()) {
      pt.error = "no root t > 1";
      return;
    }
    pt.t0 = report.states.front().t;
    pt.residual = *pt.t0 - to_long_double(BigRational(1 + lambdas[i] * linear));
  });

  std::vector<double> xs, ys;
  bool all_zero = true;
  std::size_t smallest = lambdas.size();
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const auto& pt = result.points[i];
    if (!pt.t0) continue;
    if (smallest == lambdas.size() || pt.lambda < result.points[smallest].lambda) smallest = i;
    const long double noise = 64 * std::numeric_limits<long double>::epsilon() * *pt.t0;
    if (std::fabs(pt.residual) > noise) all_zero = false;
    xs.push_back(to_double(pt.lambda));
    ys.push_back(static_cast<double>(pt.residual));
  }
  result.exact = !xs.empty() && all_zero;
  if (!result.exact) result.slope = loglog_slope(xs, ys);
  if (smallest < lambdas.size()) {
    const auto& pt = result.points[smallest];
    const long double lam = to_long_double(pt.lambda);
    result.phi0_coefficient = phi_of_t(*pt.t0) / lam;
    result.energy0_coefficient = energy_of_t(*pt.t0) / (lam * lam);
  }
  return result;
}

}  // namespace ptchain
