#include <gtest/gtest.h>

#include <cmath>

#include "ptchain/errors.hpp"
#include "ptchain/spectrum.hpp"

using namespace ptchain;

namespace {

BigRational q(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Spectrum, SingleCouplingState) {
  auto report = bound_states(ReducedParams::numeric({q(3)}));
  ASSERT_EQ(report.states.size(), 1u);
  EXPECT_NEAR(report.states[0].t, 4, 1e-15L);
  EXPECT_NEAR(report.states[0].energy, -0.5L, 1e-15L);
  EXPECT_NEAR(report.states[0].phi, std::log(2.0L), 1e-15L);
  EXPECT_TRUE(bound_states(ReducedParams::numeric({q(-1, 2)})).states.empty());
  EXPECT_TRUE(bound_states(ReducedParams::numeric({q(0)})).states.empty());
}

TEST(Spectrum, ThreeCouplingExample) {
  auto report = bound_states(ReducedParams::numeric({q(17), q(6), q(5)}), 1e-18);
  ASSERT_EQ(report.states.size(), 3u);
  EXPECT_NEAR(report.states[0].t, 30.95255L, 1e-5L);
  EXPECT_NEAR(report.states[1].t, 7.62397L, 1e-5L);
  EXPECT_NEAR(report.states[2].t, 1.344689L, 1e-6L);
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(report.states[static_cast<std::size_t>(k)].level, k);
    if (k > 0) EXPECT_GT(report.states[static_cast<std::size_t>(k)].energy, report.states[static_cast<std::size_t>(k - 1)].energy);
  }
}

TEST(Spectrum, WavefunctionSolvesTheChain) {
  ReducedParams params = ReducedParams::numeric({q(17), q(6), q(5)});
  RawParams raw = embed(params);
  for (const auto& s : bound_states(params, 1e-18).states) {
    Wavefunction psi = wavefunction(raw, s);
    EXPECT_LT(wavefunction_residual(raw, psi, s.energy), 1e-10L);
    // Exponential decay on both sides.
    EXPECT_NEAR(std::fabs(psi.at(30) / psi.at(29)), std::exp(-s.phi), 1e-12L);
    EXPECT_NEAR(std::fabs(psi.at(-30) / psi.at(-29)), std::exp(-s.phi), 1e-12L);
  }
}

TEST(Spectrum, WavefunctionInRawGauge) {
  RawParams raw({{q(1, 2), q(3)}, {q(-2), q(1, 4)}});
  auto report = bound_states(reduce_regular(raw), 1e-18);
  ASSERT_FALSE(report.states.empty());
  for (const auto& s : report.states) {
    Wavefunction psi = wavefunction(raw, s);
    EXPECT_LT(wavefunction_residual(raw, psi, s.energy), 1e-10L);
  }
}

TEST(Spectrum, DomainScanSingleCoupling) {
  PlaneSpec plane;
  plane.param1 = "a";
  plane.param2 = "ap";
  plane.raw = true;
  plane.lo1 = plane.lo2 = -2;
  plane.hi1 = plane.hi2 = 2;
  plane.step1 = plane.step2 = q(1, 4);
  DomainGrid grid = domain_scan(1, plane, {}, {}, 2);
  EXPECT_EQ(grid.n1, 17);
  EXPECT_EQ(grid.n2, 17);
  for (const auto& c : grid.cells) {
    if (c.singular) {
      EXPECT_EQ(c.count, 0);
      continue;
    }
    EXPECT_EQ(c.count, (1 - c.p1) * (1 + c.p2) > 1 ? 1 : 0);
  }
}

TEST(Spectrum, BoundaryFollowsSingleCouplingCurve) {
  PlaneSpec plane;
  plane.param1 = "a";
  plane.param2 = "ap";
  plane.raw = true;
  plane.lo1 = -1;
  plane.hi1 = q(1, 2);
  plane.lo2 = q(-1, 2);
  plane.hi2 = 1;
  plane.step1 = plane.step2 = q(1, 20);
  DomainGrid grid = domain_scan(1, plane, {}, {}, 1);
  auto levels = boundary_extract(grid);
  ASSERT_EQ(levels.size(), 1u);
  ASSERT_EQ(levels[0].polylines.size(), 1u);
  EXPECT_GT(levels[0].polylines[0].size(), 10u);
  for (const auto& [a, ap] : levels[0].polylines[0]) {
    double best = 1e9;
    for (int k = 0; k <= 20000; ++k) {
      double c = -0.6 + 1.7 * k / 20000;
      best = std::min(best, std::hypot(a - c / (1 + c), ap - c));
    }
    EXPECT_LE(best, 0.05 * std::sqrt(2.0)) << a << "," << ap;
  }
}

TEST(Spectrum, UnknownPlaneParameter) {
  PlaneSpec plane;
  plane.param1 = "u";
  plane.param2 = "q";
  plane.lo1 = plane.lo2 = 0;
  plane.hi1 = plane.hi2 = 1;
  plane.step1 = plane.step2 = 1;
  EXPECT_THROW(domain_scan(2, plane, {q(1), q(1)}, {}, 1), Error);
}

TEST(Spectrum, LogLogSlope) {
  std::vector<double> x{1, 2, 4, 8}, y;
  for (double v : x) y.push_back(3 * v * v);
  ASSERT_TRUE(loglog_slope(x, y).has_value());
  EXPECT_NEAR(*loglog_slope(x, y), 2.0, 1e-12);
}

TEST(Spectrum, WeakCouplingProbe) {
  ProbeResult r = perturbative_probe(3, {q(1), q(1), q(1)}, {q(1, 100), q(1, 200), q(1, 400), q(1, 800)});
  ASSERT_TRUE(r.slope.has_value());
  EXPECT_NEAR(*r.slope, 2.0, 0.3);
  EXPECT_NEAR(r.linear_coefficient, 5, 1e-15L);
}
