#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ptchain/oracle.hpp"
#include "ptchain/secular.hpp"
#include "ptchain/spectrum.hpp"

using namespace ptchain;

namespace {

BigRational q(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<std::vector<BigRational>> dense_minus(const TruncatedHamiltonian& h, const BigRational& e) {
  const int n = h.dimension();
  std::vector<std::vector<BigRational>> m(static_cast<std::size_t>(n), std::vector<BigRational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h.entry(i, j) - (i == j ? e : 0);
  }
  return m;
}

}  // namespace

TEST(Oracle, RecurrenceMatchesDenseDeterminant) {
  RawParams raw({{q(1, 2), q(1, 3)}, {q(-2), q(3, 4)}, {q(5), q(0)}});
  auto h = build_truncated(raw, 5);
  for (const BigRational& e : {q(-1, 3), q(0), q(7, 2)}) {
    BigRational exact = char_eval_exact(h, e);
    EXPECT_EQ(exact, dense_determinant(dense_minus(h, e)));
    CharValue v = char_eval(h, to_long_double(e));
    EXPECT_EQ(v.sign, exact > 0 ? 1 : (exact < 0 ? -1 : 0));
    if (exact != 0) EXPECT_NEAR(v.log_magnitude, std::log(std::fabs(to_long_double(exact))), 1e-12L);
  }
}

TEST(Oracle, TruncatedDeterminantFoldsIntoMatchingMatrix) {
  // Eliminating the 2L free sites on each side of the scattering region
  // leaves the matching matrix with its corners replaced by e - U_{L-1}/U_L,
  // times U_L^2, where e = 2 - E and U is the Chebyshev-type recurrence.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const int J = 1 + trial % 4;
    std::vector<std::pair<BigRational, BigRational>> pairs;
    for (int k = 0; k < J; ++k) pairs.emplace_back(q(num(rng), den(rng)), q(num(rng), den(rng)));
    RawParams raw(pairs);
    if (raw.is_singular()) continue;
    const int N = J + 1 + trial;
    const int L = N - J;
    const BigRational x = q(3 + trial, 2);
    const BigRational e = x + 1 / x;
    const BigRational energy = 2 - e;
    std::vector<BigRational> U{1, e};
    for (int k = 2; k <= L; ++k) U.push_back(e * U[static_cast<std::size_t>(k - 1)] - U[static_cast<std::size_t>(k - 2)]);
    auto m = matching_matrix(raw).evaluate_exact(x);
    const BigRational corner = e - U[static_cast<std::size_t>(L - 1)] / U[static_cast<std::size_t>(L)];
    m.front().front() = corner;
    m.back().back() = corner;
    const BigRational rhs = U[static_cast<std::size_t>(L)] * U[static_cast<std::size_t>(L)] * dense_determinant(m);
    EXPECT_EQ(char_eval_exact(build_truncated(raw, N), energy), rhs) << "J=" << J << " N=" << N;
  }
}

TEST(Oracle, EigenvaluesApproachSecularEnergy) {
  RawParams raw = embed(ReducedParams::numeric({q(3)}));
  auto eig = eigen_below_continuum(build_truncated(raw, 40));
  ASSERT_EQ(eig.size(), 1u);
  EXPECT_NEAR(eig[0], -0.5L, 1e-12L);
}

TEST(Oracle, NonSymmetrizableChainUsesSignSearch) {
  // A negative bond product rules out the inertia count.
  RawParams raw({{q(3), q(0)}, {q(1, 2), q(0)}});
  auto h = build_truncated(raw, 60);
  auto report = bound_states(reduce_regular(raw), 1e-18);
  auto eig = eigen_below_continuum(h);
  for (const auto& s : report.states) {
    long double best = 1e9L;
    for (long double ev : eig) best = std::min(best, std::fabs(ev - s.energy));
    EXPECT_LT(best, 1e-8L);
  }
}

TEST(Oracle, ConvergenceRateIsLogT) {
  RawParams raw = embed(ReducedParams::numeric({q(3)}));
  OracleReport r = convergence_study(raw, {4, 6, 8, 10, 12}, 1e-18L, 2);
  ASSERT_EQ(r.secular_energies.size(), 1u);
  ASSERT_TRUE(r.decay_rate[0].has_value());
  EXPECT_NEAR(*r.decay_rate[0], std::log(4.0), 0.05);
  EXPECT_NEAR(r.expected_rate[0], std::log(4.0), 1e-12);
  EXPECT_FALSE(r.slow[0]);
}

TEST(Oracle, GershgorinFloorBoundsSpectrum) {
  RawParams raw({{q(-5), q(2)}});
  auto h = build_truncated(raw, 10);
  long double floor = gershgorin_floor(h);
  for (long double e : eigen_below_continuum(h)) EXPECT_GE(e, floor);
  EXPECT_EQ(char_eval(h, floor - 1).sign, char_eval(h, floor - 2).sign);
}

TEST(Oracle, ClosePairBetweenSamplesIsResolved) {
  // Two real levels 1.2e-3 apart, far closer than the sampling step.
  ReducedParams params = ReducedParams::numeric({q(-1, 2), q(-21, 10), q(-4, 5), q(77, 10)});
  auto report = bound_states(params, 1e-18);
  ASSERT_EQ(report.states.size(), 2u);
  auto eig = eigen_below_continuum(build_truncated(embed(params), 200));
  ASSERT_EQ(eig.size(), 2u);
  EXPECT_NEAR(eig[0], report.states[0].energy, 1e-10L);
  EXPECT_NEAR(eig[1], report.states[1].energy, 1e-10L);
}
