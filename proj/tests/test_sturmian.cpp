#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ptchain/errors.hpp"
#include "ptchain/parse.hpp"
#include "ptchain/roots.hpp"
#include "ptchain/spectrum.hpp"
#include "ptchain/sturmian.hpp"

using namespace ptchain;

namespace {

const Var kNames[] = {Var::u, Var::v, Var::w, Var::y, Var::z, Var::m, Var::n};

BigRational q(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<BigRational> random_values(std::mt19937& rng, int J) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  std::vector<BigRational> v;
  while (static_cast<int>(v.size()) < J) {
    BigRational r = q(num(rng), den(rng));
    if (r != 0 && r != -1) v.push_back(r);
  }
  return v;
}

// N^2 - t(1+u) D^2 with u symbolic.
Poly identity_lhs(const Factorization& f) {
  const Poly t = Poly::identity();
  const Poly one_plus_u = Poly::constant(Coef(1) + Coef::variable(Var::u));
  return f.N * f.N - t * one_plus_u * f.D * f.D;
}

long double eval(const Poly& p, long double x) {
  const QPoly qp = to_rational(p);
  long double r = 0;
  for (int k = qp.degree(); k >= 0; --k) r = r * x + to_long_double(qp.coeffs()[static_cast<std::size_t>(k)]);
  return r;
}

}  // namespace

TEST(Sturmian, FactorizationIdentitySymbolic) {
  for (int J = 2; J <= 6; ++J) {
    SecularPoly sp = secular_poly(ReducedParams::symbolic(J), true);
    Factorization f = factorize(sp);
    EXPECT_EQ(identity_lhs(f), sp.poly.shifted(f.extra_t_power)) << "J=" << J;
  }
}

TEST(Sturmian, FactorizationIdentityRandomSevenCouplings) {
  std::mt19937 rng(2024);
  for (int draw = 0; draw < 20; ++draw) {
    auto values = random_values(rng, 7);
    ReducedParams params = ReducedParams::numeric(values).with_symbolic_u();
    SecularPoly sp = secular_poly(params, true);
    Factorization f = factorize(sp);
    EXPECT_EQ(identity_lhs(f), sp.poly.shifted(f.extra_t_power)) << params.to_string();
    // And at the drawn u, against the fully numeric polynomial.
    Poly lhs = substitute(identity_lhs(f), Var::u, values[0]);
    EXPECT_EQ(to_rational(lhs), to_rational(secular_poly(ReducedParams::numeric(values)).poly.shifted(f.extra_t_power)));
  }
}

TEST(Sturmian, SingleCouplingNeedsExtraPower) {
  Factorization f = factorize(secular_poly(ReducedParams::symbolic(1), true));
  EXPECT_EQ(f.extra_t_power, 1);
  EXPECT_EQ(to_string(f_rational(ReducedParams::symbolic(1)).N), "t");
}

TEST(Sturmian, OutermostCouplingOffDropsOneLevel) {
  for (int J = 2; J <= 7; ++J) {
    RatFunc f = f_rational(ReducedParams::symbolic(J));
    Poly n = substitute(f.N, kNames[J - 1], 0);
    Poly d = substitute(f.D, kNames[J - 1], 0);
    EXPECT_EQ(normalize(n, d), f_rational(ReducedParams::symbolic(J - 1))) << "J=" << J;
  }
}

TEST(Sturmian, CompleteCoefficientReducesToTilded) {
  JFraction j5 = jfraction(f_rational(ReducedParams::symbolic(5)), 5);
  JFraction j4 = jfraction(f_rational(ReducedParams::symbolic(4)), 4);
  ASSERT_GE(j5.B.size(), 2u);
  ASSERT_GE(j4.B.size(), 2u);
  EXPECT_EQ(j5.B[1].substitute(Var::z, 0), j4.B[1]);
  EXPECT_TRUE(j4.b_tilded(2));
  EXPECT_FALSE(j5.b_tilded(2));
}

TEST(Sturmian, ContinuedFractionReconstructs) {
  for (int J = 1; J <= 6; ++J) {
    RatFunc f = f_rational(ReducedParams::symbolic(J));
    EXPECT_EQ(reconstruct(jfraction(f, J)), f) << "J=" << J;
  }
  std::mt19937 rng(9);
  for (int draw = 0; draw < 20; ++draw) {
    auto values = random_values(rng, 2 + draw % 6);
    RatFunc f = f_rational(ReducedParams::numeric(values));
    try {
      EXPECT_EQ(reconstruct(jfraction(f, static_cast<int>(values.size()))), f);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateStep);
    }
  }
}

TEST(Sturmian, ContinuedFractionLeadingCoefficients) {
  JFraction j = jfraction(f_rational(ReducedParams::symbolic(4)), 4);
  EXPECT_EQ(j.A[0].to_string(), "v");
  EXPECT_EQ(j.B[0].symbolic().to_string(), parse_expression("(1+v)*w").to_string());
  EXPECT_EQ(j.A[1].symbolic().to_string(), parse_expression("w+y+y/w").to_string());
  EXPECT_EQ(j.A[2].symbolic().to_string(), parse_expression("-y/w").to_string());
}

TEST(Sturmian, PartialFractionText) {
  RatFunc f = f_rational(ReducedParams::numeric({q(3), q(1), q(1)}));
  EXPECT_EQ(f.to_string(), "(t^2 - 2*t - 1)/(t - 1)");
  EXPECT_EQ(partial_fractions(f).to_string(), "t - 1 - 2/(t - 1)");
}

TEST(Sturmian, CouplingRecoveredAtEveryBoundState) {
  std::mt19937 rng(17);
  int checked = 0;
  for (int draw = 0; draw < 40; ++draw) {
    auto values = random_values(rng, 1 + draw % 4);
    ReducedParams params = ReducedParams::numeric(values);
    RatFunc f = f_rational(params);
    for (const auto& s : bound_states(params, 1e-18).states) {
      try {
        long double u = sturmian_coupling(s.t, f);
        long double want = to_long_double(values[0]);
        EXPECT_NEAR(u, want, 1e-9L * std::max<long double>(1, std::fabs(want)));
        ++checked;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PoleHit);
      }
    }
  }
  EXPECT_GT(checked, 10);
  // Exact rational path.
  RatFunc f1 = f_rational(ReducedParams::numeric({q(3)}));
  EXPECT_EQ(sturmian_coupling(BigRational(4), f1), 3);
}

TEST(Sturmian, ShapeParityMatchesEndBehaviour) {
  // Each interval between real poles is probed just inside its ends: an
  // interval is full range exactly when f has opposite infinite limits.
  std::mt19937 rng(23);
  for (int draw = 0; draw < 60; ++draw) {
    auto values = random_values(rng, 2 + draw % 4);
    RatFunc f = f_rational(ReducedParams::numeric(values));
    ShapeClassification shape = shape_classify(f);
    if (shape.complex_poles > 0) continue;
    int full = 0;
    for (const auto& iv : shape.intervals) {
      auto limit_sign = [&](std::optional<long double> end, int side) {
        long double x = end ? *end + side * 1e-7L * (1 + std::fabs(*end)) : side * 1e7L;
        long double value = eval(f.N, x) / eval(f.D, x);
        return value > 0 ? 1 : -1;
      };
      int left = limit_sign(iv.lo, iv.lo ? +1 : -1);
      int right = limit_sign(iv.hi, iv.hi ? -1 : +1);
      EXPECT_EQ(iv.full_range, left != right) << f.to_string();
      if (iv.full_range) {
        ++full;
        EXPECT_EQ(iv.shape, "/");
      } else {
        EXPECT_EQ(iv.shape, left > 0 ? "cup" : "cap");
      }
    }
    EXPECT_EQ(shape.full_range_count, full);
    EXPECT_EQ(shape.nominal_intersections, 2 * full);
  }
}

TEST(Sturmian, ThreeCouplingLabel) {
  std::mt19937 rng(31);
  for (int draw = 0; draw < 40; ++draw) {
    auto values = random_values(rng, 3);
    ShapeClassification shape = shape_classify(f_rational(ReducedParams::numeric(values)));
    const bool expected = (1 + values[1]) * values[2] > 0;
    EXPECT_EQ(shape.label == "/+/", expected) << shape.label;
  }
}

TEST(Sturmian, FullRangeIntervalsHoldTwoIntersections) {
  // On a full-range interval inside t > 0, f sweeps every real value and so
  // meets both branches +-sqrt((1+u)t) of f^2 = (1+u)t.
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> unum(-9, 60);
  int checked = 0;
  for (int draw = 0; draw < 60; ++draw) {
    auto values = random_values(rng, 3 + draw % 3);
    RatFunc f = f_rational(ReducedParams::numeric(values));
    ShapeClassification shape = shape_classify(f);
    const QPoly n = to_rational(f.N), d = to_rational(f.D), t = QPoly({BigRational(0), BigRational(1)});
    for (int k = 0; k < 4; ++k) {
      const BigRational u = q(unum(rng), 10);
      const QPoly p = n * n - QPoly::constant(1 + u) * t * d * d;
      for (const auto& iv : shape.intervals) {
        if (!iv.full_range || !iv.lo || *iv.lo <= 0) continue;
        std::optional<BigRational> lo = BigRational(static_cast<double>(*iv.lo));
        std::optional<BigRational> hi;
        if (iv.hi) hi = BigRational(static_cast<double>(*iv.hi));
        int count = 0;
        for (const auto& r : sturm_isolate(p, lo, hi)) count += r.multiplicity;
        EXPECT_GE(count, 2) << f.to_string() << " u=" << u.get_str();
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20);
}
