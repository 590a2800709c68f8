#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ptchain/dense_poly.hpp"
#include "ptchain/laurent.hpp"
#include "ptchain/parse.hpp"
#include "ptchain/roots.hpp"

using namespace ptchain;

namespace {

Coef sym(const char* text) { return parse_coef(text); }

QPoly qpoly(std::initializer_list<long> ascending) {
  std::vector<BigRational> c;
  for (long v : ascending) c.emplace_back(v);
  return QPoly(std::move(c));
}

BigRational random_rational(std::mt19937& rng, int lo, int hi, int den_max = 7) {
  std::uniform_int_distribution<int> num(lo * den_max, hi * den_max), den(1, den_max);
  BigRational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST(Rational, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_rational("0.05"), BigRational(1, 20));
  EXPECT_EQ(parse_rational("-3/4"), BigRational(-3, 4));
  EXPECT_EQ(parse_rational("1e-3"), BigRational(1, 1000));
  EXPECT_EQ(parse_rational("-2.5E+2"), BigRational(-250));
  EXPECT_THROW(parse_rational("1.2.3"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(MultiPoly, GcdExamples) {
  auto mp = [](const char* s) { return parse_expression(s).numerator(); };
  EXPECT_EQ(gcd(mp("w*y"), mp("w^2")), mp("w"));
  EXPECT_EQ(gcd(mp("y^2-w*z*(1+y)"), MultiPoly(1)), MultiPoly(1));
  EXPECT_EQ(gcd(mp("(1+v)*w"), mp("1+v")), mp("1+v"));
  EXPECT_EQ(gcd(mp("(u-v)*(u+2*w)^2"), mp("(u+2*w)*(u*v+1)")), mp("u+2*w"));
  EXPECT_EQ(gcd(mp("6*u^2-6"), mp("4*u+4")), mp("u+1"));
}

TEST(MultiPoly, CanonicalText) {
  EXPECT_EQ(parse_expression("2*v+u+1").numerator().to_string(), "1+u+2*v");
  EXPECT_EQ(parse_expression("v^2").numerator().to_string(), "v^2");
}

TEST(Poly, SquareExpansion) {
  Poly p = parse_poly("t - v");
  EXPECT_EQ(to_string(p * p), "t^2 - 2*v*t + v^2");
}

TEST(Poly, DivremSymbolic) {
  auto [q, r] = parse_poly("t^2-(v+w)*t-w").divrem(parse_poly("t-w"));
  EXPECT_EQ(to_string(q), "t - v");
  EXPECT_EQ(r, Poly::constant(sym("-(1+v)*w")));
}

TEST(Poly, Evaluation) {
  EXPECT_EQ(qpoly({1, -6, 1}).evaluate(BigRational(3)), BigRational(-8));
}

TEST(Poly, DivremThrowsOnZero) { EXPECT_THROW(parse_poly("t+1").divrem(Poly{}), Error); }

TEST(Poly, CanonicalPrinting) {
  EXPECT_EQ(to_string(parse_poly("t^2-t*(1+u+2*v)+v^2")), "t^2 - (1+u+2*v)*t + v^2");
  EXPECT_EQ(to_string(parse_poly("t-(1+u)")), "t - (1+u)");
  EXPECT_EQ(to_string(parse_poly("t^4-40*t^3+291*t^2-340*t+25")), "t^4 - 40*t^3 + 291*t^2 - 340*t + 25");
}

TEST(PolySqrt, Examples) {
  EXPECT_EQ(poly_sqrt(parse_poly("t^2-2*v*t+v^2")), parse_poly("t-v"));
  Poly secular2 = parse_poly("t^2-(1+u+2*v)*t+v^2");
  EXPECT_EQ(poly_sqrt(substitute(secular2, Var::u, BigRational(-1))), parse_poly("t-v"));
  EXPECT_THROW(poly_sqrt(parse_poly("t^2+1")), Error);
}

TEST(PolySqrt, SquareOfRandomPolynomials) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Coef> c;
    int deg = 1 + trial % 5;
    for (int k = 0; k < deg; ++k) c.emplace_back(random_rational(rng, -5, 5));
    c.emplace_back(BigRational(1));
    Poly p(c);
    Poly root = poly_sqrt(p * p);
    EXPECT_EQ(root, p);
  }
  Poly s = parse_poly("t^3-(v+w+y)*t^2+(v*y-w-y)*t-y");
  EXPECT_EQ(poly_sqrt(s * s), s);
}

TEST(Poly, DivremIdentityRandom) {
  std::mt19937 rng(11);
  const char* symbols[] = {"u", "v", "w", "1", "u*v", "w/(1+v)"};
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Coef> a, b;
    for (int k = 0; k < 5; ++k) a.push_back(sym(symbols[rng() % 6]) * Coef(random_rational(rng, -3, 3)));
    for (int k = 0; k < 3; ++k) b.push_back(sym(symbols[rng() % 6]) + Coef(random_rational(rng, -3, 3)));
    b.push_back(sym("1+u"));
    Poly pa(a), pb(b);
    auto [q, r] = pa.divrem(pb);
    EXPECT_LT(r.degree(), pb.degree());
    EXPECT_EQ(pb * q + r, pa);
  }
}

TEST(Coef, SymbolicNumericHomomorphism) {
  std::mt19937 rng(3);
  const char* exprs[] = {"(1+v)*w", "w+y+y/w", "-(1+w)*y^2/w^2", "(y*z-(1+y)*(1+z)*w*m)/(y^2-w*z*(1+y))", "u-2*v"};
  for (int trial = 0; trial < 40; ++trial) {
    Coef a = sym(exprs[rng() % 5]), b = sym(exprs[rng() % 5]);
    std::map<Var, BigRational> point;
    for (Var var : {Var::u, Var::v, Var::w, Var::y, Var::z, Var::m}) point[var] = random_rational(rng, 1, 4);
    BigRational av = a.evaluate(point), bv = b.evaluate(point);
    EXPECT_EQ((a + b).evaluate(point), av + bv);
    EXPECT_EQ((a - b).evaluate(point), av - bv);
    EXPECT_EQ((a * b).evaluate(point), av * bv);
    EXPECT_EQ((a / b).evaluate(point), av / bv);
  }
}

TEST(Coef, FractionsReduce) {
  Coef c = sym("(w^2*y+w*y)/(w^2)");
  EXPECT_EQ(c.to_string(), "(y+w*y)/w");
  EXPECT_EQ(sym("(1+v)*w/(1+v)"), sym("w"));
}

TEST(Laurent, EvenExponentsToT) {
  // x^2 - 3 + 2 x^-2 -> t - 3 + 2/t -> t^2 - 3t + 2 with prefactor t^1
  LaurentPoly p(-2, {Coef(2), Coef(0), Coef(-3), Coef(0), Coef(1)});
  int s = -1;
  Poly t = p.to_t_polynomial(&s);
  EXPECT_EQ(s, 1);
  EXPECT_EQ(to_string(t), "t^2 - 3*t + 2");
  LaurentPoly odd(-1, {Coef(1), Coef(0), Coef(1)});
  EXPECT_THROW(odd.to_t_polynomial(&s), Error);
}

TEST(Roots, QuadraticAboveOne) {
  QPoly p = qpoly({1, -6, 1});
  auto brackets = sturm_isolate(p, BigRational(1), std::nullopt);
  ASSERT_EQ(brackets.size(), 1u);
  EXPECT_NEAR(static_cast<double>(refine_root(p, brackets[0])), 3 + 2 * std::sqrt(2.0), 1e-12);
}

TEST(Roots, QuarticSignTable) {
  QPoly p = qpoly({25, -340, 291, -40, 1});
  EXPECT_EQ(p.evaluate(BigRational(1)), -63);
  EXPECT_EQ(p.evaluate(BigRational(2)), 205);
  EXPECT_EQ(p.evaluate(BigRational(10)), -4275);
  EXPECT_EQ(p.evaluate(BigRational(32)), 24985);
  auto brackets = sturm_isolate(p, BigRational(1), std::nullopt);
  ASSERT_EQ(brackets.size(), 3u);
  long double last = refine_root(p, brackets[2]);
  EXPECT_GT(last, 30.0L);
  EXPECT_LT(last, 32.0L);
  long double first = refine_root(p, brackets[0]);
  EXPECT_GT(first, 1.0L);
  EXPECT_LT(first, 2.0L);
}

TEST(Roots, NoneAboveOne) {
  EXPECT_TRUE(sturm_isolate(qpoly({1, 1}), BigRational(1), std::nullopt).empty());
}

TEST(Roots, ExactRoot) {
  QPoly p = qpoly({-4, 1});
  auto brackets = sturm_isolate(p, BigRational(1), std::nullopt);
  ASSERT_EQ(brackets.size(), 1u);
  EXPECT_EQ(refine_root(p, brackets[0]), 4.0L);
}

TEST(Roots, RepeatedRootMultiplicity) {
  // (t-2)^2 (t-3)
  QPoly p = qpoly({-12, 16, -7, 1});
  auto brackets = sturm_isolate(p, std::nullopt, std::nullopt);
  ASSERT_EQ(brackets.size(), 2u);
  EXPECT_EQ(brackets[0].multiplicity, 2);
  EXPECT_EQ(brackets[1].multiplicity, 1);
  RootCensus c = root_census(p);
  EXPECT_EQ(c.distinct_real, 2);
  EXPECT_EQ(c.real_with_multiplicity, 3);
  EXPECT_EQ(c.complex_count, 0);
  EXPECT_TRUE(c.has_repeated_above_one);
}

TEST(Roots, CountMatchesConstructedRoots) {
  // Polynomials built from known distinct rational roots times an
  // irreducible quadratic; the count must match the construction.
  std::mt19937 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<BigRational> roots;
    while (static_cast<int>(roots.size()) < n) {
      BigRational r = random_rational(rng, -6, 6, 5);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    QPoly p = QPoly::constant(BigRational(random_rational(rng, 1, 3)));
    for (const auto& r : roots) p = p * QPoly({BigRational(-r), BigRational(1)});
    if (trial % 2 == 0) p = p * qpoly({2, 1, 1});
    auto brackets = sturm_isolate(p, std::nullopt, std::nullopt);
    ASSERT_EQ(static_cast<int>(brackets.size()), n);
    std::sort(roots.begin(), roots.end());
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(static_cast<double>(refine_root(p, brackets[i])), to_double(roots[i]), 1e-11);
    }
  }
}

TEST(Roots, CountMatchesFineGridSignChanges) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int deg = 2 + static_cast<int>(rng() % 7);
    std::vector<BigRational> c;
    for (int k = 0; k <= deg; ++k) c.push_back(random_rational(rng, -4, 4, 3));
    if (c.back() == 0) c.back() = 1;
    QPoly p(c);
    QPoly sqf = squarefree_part(p);
    // Grid oracle on [-B, B] with B the root bound.
    double bound = to_double(root_bound(sqf));
    int changes = 0;
    const int steps = 200000;
    double prev = to_double(sqf.evaluate(from_double(-bound)));
    for (int i = 1; i <= steps; ++i) {
      double x = -bound + 2 * bound * i / steps;
      double val = 0;
      for (int k = sqf.degree(); k >= 0; --k) val = val * x + to_double(sqf.coeff(k));
      if (val == 0) continue;
      if ((val > 0) != (prev > 0) && prev != 0) ++changes;
      prev = val;
    }
    int isolated = static_cast<int>(sturm_isolate(p, std::nullopt, std::nullopt).size());
    EXPECT_EQ(isolated, changes) << to_string(p);
  }
}
