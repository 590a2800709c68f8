#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ptchain/errors.hpp"
#include "ptchain/model.hpp"

using namespace ptchain;

namespace {

BigRational q(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Model, ReducedCouplingFromPair) {
  RawParams raw({{q(1, 2), q(1, 3)}, {q(-2), q(0)}});
  ReducedParams r = reduce(raw);
  ASSERT_EQ(r.J, 2);
  auto v = r.numeric_values();
  EXPECT_EQ(v[0], q(1, 2) * q(4, 3) - 1);
  EXPECT_EQ(v[1], q(2));
}

TEST(Model, EmbedThenReduceIsIdentity) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigRational> values;
    while (static_cast<int>(values.size()) < 1 + trial % 7) {
      BigRational v = q(num(rng), den(rng));
      if (v != -1) values.push_back(v);
    }
    ReducedParams r = ReducedParams::numeric(values);
    RawParams raw = embed(r);
    EXPECT_FALSE(raw.is_singular());
    EXPECT_EQ(reduce(raw).numeric_values(), values);
  }
}

TEST(Model, SingularPairsAreReported) {
  RawParams raw({{q(1), q(0)}, {q(0), q(0)}, {q(3), q(-1)}});
  EXPECT_EQ(raw.singular_pairs(), (std::vector<int>{0, 2}));
  EXPECT_THROW(reduce_regular(raw), Error);
  try {
    reduce_regular(raw);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularParameters);
  }
}

TEST(Model, BondPairIndexLayout) {
  // Bond n joins sites n and n+1; pair k sits on bonds -k and k-2.
  const int J = 3;
  EXPECT_EQ(bond_pair_index(-1, J), 1);
  EXPECT_EQ(bond_pair_index(-3, J), 3);
  EXPECT_EQ(bond_pair_index(-4, J), 0);
  EXPECT_EQ(bond_pair_index(0, J), 2);
  EXPECT_EQ(bond_pair_index(1, J), 3);
  EXPECT_EQ(bond_pair_index(2, J), 0);
}

TEST(Model, TruncatedHamiltonianShapeAndSymmetry) {
  RawParams raw({{q(1, 2), q(1, 5)}, {q(-3), q(2)}});
  auto h = build_truncated(raw, 6);
  EXPECT_EQ(h.dimension(), 12);
  EXPECT_TRUE(pt_check(h));
  for (int i = 0; i < h.dimension(); ++i) EXPECT_EQ(h.entry(i, i), 2);
  // Far bonds are the free hopping -1.
  EXPECT_EQ(h.entry(0, 1), -1);
  EXPECT_EQ(h.entry(1, 0), -1);
  // Bond -1 carries pair 1.
  const int i = h.index_of_site(-1);
  EXPECT_EQ(h.entry(i, i + 1), q(-1, 2));
  EXPECT_EQ(h.entry(i + 1, i), q(-6, 5));
  EXPECT_EQ(h.entry(0, 5), 0);
}

TEST(Model, TruncationMustExceedJ) {
  RawParams raw({{q(1, 2), q(0)}, {q(1, 2), q(0)}});
  EXPECT_THROW(build_truncated(raw, 2), Error);
  EXPECT_NO_THROW(build_truncated(raw, 3));
}

TEST(Model, EnergyMapRoundTrip) {
  for (long double t : {1.0000001L, 1.5L, 4.0L, 30.95L, 1e6L}) {
    long double e = energy_of_t(t);
    EXPECT_LT(e, 0);
    EXPECT_NEAR(t_of_energy(e) / t, 1, 1e-15L);
    long double x = std::sqrt(t);
    EXPECT_NEAR(e, -(x - 1) * (x - 1) / x, 1e-15L * (1 + std::fabs(e)));
    EXPECT_NEAR(phi_of_t(t), std::log(t) / 2, 1e-15L);
  }
  EXPECT_EQ(energy_of_t(4), -0.5L);
}

TEST(Model, ParameterDocument) {
  auto raw = parse_param_document(R"({"mode":"raw","pairs":[["1/2","0.25"],[-3,2]]})");
  ASSERT_TRUE(std::holds_alternative<RawParams>(raw));
  EXPECT_EQ(std::get<RawParams>(raw).pairs[0].second, q(1, 4));
  EXPECT_EQ(std::get<RawParams>(raw).pairs[1].first, q(-3));

  auto red = parse_param_document(R"({"J":3,"values":["17",6,"5"]})");
  ASSERT_TRUE(std::holds_alternative<ReducedParams>(red));
  EXPECT_EQ(std::get<ReducedParams>(red).numeric_values(), (std::vector<BigRational>{17, 6, 5}));

  EXPECT_THROW(parse_param_document(R"({"J":2,"values":[1]})"), Error);
  EXPECT_THROW(parse_param_document(R"({"mode":"other"})"), Error);
  EXPECT_THROW(parse_param_document("not json"), Error);
}

TEST(Model, ValueAndPairLists) {
  EXPECT_EQ(parse_value_list("1.5,-2,3/4"), (std::vector<BigRational>{q(3, 2), q(-2), q(3, 4)}));
  auto pairs = parse_pair_list("0.5:0,-1:2");
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[1].second, 2);
  EXPECT_THROW(parse_pair_list("1,2,3"), Error);
}
