#include <gtest/gtest.h>

#include <random>

#include "numsg/monomial.hpp"

using namespace numsg;

TEST(Compare, Examples) {
  const auto weighted = MonomialOrder::weighted_revlex({6, 8});
  EXPECT_TRUE(compare(weighted, Monomial{2, 0}, Monomial{0, 1}) > 0);
  EXPECT_TRUE(compare(weighted, Monomial{1, 1}, Monomial{1, 1}) == 0);

  // Variables (t, X1): the t-block dominates regardless of degree.
  const auto elim = MonomialOrder::block_elimination(1, {1, 6});
  EXPECT_TRUE(compare(elim, Monomial{1, 0}, Monomial{0, 5}) > 0);
}

TEST(Compare, RevLexTieBreak) {
  const auto order = MonomialOrder::weighted_revlex({6, 8, 9});
  // Both degree 18: the one without the last variable is larger.
  EXPECT_TRUE(compare(order, Monomial{3, 0, 0}, Monomial{0, 0, 2}) > 0);
  EXPECT_TRUE(compare(order, Monomial{0, 3, 0}, Monomial{1, 0, 2}) > 0);
}

TEST(Compare, DimensionMismatch) {
  const auto order = MonomialOrder::weighted_revlex({2, 3});
  try {
    (void)compare(order, Monomial{1}, Monomial{1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Compare, RejectsNonPositiveWeights) {
  EXPECT_THROW(MonomialOrder::weighted_revlex({1, 0}), Error);
  EXPECT_THROW(MonomialOrder::block_elimination(3, {1, 2}), Error);
}

TEST(Monomial, Arithmetic) {
  const Monomial a{2, 0, 1}, b{1, 3, 0};
  EXPECT_EQ(a * b, (Monomial{3, 3, 1}));
  EXPECT_EQ(lcm(a, b), (Monomial{2, 3, 1}));
  EXPECT_TRUE((Monomial{1, 0, 1}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ((a / Monomial{1, 0, 0}), (Monomial{1, 0, 1}));
  EXPECT_THROW(a / b, Error);
  EXPECT_FALSE(a.coprime(b));
  EXPECT_TRUE((Monomial{0, 0, 1}).coprime(Monomial{1, 1, 0}));
  EXPECT_EQ(a.weighted_degree(std::vector<Integer>{6, 8, 9}), 21);
  EXPECT_THROW(Monomial({-1, 0}), Error);
}

class OrderProperties : public ::testing::TestWithParam<int> {};

TEST_P(OrderProperties, TotalMultiplicativeWellOrder) {
  std::mt19937_64 rng(GetParam());
  std::uniform_int_distribution<Exponent> e(0, 4);
  std::uniform_int_distribution<Integer> w(1, 9);
  const std::size_t n = 4;
  std::vector<Integer> weights(n);
  for (auto& x : weights) x = w(rng);
  const auto order = GetParam() % 2 ? MonomialOrder::weighted_revlex(weights)
                                    : MonomialOrder::block_elimination(1, weights);
  auto random_monomial = [&] {
    std::vector<Exponent> v(n);
    for (auto& x : v) x = e(rng);
    return Monomial(v);
  };
  const auto one = Monomial::one(n);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_monomial(), b = random_monomial(), c = random_monomial();
    const auto ab = order.compare(a, b);
    EXPECT_EQ(ab == 0, a == b) << "antisymmetry";
    EXPECT_TRUE(order.compare(b, a) == (0 <=> ab)) << "reversal";
    if (order.less(a, b) && order.less(b, c)) {
      EXPECT_TRUE(order.less(a, c)) << "transitivity";
    }
    EXPECT_TRUE(order.compare(a * c, b * c) == ab) << "multiplicativity";
    EXPECT_TRUE(order.compare(one, a) <= 0) << "1 is minimal";
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, OrderProperties, ::testing::Values(1, 2, 3, 4));
