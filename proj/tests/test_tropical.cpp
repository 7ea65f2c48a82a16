#include "cluster/tropical.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cluster {
namespace {

TropicalElement t(std::vector<int> e) { return TropicalElement(std::move(e)); }

TEST(Tropical, Multiplication) {
  EXPECT_EQ(trop_mul(t({2, 0}), t({-1, 1})), t({1, 1}));
  EXPECT_EQ(trop_mul(t({2, 0}), TropicalElement::identity(2)), t({2, 0}));
  EXPECT_EQ(trop_mul(t({2, -3}), t({2, -3}).inverse()), TropicalElement::identity(2));
}

TEST(Tropical, Oplus) {
  EXPECT_EQ(trop_oplus(t({2, 0}), t({-1, 1})), t({-1, 0}));
  EXPECT_EQ(trop_oplus(t({2, 5}), t({2, 5})), t({2, 5}));
  EXPECT_EQ(trop_oplus(TropicalElement::identity(2), t({1, 1})), t({0, 0}));
}

TEST(Tropical, OneOplus) {
  EXPECT_EQ(one_oplus(t({1, 2})), t({0, 0}));
  EXPECT_EQ(one_oplus(t({-1, 0})), t({-1, 0}));
  EXPECT_TRUE(one_oplus(TropicalElement::identity(3)).is_identity());
}

TEST(Tropical, DimensionMismatchThrows) {
  EXPECT_THROW(trop_mul(t({1}), t({1, 2})), std::invalid_argument);
  EXPECT_THROW(trop_oplus(t({1}), t({1, 2})), std::invalid_argument);
}

TEST(Tropical, SplitRecoversBoundaryMonomials) {
  // y_1 = x4 / (x5 x9) over generators x4..x9.
  const auto s = split_pm(t({1, -1, 0, 0, 0, -1}));
  EXPECT_EQ(s.plus, t({1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(s.minus, t({0, 1, 0, 0, 0, 1}));
}

TEST(Tropical, SplitEdgeCases) {
  const auto id = split_pm(TropicalElement::identity(2));
  EXPECT_TRUE(id.plus.is_identity());
  EXPECT_TRUE(id.minus.is_identity());
  const auto s = split_pm(t({2}));
  EXPECT_EQ(s.plus, t({2}));
  EXPECT_EQ(s.minus, t({0}));
}

TEST(Tropical, TrivialSemifieldHasOneElement) {
  const auto e = TropicalElement::identity(0);
  EXPECT_EQ(trop_oplus(e, e), e);
  EXPECT_EQ(trop_mul(e, e), e);
  EXPECT_TRUE(e.is_identity());
}

TEST(Tropical, SemifieldAxiomsOnRandomVectors) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  auto draw = [&] {
    std::vector<int> e(3);
    for (auto& v : e) v = d(rng);
    return t(e);
  };
  for (int i = 0; i < 500; ++i) {
    const auto a = draw(), b = draw(), c = draw();
    EXPECT_EQ(trop_oplus(a, b), trop_oplus(b, a));
    EXPECT_EQ(trop_oplus(trop_oplus(a, b), c), trop_oplus(a, trop_oplus(b, c)));
    EXPECT_EQ(trop_mul(a, trop_oplus(b, c)), trop_oplus(trop_mul(a, b), trop_mul(a, c)));
    const auto s = split_pm(a);
    EXPECT_EQ(trop_mul(s.plus, s.minus.inverse()), a);
    EXPECT_TRUE(trop_oplus(s.plus, s.minus).is_identity());
  }
}

}  // namespace
}  // namespace cluster
