#include "cluster/poly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/builders.hpp"
#include "support/oracles.hpp"

namespace cluster {
namespace {

using testing::one;
using testing::poly;
using testing::var;

TEST(LaurentPoly, AddExamples) {
  const auto x2p1 = var(2, 1) + one(2);
  EXPECT_EQ(add(x2p1, LaurentPoly(2)), x2p1);
  EXPECT_EQ(add(var(2, 1), one(2)), x2p1);
  EXPECT_EQ(add(x2p1, var(2, 1) - one(2)), poly(2, {{{0, 1}, 2}}));
}

TEST(LaurentPoly, ZeroTermsAreNeverStored) {
  auto p = var(2, 0) - var(2, 0);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
}

TEST(LaurentPoly, DimensionMismatchThrows) {
  EXPECT_THROW(add(one(2), one(3)), std::invalid_argument);
  EXPECT_THROW(mul(one(2), one(3)), std::invalid_argument);
}

TEST(LaurentPoly, MulExamples) {
  const auto x2p1 = var(2, 1) + one(2);
  EXPECT_EQ(mul(x2p1, x2p1), poly(2, {{{0, 2}, 1}, {{0, 1}, 2}, {{0, 0}, 1}}));
  EXPECT_EQ(mul(x2p1, poly(2, {{{-1, 0}, 1}})), poly(2, {{{-1, 1}, 1}, {{-1, 0}, 1}}));
}

TEST(LaurentPoly, ProductMatchesBinomialClosedForm) {
  // (x2+1)^m1 (x1+x2+1)^m2 with m1 = m2 = 1: a_{k,l} = C(m2,k) C(m1+m2-k,l).
  const auto p = mul(var(2, 1) + one(2), var(2, 0) + var(2, 1) + one(2));
  auto c = [](unsigned n, unsigned k) -> long {
    long r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * static_cast<long>(n - i) / static_cast<long>(i + 1);
    return k > n ? 0 : r;
  };
  std::size_t support = 0;
  for (unsigned k = 0; k <= 1; ++k)
    for (unsigned l = 0; l <= 2 - k; ++l) {
      EXPECT_EQ(p.coeff({static_cast<int>(k), static_cast<int>(l)}), c(1, k) * c(2 - k, l)) << k << "," << l;
      ++support;
    }
  EXPECT_EQ(p.size(), support);
}

TEST(LaurentPoly, DivExactExamples) {
  const auto x2p1 = var(2, 1) + one(2);
  EXPECT_EQ(div_exact(mul(x2p1, x2p1), x2p1), x2p1);
  EXPECT_EQ(div_exact(x2p1, poly(2, {{{1, -2}, 1}})), poly(2, {{{-1, 3}, 1}, {{-1, 2}, 1}}));
  const auto q = var(2, 0) + var(2, 1) + one(2);
  EXPECT_EQ(div_exact(mul(x2p1, q), q), x2p1);
}

TEST(LaurentPoly, InexactDivisionCarriesRemainder) {
  const auto p = poly(1, {{{2}, 1}, {{0}, 1}});
  const auto q = poly(1, {{{1}, 1}, {{0}, 1}});
  try {
    div_exact(p, q);
    FAIL() << "expected InexactDivision";
  } catch (const InexactDivision& e) {
    EXPECT_FALSE(e.remainder().is_zero());
  }
  EXPECT_THROW(div_exact(p, LaurentPoly(1)), std::domain_error);
}

TEST(LaurentPoly, NormalizeDenominatorExamples) {
  const auto a = normalize_denominator(poly(2, {{{-1, 1}, 1}, {{-1, 0}, 1}}), 2);
  EXPECT_EQ(a.numerator, var(2, 1) + one(2));
  EXPECT_EQ(a.d_vector, (std::vector<int>{1, 0}));

  const auto b = normalize_denominator(var(2, 0), 2);
  EXPECT_EQ(b.numerator, one(2));
  EXPECT_EQ(b.d_vector, (std::vector<int>{-1, 0}));

  const auto n = poly(3, {{{0, 2, 0}, 1}, {{0, 1, 0}, 2}, {{0, 0, 0}, 1}, {{1, 0, 1}, 1}});
  const auto c = normalize_denominator(n.shifted({-1, -1, -1}), 3);
  EXPECT_EQ(c.numerator, n);
  EXPECT_EQ(c.d_vector, (std::vector<int>{1, 1, 1}));

  EXPECT_THROW(normalize_denominator(LaurentPoly(2), 2), std::domain_error);
}

TEST(LaurentPoly, LogConcavityExamples) {
  const auto xp1 = var(1, 0) + one(1);
  EXPECT_TRUE(is_log_concave(xp1.pow(5)));

  const auto r = is_log_concave(poly(1, {{{2}, 1}, {{0}, 1}}));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.violation->point, ExponentVector{1});
  EXPECT_EQ(r.violation->middle, 0);

  const auto ex2 = poly(3, {{{0, 0, 0}, 1}, {{0, 1, 0}, 2}, {{0, 2, 0}, 1}, {{1, 0, 1}, 1}}).shifted({-1, -1, -1});
  EXPECT_TRUE(is_log_concave(ex2));
}

TEST(LaurentPoly, LogConcavityRejectsZeroAndNegative) {
  EXPECT_THROW(is_log_concave(LaurentPoly(2)), std::domain_error);
  EXPECT_THROW(is_log_concave(var(1, 0) - one(1)), std::domain_error);
}

TEST(LaurentPoly, LogConcavityUsesOnlyAdjacentTriples) {
  // x^3 + 1: every triple has a zero at an end, so the inequality holds.
  EXPECT_TRUE(is_log_concave(poly(1, {{{3}, 1}, {{0}, 1}})));
  // Along x1: 1, 1, 4 breaks the inequality at the middle.
  const auto p = poly(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{2, 0}, 4}, {{0, 1}, 1}});
  const auto r = is_log_concave(p);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.violation->axis, 0u);
  EXPECT_EQ(r.violation->point, (ExponentVector{1, 0}));
}

TEST(LaurentPoly, LogConcaveImpliesNoGapBetweenNeighbours) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto p = testing::random_poly(rng, 2, 6, -1, 2, 1, 4);
    if (is_log_concave(p)) EXPECT_TRUE(testing::no_gap_between_neighbours(p)) << p.to_string();
  }
}

TEST(LaurentPoly, SubstituteOnesExamples) {
  // Ambient (x1, x2, y1): (x2 + y1)/x1 -> y1 + 1.
  const auto p = poly(3, {{{-1, 1, 0}, 1}, {{-1, 0, 1}, 1}});
  EXPECT_EQ(substitute_ones(p, {0, 1}), poly(1, {{{1}, 1}, {{0}, 1}}));
  EXPECT_EQ(substitute_ones(LaurentPoly::constant(2, 7), {0}), LaurentPoly::constant(1, 7));
  // (y1 y2 x1 + x2 + y1)/(x1 x2) with ambient (x1, x2, y1, y2).
  const auto q = poly(4, {{{0, -1, 1, 1}, 1}, {{-1, 0, 0, 0}, 1}, {{-1, -1, 1, 0}, 1}});
  EXPECT_EQ(substitute_ones(q, {0, 1}), poly(2, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 1}}));
}

TEST(LaurentPoly, MaxDegreesExamples) {
  EXPECT_EQ(max_degrees(poly(2, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 1}}), {0, 1}), (std::vector<int>{1, 1}));
  EXPECT_EQ(max_degrees(one(2), {0, 1}), (std::vector<int>{0, 0}));
  EXPECT_EQ(max_degrees(poly(2, {{{1, 0}, 1}, {{0, 0}, 1}}), {0, 1}), (std::vector<int>{1, 0}));
  EXPECT_THROW(max_degrees(LaurentPoly(2), {0}), std::domain_error);
}

TEST(LaurentPoly, CanonicalKeyIgnoresConstructionOrder) {
  auto a = var(2, 0) + var(2, 1);
  auto b = var(2, 1) + var(2, 0);
  EXPECT_EQ(a.canonical_key(), b.canonical_key());
  EXPECT_NE(a.canonical_key(), (a + one(2)).canonical_key());
}

TEST(LaurentPoly, BigCoefficientsStayExact) {
  const auto p = (var(1, 0) + one(1)).pow(200);
  EXPECT_EQ(p.coeff({100}), binomial(200, 100));
  EXPECT_GT(p.coeff({100}).get_str().size(), 20u);
}

TEST(LaurentPoly, ToStringRendersFraction) {
  const auto p = poly(3, {{{0, 2, 0}, 1}, {{0, 1, 0}, 2}, {{0, 0, 0}, 1}, {{1, 0, 1}, 1}}).shifted({-1, -1, -1});
  EXPECT_EQ(p.to_string(), "(x1*x3 + x2^2 + 2*x2 + 1)/(x1*x2*x3)");
}

}  // namespace
}  // namespace cluster
