#include "cluster/pattern.hpp"

#include <gtest/gtest.h>

#include <set>

#include "cluster/polygon.hpp"
#include "support/a2_table.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

namespace cluster {
namespace {

using testing::one;
using testing::poly;
using testing::var;

TEST(ExchangeMatrix, ANMatrix) {
  EXPECT_EQ(a_n_matrix(1), (IntMatrix{{0}}));
  EXPECT_EQ(a_n_matrix(2), (IntMatrix{{0, 1}, {-1, 0}}));
  EXPECT_EQ(a_n_matrix(3), (IntMatrix{{0, -1, 0}, {1, 0, 1}, {0, -1, 0}}));
  EXPECT_THROW(a_n_matrix(0), std::invalid_argument);
}

TEST(ExchangeMatrix, ANMatrixHasCartanCounterpartOfTypeA) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto b = a_n_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long cartan = i == j ? 2 : -std::abs(b(i, j));
        const long expected = i == j ? 2 : (i + 1 == j || j + 1 == i ? -1 : 0);
        EXPECT_EQ(cartan, expected);
      }
  }
}

TEST(ExchangeMatrix, Mutation) {
  const auto b1 = mutate_matrix(a_n_matrix(2), 1);
  EXPECT_EQ(b1, (IntMatrix{{0, -1}, {1, 0}}));
  EXPECT_EQ(mutate_matrix(b1, 2), (IntMatrix{{0, 1}, {-1, 0}}));
  EXPECT_THROW(mutate_matrix(b1, 0), std::out_of_range);
  EXPECT_THROW(mutate_matrix(b1, 3), std::out_of_range);
}

TEST(ExchangeMatrix, MutationOfSkewSymmetrizableKeepsSymmetrizer) {
  const IntMatrix b2{{0, 1}, {-2, 0}};  // type B2
  const auto m = mutate_matrix(b2, 1);
  EXPECT_EQ(m, (IntMatrix{{0, -1}, {2, 0}}));
  EXPECT_TRUE(is_skew_symmetrizable(m));
}

TEST(ExchangeMatrix, SkewSymmetrizability) {
  EXPECT_TRUE(is_skew_symmetrizable(IntMatrix{{0, 1}, {-2, 0}}));
  EXPECT_FALSE(is_skew_symmetrizable(IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_FALSE(is_skew_symmetrizable(IntMatrix{{1, 0}, {0, 0}}));
  EXPECT_THROW(initial_seed(IntMatrix{{0, 1}, {1, 0}}, {TropicalElement::identity(0), TropicalElement::identity(0)}),
               std::invalid_argument);
}

TEST(Seed, CoefficientFreeA2FirstMutation) {
  const auto s = mutate(coefficient_free_seed(a_n_matrix(2)), 1);
  EXPECT_EQ(s.cluster[0], poly(2, {{{-1, 1}, 1}, {{-1, 0}, 1}}));
  EXPECT_EQ(s.cluster[1], var(2, 1));
  EXPECT_EQ(s.history, (std::vector<std::size_t>{1}));
}

TEST(Seed, PrincipalA2FirstMutation) {
  const auto s0 = principal_seed(a_n_matrix(2));
  EXPECT_EQ(s0.frozen, 2u);
  EXPECT_EQ(s0.y[0], TropicalElement::generator(2, 0));
  const auto s = mutate(s0, 1);
  // (x2 + y1)/x1 in ambient (x1, x2, y1, y2).
  EXPECT_EQ(s.cluster[0], poly(4, {{{-1, 1, 0, 0}, 1}, {{-1, 0, 1, 0}, 1}}));
  EXPECT_EQ(s.y[0], TropicalElement({-1, 0}));
  EXPECT_EQ(s.y[1], TropicalElement({1, 1}));
}

TEST(Seed, PrincipalA2AlongOneTwo) {
  const auto s = mutate_along(principal_seed(a_n_matrix(2)), {1, 2});
  EXPECT_EQ(s.cluster[1], poly(4, {{{0, -1, 1, 1}, 1}, {{-1, 0, 0, 0}, 1}, {{-1, -1, 1, 0}, 1}}));
}

TEST(Seed, A1ExchangeGivesTwo) {
  const auto s = mutate(coefficient_free_seed(a_n_matrix(1)), 1);
  EXPECT_EQ(s.cluster[0], poly(1, {{{-1}, 2}}));
  EXPECT_TRUE(is_log_concave(s.cluster[0]));
}

TEST(Seed, BadDirectionThrows) {
  const auto s = coefficient_free_seed(a_n_matrix(2));
  EXPECT_THROW(mutate(s, 0), std::out_of_range);
  EXPECT_THROW(mutate(s, 3), std::out_of_range);
}

TEST(Seed, MutationIsInvolutive) {
  const auto s = principal_seed(a_n_matrix(4));
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(mutate(mutate(s, k), k), s);
}

TEST(Seed, A2IsTenPeriodic) {
  const auto s0 = coefficient_free_seed(a_n_matrix(2));
  Seed s = s0;
  for (std::size_t step = 1; step <= 10; ++step) {
    s = mutate(s, step % 2 == 1 ? 1 : 2);
    if (step < 10) EXPECT_NE(s, s0) << "returned early at step " << step;
  }
  EXPECT_EQ(s, s0);
}

TEST(Seed, A2ClusterVariables) {
  const auto vars = cluster_variables(coefficient_free_seed(a_n_matrix(2)));
  std::set<std::string> got, want;
  for (const auto& v : vars) got.insert(v.canonical_key());
  for (const auto& v : {var(2, 0), var(2, 1), poly(2, {{{-1, 1}, 1}, {{-1, 0}, 1}}), poly(2, {{{1, -1}, 1}, {{0, -1}, 1}}),
                        poly(2, {{{0, -1}, 1}, {{-1, 0}, 1}, {{-1, -1}, 1}})})
    want.insert(v.canonical_key());
  EXPECT_EQ(got, want);
}

TEST(Seed, A1ClusterVariables) {
  const auto vars = cluster_variables(coefficient_free_seed(a_n_matrix(1)));
  ASSERT_EQ(vars.size(), 2u);
  std::set<std::string> got{vars[0].canonical_key(), vars[1].canonical_key()};
  EXPECT_TRUE(got.count(poly(1, {{{-1}, 2}}).canonical_key()));
  EXPECT_TRUE(got.count(var(1, 0).canonical_key()));
}

TEST(ExchangeGraph, CountsMatchTriangulations) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto g = enumerate_exchange_graph(coefficient_free_seed(a_n_matrix(n)));
    EXPECT_TRUE(g.closed);
    EXPECT_EQ(g.seeds.size(), testing::triangulation_count(static_cast<int>(n) + 3)) << "n=" << n;
    // Each unlabeled seed has exactly n neighbours.
    std::vector<std::size_t> degree(g.seeds.size(), 0);
    for (const auto& [from, k, to] : g.edges) ++degree[from];
    for (auto d : degree) EXPECT_EQ(d, n);
  }
}

TEST(ExchangeGraph, BudgetExhaustionIsReported) {
  const auto g = enumerate_exchange_graph(coefficient_free_seed(a_n_matrix(3)), 5);
  EXPECT_FALSE(g.closed);
  EXPECT_THROW(cluster_variables(coefficient_free_seed(a_n_matrix(3)), 5), std::runtime_error);
  EXPECT_THROW(enumerate_exchange_graph(coefficient_free_seed(a_n_matrix(3)), 0), std::invalid_argument);
}

TEST(ExchangeGraph, InfiniteTypeDoesNotClose) {
  // Kronecker quiver: infinitely many seeds.
  const auto g = enumerate_exchange_graph(coefficient_free_seed(IntMatrix{{0, 2}, {-2, 0}}), 40);
  EXPECT_FALSE(g.closed);
}

TEST(ExchangeGraph, ClusterVariableCountIsDiagonalCount) {
  for (std::size_t n = 1; n <= 5; ++n)
    EXPECT_EQ(cluster_variables(coefficient_free_seed(a_n_matrix(n))).size(), n * (n + 3) / 2);
}

TEST(CanonicalForm, RelabelingIsIgnored) {
  const auto s = mutate(coefficient_free_seed(a_n_matrix(3)), 2);
  Seed swapped = s;
  std::swap(swapped.cluster[0], swapped.cluster[2]);
  std::swap(swapped.y[0], swapped.y[2]);
  IntMatrix b(3, 3);
  const std::size_t perm[3] = {2, 1, 0};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) b(i, j) = s.B(perm[i], perm[j]);
  swapped.B = b;
  EXPECT_EQ(unlabeled_key(swapped), unlabeled_key(s));
  EXPECT_NE(unlabeled_key(mutate(s, 1)), unlabeled_key(s));
}

TEST(PrincipalA2, MatchesFrozenValues) {
  const auto table = testing::a2_table();
  const auto b0 = a_n_matrix(2);
  PatternVertex v = initial_vertex(principal_seed(b0), true);
  const std::size_t path[] = {1, 2, 1, 2};
  for (std::size_t t = 0; t < table.size(); ++t) {
    if (t > 0) v = step(v, b0, path[t - 1], true);
    const auto& col = table[t];
    SCOPED_TRACE("t" + std::to_string(t));
    EXPECT_EQ(v.seed.B, col.B);
    EXPECT_EQ(v.seed.cluster[0], col.x1);
    EXPECT_EQ(v.seed.cluster[1], col.x2);
    EXPECT_EQ(v.matrices.C, col.C);
    EXPECT_EQ(v.matrices.D, col.D);
    EXPECT_EQ(v.matrices.G, col.G);
    EXPECT_EQ(v.matrices.F, col.F);
    const auto fd = f_data(v.seed);
    EXPECT_EQ(fd.f_polynomials[0], col.f1);
    EXPECT_EQ(fd.f_polynomials[1], col.f2);
    EXPECT_EQ(fd.F, col.F);
    EXPECT_EQ(b0 * v.matrices.C, v.matrices.G * v.seed.B);
    EXPECT_TRUE(check_separation(v.seed, v.matrices.G, b0).ok);
  }
}

TEST(PrincipalA2, SignFlippedGAtT2FailsDuality) {
  const auto b0 = a_n_matrix(2);
  const auto v = step(step(initial_vertex(principal_seed(b0), true), b0, 1, true), b0, 2, true);
  const IntMatrix wrong_g{{1, -1}, {1, 0}};
  EXPECT_NE(b0 * v.matrices.C, wrong_g * v.seed.B);
  EXPECT_FALSE(check_separation(v.seed, wrong_g, b0).ok);
}

TEST(DVectors, RecursionSteps) {
  const auto b0 = a_n_matrix(2);
  const IntMatrix d0{{-1, 0}, {0, -1}};
  const auto d1 = d_vector_step(d0, b0, 1);
  EXPECT_EQ(d1, (IntMatrix{{1, 0}, {0, -1}}));
  EXPECT_EQ(d_vector_step(d1, mutate_matrix(b0, 1), 2), (IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_EQ(d_vector_step(d1, mutate_matrix(b0, 1), 1), d0);
  EXPECT_THROW(d_vector_step(d0, b0, 3), std::out_of_range);
}

TEST(CGMatrices, StepsAlongOneTwo) {
  const auto b0 = a_n_matrix(2);
  const auto m1 = cg_step(initial_matrices(2), b0, b0, 1);
  EXPECT_EQ(m1.C, (IntMatrix{{-1, 1}, {0, 1}}));
  EXPECT_EQ(m1.G, (IntMatrix{{-1, 0}, {1, 1}}));
  const auto b1 = mutate_matrix(b0, 1);
  const auto m2 = cg_step(m1, b1, b0, 2);
  const auto m3 = cg_step(m2, mutate_matrix(b1, 2), b0, 1);
  EXPECT_EQ(m3.C, (IntMatrix{{0, -1}, {-1, 0}}));
  EXPECT_THROW(cg_step(m1, b1, b0, 0), std::out_of_range);
}

TEST(FData, RequiresPrincipalCoefficients) {
  EXPECT_THROW(f_data(coefficient_free_seed(a_n_matrix(2))), std::invalid_argument);
  const auto fd = f_data(principal_seed(a_n_matrix(2)));
  EXPECT_EQ(fd.f_polynomials[0], one(2));
  EXPECT_EQ(fd.F, IntMatrix(2, 2));
}

TEST(Separation, HandComputedAtT1) {
  const auto b0 = a_n_matrix(2);
  const auto s = mutate(principal_seed(b0), 1);
  const IntMatrix g{{-1, 0}, {1, 1}};
  const auto r = check_separation(s, g, b0);
  EXPECT_TRUE(r.ok);
  IntMatrix wrong = g;
  wrong(0, 0) = 1;
  const auto bad = check_separation(s, wrong, b0);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.index, 1u);
  ASSERT_TRUE(bad.mismatch.has_value());
  EXPECT_NE(bad.mismatch->first, bad.mismatch->second);
}

TEST(Separation, ThirdClusterAfterSpecialization) {
  const auto b0 = a_n_matrix(2);
  const auto v = step(step(initial_vertex(principal_seed(b0), true), b0, 1, true), b0, 2, true);
  const auto x = substitute_ones(v.seed.cluster[1], {2, 3});
  EXPECT_EQ(x, poly(2, {{{0, -1}, 1}, {{-1, 0}, 1}, {{-1, -1}, 1}}));
}

TEST(Walk, VisitsEveryClassOnce) {
  std::set<std::string> keys;
  const auto summary = walk_exchange_graph(principal_seed(a_n_matrix(3)), true, kDefaultSeedBudget,
                                           [&](const PatternVertex& v) { keys.insert(unlabeled_key(v.seed)); });
  EXPECT_TRUE(summary.closed);
  EXPECT_EQ(summary.vertices, 14u);
  EXPECT_EQ(keys.size(), 14u);
}

TEST(BoundaryCoefficients, SeedFromZigzagMutatesLikeFlip) {
  const auto t = zigzag(3);
  const auto s = mutate(boundary_seed(t), 1);
  const auto f = flip(t, 1);
  // x1 x1' = x_a x_c + x_b x_d over ambient x1..x9.
  const auto [a, c, b, d] = f.quadruple;
  auto x = [](int label) { return LaurentPoly::variable(9, static_cast<std::size_t>(label - 1)); };
  EXPECT_EQ(s.cluster[0], div_exact(x(a) * x(c) + x(b) * x(d), x(1)));
}

}  // namespace
}  // namespace cluster
