#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cluster/matrix.hpp"
#include "cluster/poly.hpp"
#include "cluster/tropical.hpp"

namespace cluster {

// Mutation directions are 1-based throughout, matching diagonal labels in the
// polygon model and the CLI.

using ExchangeMatrix = IntMatrix;

inline constexpr std::size_t kDefaultSeedBudget = 10'000;

/// Tridiagonal exchange matrix of type A_n with alternating signs
/// (b_{i,i+1} = -1 for odd i, +1 for even i; 1-based).
ExchangeMatrix a_n_matrix(std::size_t n);

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

/// Labeled seed (x, y, B). Cluster variables live in an ambient Laurent ring
/// with `rank` initial cluster variables followed by `frozen` tropical
/// generators, so coefficients of geometric type are ordinary monomials.
struct Seed {
  std::size_t rank = 0;
  std::size_t frozen = 0;
  std::vector<LaurentPoly> cluster;
  std::vector<TropicalElement> y;
  ExchangeMatrix B;
  std::vector<std::size_t> history;  // mutation directions from the initial seed

  std::size_t ambient() const { return rank + frozen; }

  /// History is bookkeeping only and does not take part in equality.
  friend bool operator==(const Seed& a, const Seed& b) {
    return a.rank == b.rank && a.frozen == b.frozen && a.cluster == b.cluster && a.y == b.y && a.B == b.B;
  }
};

/// Initial seed over an arbitrary tropical coefficient tuple; the frozen
/// count is the rank of the tropical elements (0 gives trivial coefficients).
Seed initial_seed(const ExchangeMatrix& b, std::vector<TropicalElement> y);
Seed coefficient_free_seed(const ExchangeMatrix& b);
/// Principal coefficients: P = Trop(y_1..y_n) and y_{t0} = (y_1..y_n).
Seed principal_seed(const ExchangeMatrix& b0);

/// Seed mutation in direction k. Throws InexactDivision if the exchange
/// binomial is not divisible by x_k (this would contradict the Laurent
/// phenomenon) and std::out_of_range for a bad direction.
Seed mutate(const Seed& s, std::size_t k);
Seed mutate_along(Seed s, const std::vector<std::size_t>& path);

/// C, G, D and F matrices at one vertex of the pattern (columns indexed by
/// cluster position).
struct PatternMatrices {
  IntMatrix C, G, D, F;
  friend bool operator==(const PatternMatrices&, const PatternMatrices&) = default;
};

/// C = G = I, D = -I, F = 0.
PatternMatrices initial_matrices(std::size_t n);

/// d-vector recursion: replaces column k of `d` given the exchange matrix at
/// the vertex being left.
IntMatrix d_vector_step(const IntMatrix& d, const ExchangeMatrix& b_t, std::size_t k);

/// C/G recursion along t --k-- t'. Only C and G are updated.
PatternMatrices cg_step(const PatternMatrices& mats, const ExchangeMatrix& b_t, const ExchangeMatrix& b0,
                        std::size_t k);

struct FData {
  std::vector<LaurentPoly> f_polynomials;  // in y_1..y_n
  IntMatrix F;                             // column i is the f-vector of x_i
};

/// F-polynomials and f-vectors of a seed from a principal-coefficient pattern.
FData f_data(const Seed& principal);

struct SeparationCheck {
  bool ok = true;
  std::size_t index = 0;  // 1-based cluster position of the first mismatch
  std::optional<std::pair<LaurentPoly, LaurentPoly>> mismatch;  // (cluster variable, separation formula)
};

/// Verifies x_{i;t}|_{y=1} == x^{g_i} F_i(yhat) for every i, with
/// yhat_k = prod_j x_j^{b0_{jk}}.
SeparationCheck check_separation(const Seed& seed_t, const IntMatrix& g_t, const ExchangeMatrix& b0);

/// A seed together with its pattern matrices. `F` is only maintained when the
/// walk runs over principal coefficients.
struct PatternVertex {
  Seed seed;
  PatternMatrices matrices;
};

PatternVertex initial_vertex(Seed s0, bool principal);
PatternVertex step(const PatternVertex& v, const ExchangeMatrix& b0, std::size_t k, bool principal);

/// Representative of the seed up to simultaneous relabeling: cluster entries
/// sorted by canonical key with y and rows/columns of B permuted alike.
Seed canonical_form(const Seed& s);
std::string unlabeled_key(const Seed& s);

struct ExchangeGraph {
  std::vector<Seed> seeds;                            // first labeled representative of each class
  std::vector<std::array<std::size_t, 3>> edges;      // (from, direction, to)
  bool closed = true;                                 // false when the budget ran out
};

ExchangeGraph enumerate_exchange_graph(const Seed& s0, std::size_t budget = kDefaultSeedBudget);

struct WalkSummary {
  std::size_t vertices = 0;
  bool closed = true;
};

/// Breadth-first walk over unlabeled seeds carrying pattern matrices; calls
/// `visit` once per class, in discovery order.
WalkSummary walk_exchange_graph(const Seed& s0, bool principal, std::size_t budget,
                                const std::function<void(const PatternVertex&)>& visit);

/// All cluster variables reachable from s0, deduplicated and sorted by
/// canonical key. Throws std::runtime_error when the graph does not close.
std::vector<LaurentPoly> cluster_variables(const Seed& s0, std::size_t budget = kDefaultSeedBudget);

}  // namespace cluster
