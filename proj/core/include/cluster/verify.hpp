#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cluster/json_io.hpp"
#include "cluster/pattern.hpp"
#include "cluster/poly.hpp"

namespace cluster {

enum class Status { verified, violated, exploratory };

std::string status_name(Status s);

struct Report {
  std::string claim;
  json scope = json::object();
  Status status = Status::verified;
  json witnesses = json::array();
  json stats = json::object();

  /// True when no witness was recorded (for exploratory reports: nothing
  /// contradicting the conjecture was found).
  bool clean() const { return witnesses.empty(); }
};

json to_json(const Report& r);

struct VerifyOptions {
  std::size_t budget = kDefaultSeedBudget;
  unsigned jobs = 1;
  /// Also expand every diagonal from every triangulation, not only from the
  /// zigzag one.
  bool all_triangulations = true;
  /// Adds wall-clock time to stats; off by default so output is reproducible.
  bool timings = false;
};

/// Runs fn(0..count-1) on up to `jobs` threads. Callers write results into
/// per-index slots, so output does not depend on the thread count.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// Log-concavity of all coefficient-free cluster variables of type A_n,
/// computed both by mutation and by T-path expansion.
Report verify_main1(std::size_t n, const VerifyOptions& opt = {});
/// Coefficient-free numerators have coefficients in {1, 2}; numerators with
/// boundary coefficients have all coefficients equal to 1.
Report verify_coeff_bounds(std::size_t n, const VerifyOptions& opt = {});
/// Walks the principal-coefficient pattern and checks, at every vertex:
/// F == [D]_+, the D recursion against actual denominators, B0 C == G B_t
/// and the separation formula.
Report verify_fd(std::size_t n, const VerifyOptions& opt = {});
/// F-polynomials are log-concave and every f-vector entry lies in {0, 1}.
Report verify_fpoly_logcc(std::size_t n, const VerifyOptions& opt = {});

struct ClusterMonomial {
  std::size_t chart = 0;           // index into the list of charts used
  std::vector<unsigned> exponents; // m_1..m_n
  LaurentPoly value;
};

ClusterMonomial make_cluster_monomial(const Seed& chart_seed, std::size_t chart, std::vector<unsigned> exponents);

/// The five labeled coefficient-free seeds t0..t4 reached by mutating A_2
/// along 1, 2, 1, 2.
std::vector<Seed> a2_charts();

/// Log-concavity of all A_2 cluster monomials with m1 + m2 <= deg, with the
/// closed-form coefficient check in the third chart.
Report verify_a2_monomials(unsigned deg, const VerifyOptions& opt = {});

/// Exploratory: log-concavity of all A_n cluster monomials of total degree
/// <= deg.
Report explore_an_monomials(std::size_t n, unsigned deg, const VerifyOptions& opt = {});

struct BasisElement {
  std::size_t chart = 0;
  std::vector<unsigned> exponents;  // first (chart, exponents) producing this value
};

struct StructureExpansion {
  std::vector<std::pair<BasisElement, Integer>> terms;  // nonzero coefficients, basis order
  /// Per chart: c^j arranged by the chart's exponent pair (absent means 0).
  std::vector<std::map<std::pair<unsigned, unsigned>, Integer>> per_chart;
  bool complete = true;  // false when elimination left a residual
  LaurentPoly residual;
};

/// Expands a product of A_2 cluster monomials in the cluster-monomial basis
/// of degree <= deg by greedy graded-lex leading-term elimination.
StructureExpansion a2_structure_constants(const std::vector<ClusterMonomial>& factors, unsigned deg);

/// Exploratory: expands every product of two A_2 cluster monomials of total
/// degree <= deg and checks each chart's coefficient array for
/// log-concavity.
Report explore_a2_structure_constants(unsigned deg, const VerifyOptions& opt = {});

/// Known claim ids: main1, coeff012, gyo21, fpoly-logcc, a2-monomials,
/// conj-an, conj1-a2. Throws std::invalid_argument for anything else.
Report run_claim(const std::string& claim, std::size_t rank, unsigned deg, const VerifyOptions& opt = {});
const std::vector<std::string>& known_claims();

}  // namespace cluster
