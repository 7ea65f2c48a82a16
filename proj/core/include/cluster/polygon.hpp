#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cluster/matrix.hpp"
#include "cluster/pattern.hpp"
#include "cluster/poly.hpp"
#include "cluster/tropical.hpp"

namespace cluster {

/// Segment between two polygon vertices, stored with u < v. Vertices are
/// 0..m-1 in counterclockwise order.
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// True iff the endpoints strictly interleave in cyclic order. Edges sharing
/// an endpoint never cross.
bool crosses(const Edge& e1, const Edge& e2);
bool is_boundary_edge(const Edge& e, int ngon);

/// Triangulation of a convex m-gon (m = n + 3) with labeled edges: diagonals
/// carry labels 1..n in the order given, boundary {i, i+1 mod m} carries
/// label n + 1 + i, so boundaries are numbered counterclockwise from vertex 0.
class Triangulation {
 public:
  Triangulation(int ngon, std::vector<Edge> diagonals);

  int ngon() const { return ngon_; }
  int rank() const { return ngon_ - 3; }
  int edge_count() const { return 2 * rank() + 3; }

  const Edge& edge(int label) const;
  /// Label of an edge of T, or 0 if the segment is not in T.
  int label_of(const Edge& e) const;
  bool is_diagonal_label(int label) const { return label >= 1 && label <= rank(); }
  std::vector<Edge> diagonals() const;
  /// Labels of the edges of T incident to a vertex, ascending.
  const std::vector<int>& incident_labels(int vertex) const { return incident_[static_cast<std::size_t>(vertex)]; }
  /// Vertex triples of the n + 1 triangles, each sorted ascending (which is
  /// counterclockwise order).
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

  /// Unlabeled identity: the sorted diagonal set.
  std::string diagonal_key() const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.ngon_ == b.ngon_ && a.edges_ == b.edges_;
  }

 private:
  int ngon_;
  std::vector<Edge> edges_;  // index label - 1
  std::vector<std::vector<int>> incident_;
  std::vector<std::array<int, 3>> triangles_;
};

/// Alternating triangulation whose exchange matrix is a_n_matrix(n). For
/// n = 3 this is the hexagon with T1 = {0,2}, T2 = {2,5}, T3 = {3,5}.
Triangulation zigzag(int n);
/// All diagonals from vertex 0, labeled {0,2}, {0,3}, ... in order.
Triangulation fan(int n);

/// Extended (2n+3) x n matrix: row i is edge label i + 1, column j diagonal
/// label j + 1; +1 when the two edges bound a common triangle and the turn
/// from row edge to column edge is counterclockwise, -1 when clockwise.
IntMatrix extended_b_matrix(const Triangulation& t);
/// The principal n x n part of extended_b_matrix.
ExchangeMatrix b_matrix_of(const Triangulation& t);

/// y_i over Trop(x_{n+1}, ..., x_{2n+3}); generator j is boundary label n+1+j.
std::vector<TropicalElement> boundary_coefficients(const Triangulation& t);
/// Initial seed of T with boundary coefficients as frozen variables.
Seed boundary_seed(const Triangulation& t);

struct FlipResult {
  Triangulation triangulation;
  /// Side labels (a, c, b, d) of the quadrilateral: T_a, T_c opposite and
  /// T_b, T_d opposite, so x_k x_k' = x_a x_c + x_b x_d.
  std::array<int, 4> quadruple;
};

/// Replaces diagonal k by the other diagonal of its quadrilateral; the new
/// diagonal keeps label k.
FlipResult flip(const Triangulation& t, int k);

struct FlipGraphVertex {
  Triangulation triangulation;
  std::vector<std::size_t> path;  // flip labels from the start triangulation
};

/// Breadth-first enumeration of the flip graph (unlabeled triangulations).
std::vector<FlipGraphVertex> flip_graph(const Triangulation& start, std::size_t budget = kDefaultSeedBudget);

struct TPath {
  std::vector<int> vertices;  // v_0 = a, ..., v_l = b
  std::vector<int> labels;    // i_1, ..., i_l
  friend bool operator==(const TPath&, const TPath&) = default;
};

/// All T-paths from a to b, sorted by length and then lexicographically by
/// label sequence.
std::vector<TPath> enumerate_t_paths(const Triangulation& t, int a, int b);

/// Checks a candidate path against the T-path axioms using combinatorial
/// crossing order; returns a description of the first failed axiom.
std::optional<std::string> t_path_axiom_violation(const Triangulation& t, int a, int b, const TPath& path);

/// x(P): odd-step edge variables over even-step edge variables. In the
/// coefficient-free setting boundary variables are 1 and the ambient space
/// has n variables; otherwise it has 2n + 3.
LaurentPoly tpath_monomial(const Triangulation& t, const TPath& path, bool coefficient_free);
LaurentPoly expand_variable(const Triangulation& t, int a, int b, bool coefficient_free);

/// d_j = number of crossings of gamma with diagonal T_j. Gamma must be a
/// diagonal of the polygon that is not in T.
std::vector<int> crossing_d_vector(const Triangulation& t, const Edge& gamma);

}  // namespace cluster
