#include "cluster/polygon.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace cluster {

namespace {

bool strictly_between_ccw(int from, int x, int to, int m) {
  // x lies on the open counterclockwise arc from `from` to `to`.
  const int dx = ((x - from) % m + m) % m;
  const int dt = ((to - from) % m + m) % m;
  return dx > 0 && dx < dt;
}

void require_vertex(const Triangulation& t, int v) {
  if (v < 0 || v >= t.ngon()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

void require_diagonal_endpoints(const Triangulation& t, int a, int b) {
  require_vertex(t, a);
  require_vertex(t, b);
  if (a == b) throw std::invalid_argument("endpoints must be distinct");
  if (is_boundary_edge(Edge(a, b), t.ngon())) throw std::invalid_argument("endpoints are adjacent");
}

// Rational convex embedding: vertex i sits at (i, i^2) on a parabola, which
// is in convex position and counterclockwise in i.
struct Point {
  long x, y;
};

Point embed(int v) { return {v, static_cast<long>(v) * v}; }

/// Parameter s in (0,1) where segment e meets segment a->b.
mpq_class crossing_parameter(int a, int b, const Edge& e) {
  const Point pa = embed(a), pb = embed(b), p = embed(e.u), q = embed(e.v);
  const Point ab{pb.x - pa.x, pb.y - pa.y}, pq{q.x - p.x, q.y - p.y}, ap{p.x - pa.x, p.y - pa.y};
  const long num = ap.x * pq.y - ap.y * pq.x;
  const long den = ab.x * pq.y - ab.y * pq.x;
  mpq_class s(num, den);
  s.canonicalize();
  return s;
}

}  // namespace

bool crosses(const Edge& e1, const Edge& e2) {
  if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) return false;
  const bool u_inside = e1.u < e2.u && e2.u < e1.v;
  const bool v_inside = e1.u < e2.v && e2.v < e1.v;
  return u_inside != v_inside;
}

bool is_boundary_edge(const Edge& e, int ngon) { return e.v - e.u == 1 || (e.u == 0 && e.v == ngon - 1); }

Triangulation::Triangulation(int ngon, std::vector<Edge> diagonals) : ngon_(ngon) {
  if (ngon < 4) throw std::invalid_argument("Triangulation: polygon needs at least 4 vertices");
  const int n = ngon - 3;
  if (static_cast<int>(diagonals.size()) != n)
    throw std::invalid_argument("Triangulation: expected " + std::to_string(n) + " diagonals");
  for (const auto& d : diagonals) {
    if (d.u < 0 || d.v >= ngon || d.u == d.v) throw std::invalid_argument("Triangulation: vertex out of range");
    if (is_boundary_edge(d, ngon)) throw std::invalid_argument("Triangulation: boundary edge given as diagonal");
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
      if (diagonals[i] == diagonals[j]) throw std::invalid_argument("Triangulation: repeated diagonal");
      if (crosses(diagonals[i], diagonals[j])) throw std::invalid_argument("Triangulation: crossing diagonals");
    }

  edges_ = std::move(diagonals);
  for (int i = 0; i < ngon; ++i) edges_.emplace_back(i, (i + 1) % ngon);

  incident_.assign(static_cast<std::size_t>(ngon), {});
  for (int label = 1; label <= edge_count(); ++label) {
    const Edge& e = edge(label);
    incident_[static_cast<std::size_t>(e.u)].push_back(label);
    incident_[static_cast<std::size_t>(e.v)].push_back(label);
  }

  std::set<Edge> present(edges_.begin(), edges_.end());
  for (int p = 0; p < ngon; ++p)
    for (int q = p + 1; q < ngon; ++q) {
      if (!present.count(Edge(p, q))) continue;
      for (int r = q + 1; r < ngon; ++r)
        if (present.count(Edge(q, r)) && present.count(Edge(p, r))) triangles_.push_back({p, q, r});
    }
}

const Edge& Triangulation::edge(int label) const {
  if (label < 1 || label > edge_count()) throw std::out_of_range("edge label " + std::to_string(label) + " out of range");
  return edges_[static_cast<std::size_t>(label - 1)];
}

int Triangulation::label_of(const Edge& e) const {
  auto it = std::find(edges_.begin(), edges_.end(), e);
  return it == edges_.end() ? 0 : static_cast<int>(it - edges_.begin()) + 1;
}

std::vector<Edge> Triangulation::diagonals() const {
  return {edges_.begin(), edges_.begin() + rank()};
}

std::string Triangulation::diagonal_key() const {
  std::vector<Edge> d = diagonals();
  std::sort(d.begin(), d.end());
  std::string key = std::to_string(ngon_) + ":";
  for (const auto& e : d) key += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
  return key;
}

Triangulation zigzag(int n) {
  if (n < 1) throw std::invalid_argument("zigzag: rank must be at least 1");
  const int m = n + 3;
  // Vertex walk 0, 2, m-1, 3, m-2, 4, ...; consecutive vertices span the diagonals.
  std::vector<int> walk{0, 2};
  int lo = 3, hi = m - 1;
  while (static_cast<int>(walk.size()) < n + 1) {
    if (walk.size() % 2 == 0) walk.push_back(hi--);
    else walk.push_back(lo++);
  }
  // For even n the walk above is mirrored so the last arrow keeps sign +1.
  const bool mirror = n % 2 == 0;
  std::vector<Edge> diags;
  for (int i = 0; i < n; ++i) {
    int a = walk[static_cast<std::size_t>(i)], b = walk[static_cast<std::size_t>(i) + 1];
    if (mirror) {
      a = (m - a) % m;
      b = (m - b) % m;
    }
    diags.emplace_back(a, b);
  }
  return Triangulation(m, std::move(diags));
}

Triangulation fan(int n) {
  if (n < 1) throw std::invalid_argument("fan: rank must be at least 1");
  std::vector<Edge> diags;
  for (int j = 2; j <= n + 1; ++j) diags.emplace_back(0, j);
  return Triangulation(n + 3, std::move(diags));
}

IntMatrix extended_b_matrix(const Triangulation& t) {
  const int n = t.rank();
  IntMatrix b(static_cast<std::size_t>(t.edge_count()), static_cast<std::size_t>(n));
  for (const auto& [p, q, r] : t.triangles()) {
    // Counterclockwise sides e1 = pq, e2 = qr, e3 = rp: turning from e_{i+1}
    // to e_i about their shared vertex is counterclockwise.
    const std::array<int, 3> sides{t.label_of(Edge(p, q)), t.label_of(Edge(q, r)), t.label_of(Edge(r, p))};
    for (int i = 0; i < 3; ++i) {
      const int prev = sides[static_cast<std::size_t>(i)];
      const int next = sides[static_cast<std::size_t>((i + 1) % 3)];
      if (t.is_diagonal_label(prev)) b(static_cast<std::size_t>(next - 1), static_cast<std::size_t>(prev - 1)) = 1;
      if (t.is_diagonal_label(next)) b(static_cast<std::size_t>(prev - 1), static_cast<std::size_t>(next - 1)) = -1;
    }
  }
  return b;
}

ExchangeMatrix b_matrix_of(const Triangulation& t) {
  return extended_b_matrix(t).top_rows(static_cast<std::size_t>(t.rank()));
}

std::vector<TropicalElement> boundary_coefficients(const Triangulation& t) {
  const IntMatrix ext = extended_b_matrix(t);
  const auto n = static_cast<std::size_t>(t.rank());
  const std::size_t r = n + 3;
  std::vector<TropicalElement> y;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(r);
    for (std::size_t j = 0; j < r; ++j) e[j] = static_cast<int>(ext(n + j, i));
    y.emplace_back(std::move(e));
  }
  return y;
}

Seed boundary_seed(const Triangulation& t) { return initial_seed(b_matrix_of(t), boundary_coefficients(t)); }

FlipResult flip(const Triangulation& t, int k) {
  if (!t.is_diagonal_label(k)) throw std::invalid_argument("flip: label " + std::to_string(k) + " is not a diagonal");
  const Edge d = t.edge(k);
  std::vector<int> apex;
  for (const auto& tri : t.triangles()) {
    if (std::find(tri.begin(), tri.end(), d.u) == tri.end() || std::find(tri.begin(), tri.end(), d.v) == tri.end())
      continue;
    for (int v : tri)
      if (v != d.u && v != d.v) apex.push_back(v);
  }
  if (apex.size() != 2) throw std::logic_error("flip: diagonal does not border two triangles");
  std::sort(apex.begin(), apex.end());
  const int w1 = apex[0], w2 = apex[1];

  std::vector<Edge> diags = t.diagonals();
  diags[static_cast<std::size_t>(k - 1)] = Edge(w1, w2);
  const std::array<int, 4> quad{t.label_of(Edge(d.u, w1)), t.label_of(Edge(d.v, w2)), t.label_of(Edge(w1, d.v)),
                                t.label_of(Edge(w2, d.u))};
  return {Triangulation(t.ngon(), std::move(diags)), quad};
}

std::vector<FlipGraphVertex> flip_graph(const Triangulation& start, std::size_t budget) {
  std::vector<FlipGraphVertex> out;
  std::unordered_set<std::string> seen{start.diagonal_key()};
  out.push_back({start, {}});
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int k = 1; k <= start.rank(); ++k) {
      FlipResult f = flip(out[head].triangulation, k);
      if (!seen.insert(f.triangulation.diagonal_key()).second) continue;
      if (out.size() >= budget) throw std::runtime_error("flip_graph: budget exhausted");
      std::vector<std::size_t> path = out[head].path;
      path.push_back(static_cast<std::size_t>(k));
      out.push_back({std::move(f.triangulation), std::move(path)});
    }
  }
  return out;
}

std::vector<TPath> enumerate_t_paths(const Triangulation& t, int a, int b) {
  require_diagonal_endpoints(t, a, b);
  const Edge target(a, b);
  const int edges = t.edge_count();

  // Rank of each edge crossing X_{a,b} by distance of the crossing point from a.
  std::vector<int> crossing;
  for (int label = 1; label <= edges; ++label)
    if (crosses(t.edge(label), target)) crossing.push_back(label);
  std::vector<mpq_class> param(static_cast<std::size_t>(edges) + 1);
  for (int label : crossing) param[static_cast<std::size_t>(label)] = crossing_parameter(a, b, t.edge(label));
  std::sort(crossing.begin(), crossing.end(), [&](int x, int y) {
    return param[static_cast<std::size_t>(x)] < param[static_cast<std::size_t>(y)];
  });
  std::vector<int> rank(static_cast<std::size_t>(edges) + 1, -1);
  for (std::size_t i = 0; i < crossing.size(); ++i) rank[static_cast<std::size_t>(crossing[i])] = static_cast<int>(i);

  std::vector<TPath> found;
  TPath current{{a}, {}};
  std::vector<bool> used(static_cast<std::size_t>(edges) + 1, false);

  std::function<void(int, int)> extend = [&](int vertex, int last_rank) {
    const std::size_t step = current.labels.size() + 1;
    for (int label : t.incident_labels(vertex)) {
      if (used[static_cast<std::size_t>(label)]) continue;
      const int rk = rank[static_cast<std::size_t>(label)];
      if (step % 2 == 0 && rk < 0) continue;
      if (rk >= 0 && rk <= last_rank) continue;
      const Edge& e = t.edge(label);
      const int next = e.u == vertex ? e.v : e.u;
      used[static_cast<std::size_t>(label)] = true;
      current.labels.push_back(label);
      current.vertices.push_back(next);
      if (next == b) {
        // Only odd steps can arrive at b: even-step edges cross X_{a,b}.
        found.push_back(current);
      } else {
        extend(next, rk >= 0 ? rk : last_rank);
      }
      current.vertices.pop_back();
      current.labels.pop_back();
      used[static_cast<std::size_t>(label)] = false;
    }
  };
  extend(a, -1);

  std::sort(found.begin(), found.end(), [](const TPath& x, const TPath& y) {
    if (x.labels.size() != y.labels.size()) return x.labels.size() < y.labels.size();
    return x.labels < y.labels;
  });
  return found;
}

std::optional<std::string> t_path_axiom_violation(const Triangulation& t, int a, int b, const TPath& path) {
  const Edge target(a, b);
  const std::size_t len = path.labels.size();
  if (path.vertices.size() != len + 1 || path.vertices.front() != a || path.vertices.back() != b)
    return "T1: vertex sequence must run from a to b";
  for (std::size_t k = 0; k < len; ++k) {
    const int label = path.labels[k];
    if (label < 1 || label > t.edge_count()) return "T2: unknown edge label";
    if (t.edge(label) != Edge(path.vertices[k], path.vertices[k + 1])) return "T2: edge does not join consecutive vertices";
  }
  std::vector<int> sorted = path.labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "T3: repeated edge";
  if (len % 2 == 0) return "T4: even length";
  for (std::size_t k = 1; k < len; k += 2)
    if (!crosses(t.edge(path.labels[k]), target)) return "T5: even step does not cross X_ab";

  // e is strictly closer to a than f when no endpoint of f lies on a's side of e.
  auto closer_to_a = [&](const Edge& e, const Edge& f) {
    const int m = t.ngon();
    const bool a_on_ccw_side = strictly_between_ccw(e.u, a, e.v, m);
    for (int x : {f.u, f.v}) {
      if (x == e.u || x == e.v) continue;
      if (strictly_between_ccw(e.u, x, e.v, m) == a_on_ccw_side) return false;
    }
    return e != f;
  };
  std::vector<Edge> crossing_seq;
  for (int label : path.labels)
    if (crosses(t.edge(label), target)) crossing_seq.push_back(t.edge(label));
  for (std::size_t i = 0; i + 1 < crossing_seq.size(); ++i)
    if (!closer_to_a(crossing_seq[i], crossing_seq[i + 1])) return "T6: crossings out of order";
  return std::nullopt;
}

LaurentPoly tpath_monomial(const Triangulation& t, const TPath& path, bool coefficient_free) {
  const auto n = static_cast<std::size_t>(t.rank());
  const std::size_t m = coefficient_free ? n : static_cast<std::size_t>(t.edge_count());
  ExponentVector e(m, 0);
  for (std::size_t k = 0; k < path.labels.size(); ++k) {
    const auto idx = static_cast<std::size_t>(path.labels[k] - 1);
    if (idx >= m) continue;
    e[idx] += (k % 2 == 0) ? 1 : -1;  // step k+1 odd -> numerator
  }
  return LaurentPoly::monomial(std::move(e));
}

LaurentPoly expand_variable(const Triangulation& t, int a, int b, bool coefficient_free) {
  const std::size_t m = coefficient_free ? static_cast<std::size_t>(t.rank()) : static_cast<std::size_t>(t.edge_count());
  LaurentPoly sum(m);
  for (const auto& p : enumerate_t_paths(t, a, b)) sum += tpath_monomial(t, p, coefficient_free);
  return sum;
}

std::vector<int> crossing_d_vector(const Triangulation& t, const Edge& gamma) {
  require_diagonal_endpoints(t, gamma.u, gamma.v);
  if (t.label_of(gamma) != 0) throw std::invalid_argument("crossing_d_vector: gamma belongs to the triangulation");
  std::vector<int> d;
  for (int j = 1; j <= t.rank(); ++j) d.push_back(crosses(gamma, t.edge(j)) ? 1 : 0);
  return d;
}

}  // namespace cluster
