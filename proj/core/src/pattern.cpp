#include "cluster/pattern.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace cluster {

namespace {

void require_direction(std::size_t n, std::size_t k) {
  if (k < 1 || k > n)
    throw std::out_of_range("mutation direction " + std::to_string(k) + " out of range 1.." + std::to_string(n));
}

}  // namespace

ExchangeMatrix a_n_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("a_n_matrix: rank must be at least 1");
  ExchangeMatrix b(n, n);
  // Signs alternate along the path and the last arrow is always b_{n-1,n} = +1.
  for (std::size_t i = 1; i < n; ++i) {
    const long s = ((n + 1 - i) % 2 == 0) ? 1 : -1;
    b(i - 1, i) = s;
    b(i, i - 1) = -s;
  }
  return b;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  require_direction(b.cols(), k);
  const std::size_t kk = k - 1;
  ExchangeMatrix r(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == kk || j == kk) {
        r(i, j) = -b(i, j);
      } else {
        const long bik = b(i, kk), bkj = b(kk, j);
        r(i, j) = b(i, j) + std::max(bik, 0L) * bkj + bik * std::max(-bkj, 0L);
      }
    }
  return r;
}

Seed initial_seed(const ExchangeMatrix& b, std::vector<TropicalElement> y) {
  if (!b.is_square() || b.rows() == 0) throw std::invalid_argument("initial_seed: exchange matrix must be square and nonempty");
  if (!is_skew_symmetrizable(b)) throw std::invalid_argument("initial_seed: exchange matrix is not skew-symmetrizable");
  const std::size_t n = b.rows();
  if (y.size() != n) throw std::invalid_argument("initial_seed: need one coefficient per cluster variable");
  const std::size_t r = y.front().rank();
  for (const auto& yi : y)
    if (yi.rank() != r) throw std::invalid_argument("initial_seed: coefficients of different ranks");
  Seed s;
  s.rank = n;
  s.frozen = r;
  s.B = b;
  s.y = std::move(y);
  for (std::size_t i = 0; i < n; ++i) s.cluster.push_back(LaurentPoly::variable(n + r, i));
  return s;
}

Seed coefficient_free_seed(const ExchangeMatrix& b) {
  return initial_seed(b, std::vector<TropicalElement>(b.rows(), TropicalElement::identity(0)));
}

Seed principal_seed(const ExchangeMatrix& b0) {
  std::vector<TropicalElement> y;
  for (std::size_t i = 0; i < b0.rows(); ++i) y.push_back(TropicalElement::generator(b0.rows(), i));
  return initial_seed(b0, std::move(y));
}

Seed mutate(const Seed& s, std::size_t k) {
  require_direction(s.rank, k);
  const std::size_t n = s.rank, m = s.ambient(), kk = k - 1;
  const TropicalElement& yk = s.y[kk];

  // y_k/(1 (+) y_k) and 1/(1 (+) y_k) as monomials in the frozen variables.
  ExponentVector plus_exp(m, 0), minus_exp(m, 0);
  for (std::size_t i = 0; i < s.frozen; ++i) {
    plus_exp[n + i] = std::max(yk[i], 0);
    minus_exp[n + i] = std::max(-yk[i], 0);
  }
  LaurentPoly plus = LaurentPoly::monomial(plus_exp), minus = LaurentPoly::monomial(minus_exp);
  for (std::size_t j = 0; j < n; ++j) {
    const long bjk = s.B(j, kk);
    if (bjk > 0) plus *= s.cluster[j].pow(static_cast<unsigned>(bjk));
    if (bjk < 0) minus *= s.cluster[j].pow(static_cast<unsigned>(-bjk));
  }

  Seed r = s;
  r.cluster[kk] = div_exact(plus + minus, s.cluster[kk]);

  const TropicalElement denom = one_oplus(yk);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == kk) {
      r.y[i] = yk.inverse();
    } else {
      const long bki = s.B(kk, i);
      r.y[i] = trop_mul(trop_mul(s.y[i], yk.pow(static_cast<int>(std::max(bki, 0L)))),
                        denom.pow(static_cast<int>(-bki)));
    }
  }
  r.B = mutate_matrix(s.B, k);
  r.history.push_back(k);
  return r;
}

Seed mutate_along(Seed s, const std::vector<std::size_t>& path) {
  for (auto k : path) s = mutate(s, k);
  return s;
}

PatternMatrices initial_matrices(std::size_t n) {
  return {IntMatrix::identity(n), IntMatrix::identity(n), -IntMatrix::identity(n), IntMatrix(n, n)};
}

IntMatrix d_vector_step(const IntMatrix& d, const ExchangeMatrix& b_t, std::size_t k) {
  const std::size_t n = d.cols();
  require_direction(n, k);
  const std::size_t kk = k - 1;
  std::vector<long> pos(d.rows(), 0), neg(d.rows(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const long b = b_t(i, kk);
    for (std::size_t j = 0; j < d.rows(); ++j) {
      if (b > 0) pos[j] += b * d(j, i);
      if (b < 0) neg[j] += -b * d(j, i);
    }
  }
  IntMatrix out = d;
  for (std::size_t j = 0; j < d.rows(); ++j) out(j, kk) = -d(j, kk) + std::max(pos[j], neg[j]);
  return out;
}

PatternMatrices cg_step(const PatternMatrices& mats, const ExchangeMatrix& b_t, const ExchangeMatrix& b0,
                        std::size_t k) {
  const std::size_t n = b_t.rows();
  require_direction(n, k);
  const IntMatrix jk = IntMatrix::sign_flip(n, k);
  const IntMatrix bt_pos = b_t.positive_part();
  PatternMatrices out = mats;
  out.C = mats.C * (jk + bt_pos.row_slice(k)) + (-mats.C).positive_part().column_slice(k) * b_t;
  out.G = mats.G * (jk + bt_pos.column_slice(k)) - b0 * mats.C.positive_part().column_slice(k);
  return out;
}

FData f_data(const Seed& principal) {
  const std::size_t n = principal.rank;
  if (principal.frozen != n) throw std::invalid_argument("f_data: seed does not carry principal coefficients");
  std::vector<std::size_t> xs(n), ys(n);
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 0);
  FData out{{}, IntMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPoly f = substitute_ones(principal.cluster[i], xs);
    const auto degs = max_degrees(f, ys);
    for (std::size_t j = 0; j < n; ++j) out.F(j, i) = degs[j];
    out.f_polynomials.push_back(std::move(f));
  }
  return out;
}

SeparationCheck check_separation(const Seed& seed_t, const IntMatrix& g_t, const ExchangeMatrix& b0) {
  const std::size_t n = seed_t.rank;
  const FData fd = f_data(seed_t);
  std::vector<std::size_t> ys(n);
  std::iota(ys.begin(), ys.end(), n);
  std::vector<ExponentVector> yhat(n, ExponentVector(n, 0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) yhat[k][j] = static_cast<int>(b0(j, k));

  SeparationCheck result;
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentPoly lhs = substitute_ones(seed_t.cluster[i], ys);
    ExponentVector g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = static_cast<int>(g_t(j, i));
    const LaurentPoly rhs = substitute_monomials(fd.f_polynomials[i], yhat, n).shifted(g);
    if (lhs != rhs) {
      result.ok = false;
      result.index = i + 1;
      result.mismatch = std::make_pair(lhs, rhs);
      return result;
    }
  }
  return result;
}

PatternVertex initial_vertex(Seed s0, bool principal) {
  PatternVertex v;
  v.matrices = initial_matrices(s0.rank);
  v.seed = std::move(s0);
  if (principal) v.matrices.F = f_data(v.seed).F;
  return v;
}

PatternVertex step(const PatternVertex& v, const ExchangeMatrix& b0, std::size_t k, bool principal) {
  PatternVertex out;
  out.seed = mutate(v.seed, k);
  out.matrices = cg_step(v.matrices, v.seed.B, b0, k);
  out.matrices.D = d_vector_step(v.matrices.D, v.seed.B, k);
  if (principal) out.matrices.F = f_data(out.seed).F;
  return out;
}

Seed canonical_form(const Seed& s) {
  const std::size_t n = s.rank;
  std::vector<std::string> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = s.cluster[i].canonical_key();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return s.y[a] < s.y[b];
  });
  Seed c;
  c.rank = n;
  c.frozen = s.frozen;
  c.B = ExchangeMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    c.cluster.push_back(s.cluster[perm[i]]);
    c.y.push_back(s.y[perm[i]]);
    for (std::size_t j = 0; j < n; ++j) c.B(i, j) = s.B(perm[i], perm[j]);
  }
  c.history = s.history;
  return c;
}

std::string unlabeled_key(const Seed& s) {
  const Seed c = canonical_form(s);
  std::string key;
  for (const auto& x : c.cluster) key += x.canonical_key() + "#";
  for (const auto& y : c.y) {
    for (int e : y.exponents()) key += std::to_string(e) + ",";
    key += "#";
  }
  key += c.B.to_string();
  return key;
}

namespace {

// Shared BFS over unlabeled classes. `State` must expose a Seed via `seed_of`.
template <typename State, typename SeedOf, typename Step, typename Visit, typename Edge>
bool bfs_classes(State root, std::size_t budget, SeedOf seed_of, Step step_fn, Visit visit, Edge on_edge) {
  if (budget == 0) throw std::invalid_argument("exchange graph budget must be positive");
  std::unordered_map<std::string, std::size_t> index;
  std::deque<std::pair<std::size_t, State>> queue;
  index.emplace(unlabeled_key(seed_of(root)), 0);
  visit(root);
  queue.emplace_back(0, std::move(root));
  bool closed = true;
  while (!queue.empty()) {
    auto [id, state] = std::move(queue.front());
    queue.pop_front();
    const std::size_t n = seed_of(state).rank;
    for (std::size_t k = 1; k <= n; ++k) {
      State next = step_fn(state, k);
      std::string key = unlabeled_key(seed_of(next));
      auto it = index.find(key);
      if (it == index.end()) {
        if (index.size() >= budget) {
          closed = false;
          continue;
        }
        const std::size_t new_id = index.size();
        it = index.emplace(std::move(key), new_id).first;
        visit(next);
        queue.emplace_back(new_id, std::move(next));
      }
      on_edge(id, k, it->second);
    }
  }
  return closed;
}

}  // namespace

ExchangeGraph enumerate_exchange_graph(const Seed& s0, std::size_t budget) {
  ExchangeGraph g;
  g.closed = bfs_classes(
      s0, budget, [](const Seed& s) -> const Seed& { return s; },
      [](const Seed& s, std::size_t k) { return mutate(s, k); },
      [&](const Seed& s) { g.seeds.push_back(s); },
      [&](std::size_t from, std::size_t k, std::size_t to) { g.edges.push_back({from, k, to}); });
  return g;
}

WalkSummary walk_exchange_graph(const Seed& s0, bool principal, std::size_t budget,
                                const std::function<void(const PatternVertex&)>& visit) {
  WalkSummary summary;
  const ExchangeMatrix b0 = s0.B;
  summary.closed = bfs_classes(
      initial_vertex(s0, principal), budget, [](const PatternVertex& v) -> const Seed& { return v.seed; },
      [&](const PatternVertex& v, std::size_t k) { return step(v, b0, k, principal); },
      [&](const PatternVertex& v) {
        ++summary.vertices;
        visit(v);
      },
      [](std::size_t, std::size_t, std::size_t) {});
  return summary;
}

std::vector<LaurentPoly> cluster_variables(const Seed& s0, std::size_t budget) {
  const ExchangeGraph g = enumerate_exchange_graph(s0, budget);
  if (!g.closed) throw std::runtime_error("cluster_variables: exchange graph not closed within budget");
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, LaurentPoly>> vars;
  for (const auto& s : g.seeds)
    for (const auto& x : s.cluster) {
      std::string key = x.canonical_key();
      if (seen.insert(key).second) vars.emplace_back(std::move(key), x);
    }
  std::sort(vars.begin(), vars.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<LaurentPoly> out;
  out.reserve(vars.size());
  for (auto& [k, v] : vars) out.push_back(std::move(v));
  return out;
}

}  // namespace cluster
