#include "cluster/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "cluster/polygon.hpp"

namespace cluster {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void finish(Report& r, const VerifyOptions& opt, const Stopwatch& clock, bool exploratory) {
  if (opt.timings) r.stats["seconds"] = clock.seconds();
  if (exploratory) r.status = Status::exploratory;
  else r.status = r.witnesses.empty() ? Status::verified : Status::violated;
}

void require_rank(std::size_t n, std::size_t lo, std::size_t hi, const char* what) {
  if (n < lo || n > hi)
    throw std::invalid_argument(std::string(what) + ": rank must lie in " + std::to_string(lo) + ".." +
                                std::to_string(hi));
}

json violation_json(const LaurentPoly& p, const LogConcavityViolation& v) {
  return {{"poly", to_json(p)},       {"point", v.point},
          {"axis", v.axis + 1},       {"middle", v.middle.get_str()},
          {"below", v.below.get_str()}, {"above", v.above.get_str()}};
}

/// Witness for a failed log-concavity check, or null when p passes.
json logcc_witness(const LaurentPoly& p) {
  const auto r = is_log_concave(p);
  if (r) return nullptr;
  json w = violation_json(p, *r.violation);
  w["check"] = "log-concavity";
  return w;
}

void append(json& witnesses, std::vector<json>& slots) {
  for (auto& s : slots)
    if (!s.is_null()) {
      if (s.is_array())
        for (auto& w : s) witnesses.push_back(std::move(w));
      else
        witnesses.push_back(std::move(s));
    }
}

std::vector<Edge> all_diagonals(int ngon) {
  std::vector<Edge> out;
  for (int a = 0; a < ngon; ++a)
    for (int b = a + 2; b < ngon; ++b)
      if (!is_boundary_edge(Edge(a, b), ngon)) out.emplace_back(a, b);
  return out;
}

/// Cluster variable of diagonal e in the seed of t: an initial variable when
/// e is in t, the T-path expansion otherwise.
LaurentPoly polygon_variable(const Triangulation& t, const Edge& e, bool coefficient_free) {
  const std::size_t m = coefficient_free ? static_cast<std::size_t>(t.rank()) : static_cast<std::size_t>(t.edge_count());
  if (const int label = t.label_of(e); label != 0) return LaurentPoly::variable(m, static_cast<std::size_t>(label - 1));
  return expand_variable(t, e.u, e.v, coefficient_free);
}

std::vector<Triangulation> triangulations_for(std::size_t n, const VerifyOptions& opt) {
  const Triangulation z = zigzag(static_cast<int>(n));
  if (!opt.all_triangulations) return {z};
  std::vector<Triangulation> out;
  for (auto& v : flip_graph(z, opt.budget)) out.push_back(std::move(v.triangulation));
  return out;
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

std::vector<std::vector<unsigned>> compositions_up_to(std::size_t parts, unsigned deg) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(parts, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == parts) {
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(0, deg);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0u) < std::accumulate(b.begin(), b.end(), 0u);
  });
  return out;
}

unsigned total_degree(const std::vector<unsigned>& m) { return std::accumulate(m.begin(), m.end(), 0u); }

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::violated: return "violated";
    case Status::exploratory: return "exploratory";
  }
  return "unknown";
}

json to_json(const Report& r) {
  return {{"claim", r.claim}, {"scope", r.scope}, {"status", status_name(r.status)},
          {"witnesses", r.witnesses}, {"stats", r.stats}};
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  const auto threads = std::min<std::size_t>(jobs, count);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

Report verify_main1(std::size_t n, const VerifyOptions& opt) {
  require_rank(n, 1, 8, "verify_main1");
  Stopwatch clock;
  Report r;
  r.claim = "main1";
  r.scope = {{"rank", n}, {"all_triangulations", opt.all_triangulations}};

  const auto pattern_vars = cluster_variables(coefficient_free_seed(a_n_matrix(n)), opt.budget);

  const Triangulation z = zigzag(static_cast<int>(n));
  const auto diagonals = all_diagonals(z.ngon());
  std::vector<LaurentPoly> polygon_vars(diagonals.size());
  parallel_for(diagonals.size(), opt.jobs, [&](std::size_t i) { polygon_vars[i] = polygon_variable(z, diagonals[i], true); });

  std::map<std::string, const LaurentPoly*> from_pattern, from_polygon;
  for (const auto& p : pattern_vars) from_pattern.emplace(p.canonical_key(), &p);
  for (const auto& p : polygon_vars) from_polygon.emplace(p.canonical_key(), &p);
  for (const auto& [key, p] : from_pattern)
    if (!from_polygon.count(key)) r.witnesses.push_back({{"check", "dual-route"}, {"missing_from", "polygon"}, {"poly", to_json(*p)}});
  for (const auto& [key, p] : from_polygon)
    if (!from_pattern.count(key)) r.witnesses.push_back({{"check", "dual-route"}, {"missing_from", "pattern"}, {"poly", to_json(*p)}});

  const std::size_t expected = n * (n + 3) / 2;
  if (pattern_vars.size() != expected || from_polygon.size() != expected)
    r.witnesses.push_back({{"check", "count"}, {"expected", expected}, {"pattern", pattern_vars.size()},
                           {"polygon", from_polygon.size()}});

  std::vector<json> slots(pattern_vars.size());
  parallel_for(pattern_vars.size(), opt.jobs, [&](std::size_t i) { slots[i] = logcc_witness(pattern_vars[i]); });
  append(r.witnesses, slots);

  // Every diagonal expanded from every triangulation: the theorem holds in
  // any initial cluster.
  std::size_t expansions = 0;
  std::size_t triangulation_count = 1;
  if (opt.all_triangulations) {
    const auto all = triangulations_for(n, opt);
    triangulation_count = all.size();
    std::vector<json> per_t(all.size());
    std::vector<std::size_t> counts(all.size(), 0);
    parallel_for(all.size(), opt.jobs, [&](std::size_t i) {
      json found = json::array();
      for (const auto& e : diagonals) {
        if (all[i].label_of(e) != 0) continue;
        ++counts[i];
        json w = logcc_witness(expand_variable(all[i], e.u, e.v, true));
        if (w.is_null()) continue;
        w["triangulation"] = to_json(all[i]);
        w["diagonal"] = edge_json(e);
        found.push_back(std::move(w));
      }
      if (!found.empty()) per_t[i] = std::move(found);
    });
    append(r.witnesses, per_t);
    expansions = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  }

  r.stats = {{"cluster_variables", pattern_vars.size()}, {"polygon_variables", from_polygon.size()},
             {"expected", expected}, {"triangulations", triangulation_count}, {"expansions_checked", expansions}};
  finish(r, opt, clock, false);
  return r;
}

Report verify_coeff_bounds(std::size_t n, const VerifyOptions& opt) {
  require_rank(n, 1, 6, "verify_coeff_bounds");
  Stopwatch clock;
  Report r;
  r.claim = "coeff012";
  r.scope = {{"rank", n}, {"all_triangulations", opt.all_triangulations}};

  const auto all = triangulations_for(n, opt);
  const auto diagonals = all_diagonals(static_cast<int>(n) + 3);

  struct Tally {
    std::size_t free_checked = 0, boundary_checked = 0;
    bool two_seen = false;
    json two_example;
    json witnesses = json::array();
  };
  std::vector<Tally> tallies(all.size());
  parallel_for(all.size(), opt.jobs, [&](std::size_t i) {
    Tally& t = tallies[i];
    for (const auto& e : diagonals) {
      if (all[i].label_of(e) != 0) continue;
      const LaurentPoly free = expand_variable(all[i], e.u, e.v, true);
      const auto num = normalize_denominator(free, n).numerator;
      ++t.free_checked;
      for (const auto& [exp, c] : num.terms()) {
        if (c == 2 && !t.two_seen) {
          t.two_seen = true;
          t.two_example = {{"triangulation", to_json(all[i])}, {"diagonal", edge_json(e)}, {"poly", to_json(free)}};
        }
        if (c != 1 && c != 2) {
          t.witnesses.push_back({{"check", "coefficient-free"}, {"triangulation", to_json(all[i])},
                                 {"diagonal", edge_json(e)}, {"poly", to_json(free)}, {"coeff", c.get_str()}});
          break;
        }
      }
      const LaurentPoly kept = expand_variable(all[i], e.u, e.v, false);
      const auto kept_num = normalize_denominator(kept, n).numerator;
      ++t.boundary_checked;
      for (const auto& [exp, c] : kept_num.terms())
        if (c != 1) {
          t.witnesses.push_back({{"check", "boundary-coefficients"}, {"triangulation", to_json(all[i])},
                                 {"diagonal", edge_json(e)}, {"poly", to_json(kept)}, {"coeff", c.get_str()}});
          break;
        }
    }
  });

  // The boundary-coefficient expansions from the zigzag triangulation must
  // match mutation of its boundary seed.
  const Triangulation z = zigzag(static_cast<int>(n));
  std::set<std::string> expanded, mutated;
  for (const auto& e : diagonals) expanded.insert(polygon_variable(z, e, false).canonical_key());
  for (const auto& p : cluster_variables(boundary_seed(z), opt.budget)) mutated.insert(p.canonical_key());
  if (expanded != mutated)
    r.witnesses.push_back({{"check", "boundary-dual-route"}, {"expanded", expanded.size()}, {"mutated", mutated.size()}});

  std::size_t free_checked = 0, boundary_checked = 0;
  bool two_seen = false;
  json two_example = nullptr;
  for (auto& t : tallies) {
    free_checked += t.free_checked;
    boundary_checked += t.boundary_checked;
    if (t.two_seen && !two_seen) {
      two_seen = true;
      two_example = t.two_example;
    }
    for (auto& w : t.witnesses) r.witnesses.push_back(std::move(w));
  }
  r.stats = {{"triangulations", all.size()},  {"coefficient_free_checked", free_checked},
             {"boundary_checked", boundary_checked}, {"coefficient_two_seen", two_seen},
             {"coefficient_two_example", two_example}};
  finish(r, opt, clock, false);
  return r;
}

namespace {

std::vector<PatternVertex> principal_vertices(std::size_t n, const VerifyOptions& opt, Report& r) {
  std::vector<PatternVertex> vertices;
  const auto summary = walk_exchange_graph(principal_seed(a_n_matrix(n)), true, opt.budget,
                                           [&](const PatternVertex& v) { vertices.push_back(v); });
  if (!summary.closed) r.witnesses.push_back({{"check", "budget"}, {"budget", opt.budget}});
  return vertices;
}

std::vector<std::size_t> frozen_indices(const Seed& s) {
  std::vector<std::size_t> idx(s.frozen);
  std::iota(idx.begin(), idx.end(), s.rank);
  return idx;
}

}  // namespace

Report verify_fd(std::size_t n, const VerifyOptions& opt) {
  require_rank(n, 1, 5, "verify_fd");
  Stopwatch clock;
  Report r;
  r.claim = "gyo21";
  r.scope = {{"rank", n}};

  const ExchangeMatrix b0 = a_n_matrix(n);
  const auto vertices = principal_vertices(n, opt, r);
  std::vector<json> slots(vertices.size());
  parallel_for(vertices.size(), opt.jobs, [&](std::size_t i) {
    const auto& [seed, m] = vertices[i];
    json found = json::array();
    auto report = [&](const char* check, json extra) {
      extra["check"] = check;
      extra["history"] = seed.history;
      found.push_back(std::move(extra));
    };
    if (m.F != m.D.positive_part()) report("f-equals-d-plus", {{"F", to_json(m.F)}, {"D", to_json(m.D)}});
    if (b0 * m.C != m.G * seed.B)
      report("cg-duality", {{"C", to_json(m.C)}, {"G", to_json(m.G)}, {"B", to_json(seed.B)}});
    const auto frozen = frozen_indices(seed);
    for (std::size_t j = 0; j < n; ++j) {
      const auto d = normalize_denominator(substitute_ones(seed.cluster[j], frozen), n).d_vector;
      for (std::size_t i2 = 0; i2 < n; ++i2)
        if (d[i2] != m.D(i2, j)) {
          report("d-recursion", {{"index", j + 1}, {"D", to_json(m.D)}, {"actual", d}});
          break;
        }
    }
    const auto sep = check_separation(seed, m.G, b0);
    if (!sep.ok) {
      json extra{{"index", sep.index}};
      if (sep.mismatch) {
        extra["cluster_variable"] = to_json(sep.mismatch->first);
        extra["separation"] = to_json(sep.mismatch->second);
      }
      report("separation", std::move(extra));
    }
    if (!found.empty()) slots[i] = std::move(found);
  });
  append(r.witnesses, slots);
  r.stats = {{"vertices", vertices.size()},
             {"checks", json::array({"f-equals-d-plus", "d-recursion", "cg-duality", "separation"})}};
  finish(r, opt, clock, false);
  return r;
}

Report verify_fpoly_logcc(std::size_t n, const VerifyOptions& opt) {
  require_rank(n, 1, 5, "verify_fpoly_logcc");
  Stopwatch clock;
  Report r;
  r.claim = "fpoly-logcc";
  r.scope = {{"rank", n}};

  const auto vertices = principal_vertices(n, opt, r);
  std::map<std::string, LaurentPoly> distinct;
  for (const auto& v : vertices) {
    const auto fd = f_data(v.seed);
    for (const auto& f : fd.f_polynomials) distinct.emplace(f.canonical_key(), f);
    bool binary = true;
    for (std::size_t i = 0; i < n && binary; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (fd.F(i, j) != 0 && fd.F(i, j) != 1) binary = false;
    if (!binary)
      r.witnesses.push_back({{"check", "f-vector-binary"}, {"history", v.seed.history}, {"F", to_json(fd.F)}});
  }
  std::vector<const LaurentPoly*> polys;
  for (const auto& [key, p] : distinct) polys.push_back(&p);
  std::vector<json> slots(polys.size());
  parallel_for(polys.size(), opt.jobs, [&](std::size_t i) { slots[i] = logcc_witness(*polys[i]); });
  append(r.witnesses, slots);
  r.stats = {{"vertices", vertices.size()}, {"distinct_f_polynomials", polys.size()}};
  finish(r, opt, clock, false);
  return r;
}

ClusterMonomial make_cluster_monomial(const Seed& chart_seed, std::size_t chart, std::vector<unsigned> exponents) {
  if (exponents.size() != chart_seed.rank) throw std::invalid_argument("make_cluster_monomial: exponent count mismatch");
  LaurentPoly value = LaurentPoly::constant(chart_seed.ambient(), 1);
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) value *= chart_seed.cluster[i].pow(exponents[i]);
  return {chart, std::move(exponents), std::move(value)};
}

std::vector<Seed> a2_charts() {
  std::vector<Seed> charts{coefficient_free_seed(a_n_matrix(2))};
  for (std::size_t k : {1, 2, 1, 2}) charts.push_back(mutate(charts.back(), k));
  return charts;
}

Report verify_a2_monomials(unsigned deg, const VerifyOptions& opt) {
  Stopwatch clock;
  Report r;
  r.claim = "a2-monomials";
  r.scope = {{"rank", 2}, {"deg", deg}};

  const auto charts = a2_charts();
  const auto exps = compositions_up_to(2, deg);
  std::vector<json> slots(charts.size() * exps.size());
  std::atomic<std::size_t> closed_form{0};
  parallel_for(slots.size(), opt.jobs, [&](std::size_t idx) {
    const std::size_t c = idx / exps.size();
    const auto& m = exps[idx % exps.size()];
    const auto mono = make_cluster_monomial(charts[c], c, m);
    json found = json::array();
    json w = logcc_witness(mono.value);
    if (!w.is_null()) {
      w["chart"] = c + 1;
      w["exponents"] = m;
      found.push_back(std::move(w));
    }
    if (c == 2) {
      // Numerator (x2+1)^m1 (x1+x2+1)^m2 has a_{k,l} = C(m2,k) C(m1+m2-k,l).
      const unsigned m1 = m[0], m2 = m[1];
      const auto form = normalize_denominator(mono.value, 2);
      bool ok = form.d_vector == std::vector<int>{static_cast<int>(m1 + m2), static_cast<int>(m2)};
      std::size_t support = 0;
      for (unsigned k = 0; k <= m2 && ok; ++k)
        for (unsigned l = 0; l <= m1 + m2 - k; ++l) {
          ++support;
          if (form.numerator.coeff({static_cast<int>(k), static_cast<int>(l)}) != binomial(m2, k) * binomial(m1 + m2 - k, l)) {
            ok = false;
            break;
          }
        }
      if (ok && form.numerator.size() != support) ok = false;
      if (!ok) found.push_back({{"check", "closed-form"}, {"exponents", m}, {"poly", to_json(mono.value)}});
      ++closed_form;
    }
    if (!found.empty()) slots[idx] = std::move(found);
  });
  append(r.witnesses, slots);

  std::size_t binomial_pairs = 0;
  for (unsigned nn = 1; nn <= 30; ++nn)
    for (unsigned k = 0; k + 1 <= nn; ++k) {
      ++binomial_pairs;
      const Integer c = binomial(nn, k);
      if (c * c < binomial(nn - 1, k) * binomial(nn + 1, k))
        r.witnesses.push_back({{"check", "binomial-inequality"}, {"n", nn}, {"k", k}});
    }

  r.stats = {{"charts", charts.size()}, {"monomials_checked", slots.size()},
             {"closed_form_checked", closed_form.load()}, {"binomial_pairs_checked", binomial_pairs}};
  finish(r, opt, clock, false);
  return r;
}

Report explore_an_monomials(std::size_t n, unsigned deg, const VerifyOptions& opt) {
  require_rank(n, 3, 8, "explore_an_monomials");
  Stopwatch clock;
  Report r;
  r.claim = "conj-an";
  r.scope = {{"rank", n}, {"deg", deg}};

  const auto graph = enumerate_exchange_graph(coefficient_free_seed(a_n_matrix(n)), opt.budget);
  if (!graph.closed) throw std::runtime_error("explore_an_monomials: exchange graph not closed within budget");
  const auto exps = compositions_up_to(n, deg);

  // Distinct monomials keyed by value; the first (seed, exponents) producing
  // one is kept as its label.
  std::vector<ClusterMonomial> all(graph.seeds.size() * exps.size());
  parallel_for(all.size(), opt.jobs, [&](std::size_t idx) {
    const std::size_t s = idx / exps.size();
    all[idx] = make_cluster_monomial(graph.seeds[s], s, exps[idx % exps.size()]);
  });
  std::vector<const ClusterMonomial*> distinct;
  std::set<std::string> seen;
  for (const auto& m : all)
    if (seen.insert(m.value.canonical_key()).second) distinct.push_back(&m);

  std::vector<json> slots(distinct.size());
  parallel_for(distinct.size(), opt.jobs, [&](std::size_t i) {
    json w = logcc_witness(distinct[i]->value);
    if (w.is_null()) return;
    w["seed"] = distinct[i]->chart;
    w["history"] = graph.seeds[distinct[i]->chart].history;
    w["exponents"] = distinct[i]->exponents;
    slots[i] = std::move(w);
  });
  append(r.witnesses, slots);

  std::vector<std::size_t> by_degree(deg + 1, 0);
  for (const auto* m : distinct) ++by_degree[total_degree(m->exponents)];
  r.stats = {{"seeds", graph.seeds.size()}, {"distinct_monomials", distinct.size()},
             {"by_degree", by_degree}, {"violations", r.witnesses.size()}};
  finish(r, opt, clock, true);
  return r;
}

namespace {

ExponentVector grlex_leading(const LaurentPoly& p) {
  const ExponentVector* best = nullptr;
  long best_deg = 0;
  for (const auto& [e, c] : p.terms()) {
    const long d = std::accumulate(e.begin(), e.end(), 0L);
    if (!best || d > best_deg || (d == best_deg && e > *best)) {
      best = &e;
      best_deg = d;
    }
  }
  return *best;
}

struct A2Basis {
  unsigned deg = 0;
  std::vector<ClusterMonomial> elements;                // distinct values
  std::unordered_map<std::string, std::size_t> by_key;  // value key -> element
  std::map<ExponentVector, std::size_t> by_leading;     // grlex leading exponent -> element
  std::vector<Integer> leading_coeff;
  std::vector<std::vector<std::vector<unsigned>>> chart_exps;  // exponent pairs per chart
  std::vector<std::vector<std::size_t>> chart_elements;        // element index per chart entry
};

A2Basis build_a2_basis(unsigned deg) {
  A2Basis b;
  b.deg = deg;
  const auto charts = a2_charts();
  const auto exps = compositions_up_to(2, deg);
  b.chart_exps.assign(charts.size(), exps);
  b.chart_elements.assign(charts.size(), {});
  for (std::size_t c = 0; c < charts.size(); ++c)
    for (const auto& m : exps) {
      auto mono = make_cluster_monomial(charts[c], c, m);
      const std::string key = mono.value.canonical_key();
      auto [it, inserted] = b.by_key.emplace(key, b.elements.size());
      if (inserted) {
        const ExponentVector lt = grlex_leading(mono.value);
        if (!b.by_leading.emplace(lt, b.elements.size()).second)
          throw std::logic_error("a2 basis: graded-lex leading terms are not distinct");
        b.leading_coeff.push_back(mono.value.coeff(lt));
        b.elements.push_back(std::move(mono));
      }
      b.chart_elements[c].push_back(it->second);
    }
  return b;
}

StructureExpansion expand_in_basis(const A2Basis& basis, const LaurentPoly& product) {
  StructureExpansion out;
  std::vector<Integer> coeff(basis.elements.size(), 0);
  LaurentPoly residual = product;
  // The residual's leading term strictly decreases, so each element is used
  // at most once.
  for (std::size_t iter = 0; !residual.is_zero() && iter <= basis.elements.size(); ++iter) {
    const ExponentVector lt = grlex_leading(residual);
    auto it = basis.by_leading.find(lt);
    if (it == basis.by_leading.end()) break;
    const Integer rc = residual.coeff(lt);
    const Integer& bc = basis.leading_coeff[it->second];
    if (rc % bc != 0) break;
    const Integer c = rc / bc;
    coeff[it->second] += c;
    residual -= LaurentPoly::constant(2, c) * basis.elements[it->second].value;
  }
  out.complete = residual.is_zero();
  out.residual = std::move(residual);
  for (std::size_t i = 0; i < coeff.size(); ++i)
    if (coeff[i] != 0) out.terms.push_back({BasisElement{basis.elements[i].chart, basis.elements[i].exponents}, coeff[i]});
  out.per_chart.resize(basis.chart_exps.size());
  for (std::size_t c = 0; c < basis.chart_exps.size(); ++c)
    for (std::size_t j = 0; j < basis.chart_exps[c].size(); ++j) {
      const Integer& v = coeff[basis.chart_elements[c][j]];
      if (v != 0) out.per_chart[c][{basis.chart_exps[c][j][0], basis.chart_exps[c][j][1]}] = v;
    }
  return out;
}

LaurentPoly product_of(const std::vector<ClusterMonomial>& factors) {
  LaurentPoly p = LaurentPoly::constant(2, 1);
  for (const auto& f : factors) {
    if (f.value.num_vars() != 2) throw std::invalid_argument("a2_structure_constants: factor is not of type A_2");
    p *= f.value;
  }
  return p;
}

}  // namespace

StructureExpansion a2_structure_constants(const std::vector<ClusterMonomial>& factors, unsigned deg) {
  unsigned total = 0;
  for (const auto& f : factors) total += total_degree(f.exponents);
  if (total > deg) throw std::invalid_argument("a2_structure_constants: product degree exceeds the basis bound");
  return expand_in_basis(build_a2_basis(deg), product_of(factors));
}

Report explore_a2_structure_constants(unsigned deg, const VerifyOptions& opt) {
  Stopwatch clock;
  Report r;
  r.claim = "conj1-a2";
  r.scope = {{"rank", 2}, {"deg", deg}, {"indexing", "per-chart exponent pair"}};

  const A2Basis basis = build_a2_basis(deg);
  const auto charts = a2_charts();
  const auto exps = compositions_up_to(2, deg);

  struct Job {
    std::size_t c1, c2;
    const std::vector<unsigned>* m1;
    const std::vector<unsigned>* m2;
  };
  std::vector<Job> jobs;
  for (std::size_t c1 = 0; c1 < charts.size(); ++c1)
    for (std::size_t c2 = c1; c2 < charts.size(); ++c2)
      for (std::size_t i = 0; i < exps.size(); ++i)
        for (std::size_t j = (c1 == c2 ? i : 0); j < exps.size(); ++j)
          if (total_degree(exps[i]) + total_degree(exps[j]) <= deg) jobs.push_back({c1, c2, &exps[i], &exps[j]});

  struct Outcome {
    bool complete = true, nonnegative = true, reconstructs = true;
    std::size_t logcc_violations = 0;
    json witnesses = json::array();
  };
  std::vector<Outcome> outcomes(jobs.size());
  parallel_for(jobs.size(), opt.jobs, [&](std::size_t idx) {
    const Job& job = jobs[idx];
    Outcome& o = outcomes[idx];
    const std::vector<ClusterMonomial> factors{make_cluster_monomial(charts[job.c1], job.c1, *job.m1),
                                               make_cluster_monomial(charts[job.c2], job.c2, *job.m2)};
    const LaurentPoly product = product_of(factors);
    const auto ex = expand_in_basis(basis, product);
    const json label{{"charts", {job.c1 + 1, job.c2 + 1}}, {"exponents", {*job.m1, *job.m2}}};
    if (!ex.complete) {
      o.complete = false;
      json w = label;
      w["check"] = "residual";
      w["residual"] = to_json(ex.residual);
      o.witnesses.push_back(std::move(w));
      return;
    }
    LaurentPoly rebuilt(2);
    for (const auto& [b, c] : ex.terms) {
      if (c < 0) o.nonnegative = false;
      rebuilt += LaurentPoly::constant(2, c) * make_cluster_monomial(charts[b.chart], b.chart, b.exponents).value;
    }
    if (rebuilt != product) {
      o.reconstructs = false;
      json w = label;
      w["check"] = "reconstruction";
      o.witnesses.push_back(std::move(w));
    }
    if (!o.nonnegative) {
      json w = label;
      w["check"] = "negative-constant";
      o.witnesses.push_back(std::move(w));
      return;
    }
    for (std::size_t c = 0; c < ex.per_chart.size(); ++c) {
      if (ex.per_chart[c].empty()) continue;
      LaurentPoly arr(2);
      for (const auto& [m, v] : ex.per_chart[c])
        arr.add_term({static_cast<int>(m.first), static_cast<int>(m.second)}, v);
      const auto lc = is_log_concave(arr);
      if (lc) continue;
      ++o.logcc_violations;
      json w = violation_json(arr, *lc.violation);
      w.update(label);
      w["check"] = "chart-log-concavity";
      w["chart"] = c + 1;
      o.witnesses.push_back(std::move(w));
    }
  });

  std::size_t incomplete = 0, negative = 0, reconstruction = 0, logcc = 0;
  for (auto& o : outcomes) {
    incomplete += !o.complete;
    negative += !o.nonnegative;
    reconstruction += !o.reconstructs;
    logcc += o.logcc_violations;
    for (auto& w : o.witnesses) r.witnesses.push_back(std::move(w));
  }
  r.stats = {{"basis_size", basis.elements.size()}, {"products", jobs.size()},
             {"incomplete", incomplete},          {"negative", negative},
             {"reconstruction_failures", reconstruction}, {"chart_log_concavity_violations", logcc}};
  finish(r, opt, clock, true);
  return r;
}

const std::vector<std::string>& known_claims() {
  static const std::vector<std::string> ids{"main1", "coeff012", "gyo21", "fpoly-logcc",
                                            "a2-monomials", "conj-an", "conj1-a2"};
  return ids;
}

Report run_claim(const std::string& claim, std::size_t rank, unsigned deg, const VerifyOptions& opt) {
  if (claim == "main1") return verify_main1(rank, opt);
  if (claim == "coeff012") return verify_coeff_bounds(rank, opt);
  if (claim == "gyo21") return verify_fd(rank, opt);
  if (claim == "fpoly-logcc") return verify_fpoly_logcc(rank, opt);
  if (claim == "a2-monomials") return verify_a2_monomials(deg, opt);
  if (claim == "conj-an") return explore_an_monomials(rank, deg, opt);
  if (claim == "conj1-a2") return explore_a2_structure_constants(deg, opt);
  throw std::invalid_argument("unknown claim '" + claim + "'");
}

}  // namespace cluster
