#include "cluster/json_io.hpp"

#include <stdexcept>

namespace cluster {

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c.get_str()}});
  return {{"num_vars", p.num_vars()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const json& j) {
  const auto m = j.at("num_vars").get<std::size_t>();
  LaurentPoly p(m);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<ExponentVector>();
    if (e.size() != m) throw std::invalid_argument("laurent_from_json: exponent length mismatch");
    p.add_term(e, Integer(t.at("coeff").get<std::string>()));
  }
  return p;
}

json to_json(const IntMatrix& m) { return m.to_rows(); }

IntMatrix matrix_from_json(const json& j) { return IntMatrix::from_rows(j.get<std::vector<std::vector<long>>>()); }

json to_json(const TropicalElement& t) { return t.exponents(); }

json to_json(const Seed& s) {
  json y = json::array();
  for (const auto& t : s.y) y.push_back(to_json(t));
  json cluster = json::array();
  for (const auto& x : s.cluster) cluster.push_back(to_json(x));
  return {{"n", s.rank}, {"frozen", s.frozen}, {"B", to_json(s.B)},
          {"y", std::move(y)}, {"cluster", std::move(cluster)}, {"history", s.history}};
}

Seed seed_from_json(const json& j) {
  Seed s;
  s.rank = j.at("n").get<std::size_t>();
  s.frozen = j.at("frozen").get<std::size_t>();
  s.B = matrix_from_json(j.at("B"));
  for (const auto& y : j.at("y")) s.y.emplace_back(y.get<std::vector<int>>());
  for (const auto& x : j.at("cluster")) s.cluster.push_back(laurent_from_json(x));
  s.history = j.value("history", std::vector<std::size_t>{});
  if (s.cluster.size() != s.rank || s.y.size() != s.rank || s.B.rows() != s.rank || s.B.cols() != s.rank)
    throw std::invalid_argument("seed_from_json: inconsistent rank");
  for (const auto& y : s.y)
    if (y.rank() != s.frozen) throw std::invalid_argument("seed_from_json: coefficient rank mismatch");
  for (const auto& x : s.cluster)
    if (x.num_vars() != s.ambient()) throw std::invalid_argument("seed_from_json: ambient mismatch");
  return s;
}

json to_json(const PatternMatrices& m) {
  return {{"C", to_json(m.C)}, {"G", to_json(m.G)}, {"D", to_json(m.D)}, {"F", to_json(m.F)}};
}

json to_json(const ExchangeGraph& g) {
  json seeds = json::array();
  for (const auto& s : g.seeds) seeds.push_back(to_json(s));
  return {{"seeds", std::move(seeds)}, {"edges", g.edges}, {"closed", g.closed}};
}

json to_json(const Triangulation& t) {
  json diags = json::array();
  for (const auto& e : t.diagonals()) diags.push_back({e.u, e.v});
  return {{"ngon", t.ngon()}, {"diagonals", std::move(diags)}};
}

Triangulation triangulation_from_json(const json& j) {
  std::vector<Edge> diags;
  for (const auto& d : j.at("diagonals")) {
    if (!d.is_array() || d.size() != 2) throw std::invalid_argument("triangulation_from_json: diagonal must be [u, v]");
    diags.emplace_back(d[0].get<int>(), d[1].get<int>());
  }
  return Triangulation(j.at("ngon").get<int>(), std::move(diags));
}

json to_json(const TPath& p) { return {{"vertices", p.vertices}, {"labels", p.labels}}; }

}  // namespace cluster
