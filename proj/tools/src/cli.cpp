#include "cluster_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "cluster/json_io.hpp"
#include "cluster/pattern.hpp"
#include "cluster/polygon.hpp"
#include "cluster/verify.hpp"

namespace cluster::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t budget_from_env() {
  const char* raw = std::getenv("CLUSTER_LOGCC_BUDGET");
  if (!raw || !*raw) return kDefaultSeedBudget;
  std::size_t value = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0)
    throw UsageError("CLUSTER_LOGCC_BUDGET must be a positive integer, got '" + std::string(raw) + "'");
  return value;
}

std::vector<std::size_t> parse_path(const std::string& text, std::size_t n) {
  std::vector<std::size_t> path;
  if (text.empty()) return path;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string tok = text.substr(start, comma - start);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw UsageError("bad mutation index '" + tok + "'");
    if (k < 1 || k > n)
      throw UsageError("mutation index " + tok + " out of range 1.." + std::to_string(n));
    path.push_back(k);
    start = comma + 1;
  }
  return path;
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + out_path + "' for writing");
  f << text;
}

Triangulation load_triangulation(const std::string& source, int ngon) {
  if (source == "zigzag" || source == "fan") {
    if (ngon < 4) throw UsageError("--ngon of at least 4 is required for '" + source + "'");
    return source == "zigzag" ? zigzag(ngon - 3) : fan(ngon - 3);
  }
  std::ifstream f(source);
  if (!f) throw UsageError("cannot read triangulation file '" + source + "'");
  Triangulation t = triangulation_from_json(json::parse(f));
  if (ngon != 0 && t.ngon() != ngon)
    throw UsageError("--ngon " + std::to_string(ngon) + " disagrees with file (" + std::to_string(t.ngon()) + ")");
  return t;
}

json matrices_json(const PatternVertex& v) {
  json j = to_json(v.matrices);
  j["history"] = v.seed.history;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in cluster algebras of type A_n", "cluster"};
  app.require_subcommand(1);

  std::string out_path;
  std::size_t rank = 0;
  std::string coeff = "free";
  std::string path_text;
  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate the initial A_n seed along a path");
  mutate_cmd->add_option("--rank,-n", rank, "Rank n")->required()->check(CLI::PositiveNumber);
  mutate_cmd->add_option("--coeff", coeff, "Coefficients")->check(CLI::IsMember({"free", "principal"}));
  mutate_cmd->add_option("--path", path_text, "Comma-separated directions, e.g. 1,2,1");
  mutate_cmd->add_option("--out,-o", out_path, "Output file (default stdout)");

  int ngon = 0, from = -1, to = -1;
  std::string tri_source = "zigzag";
  std::string tpath_coeff = "free";
  auto* tpaths_cmd = app.add_subcommand("tpaths", "Enumerate T-paths and expand a cluster variable");
  tpaths_cmd->add_option("--ngon,-m", ngon, "Number of polygon vertices");
  tpaths_cmd->add_option("--triangulation,-t", tri_source, "zigzag | fan | path to triangulation JSON");
  tpaths_cmd->add_option("--from,-a", from, "Start vertex")->required();
  tpaths_cmd->add_option("--to,-b", to, "End vertex")->required();
  tpaths_cmd->add_option("--coeff", tpath_coeff, "Coefficients")->check(CLI::IsMember({"free", "boundary"}));
  tpaths_cmd->add_option("--out,-o", out_path, "Output file (default stdout)");

  std::string claim;
  unsigned deg = 4;
  std::size_t verify_rank = 3;
  VerifyOptions opt;
  bool zigzag_only = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and write its report");
  verify_cmd->add_option("--claim,-c", claim, "main1 | coeff012 | gyo21 | fpoly-logcc | a2-monomials | conj-an | conj1-a2")
      ->required();
  verify_cmd->add_option("--rank,-n", verify_rank, "Rank n")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--deg,-d", deg, "Degree bound");
  verify_cmd->add_option("--jobs,-j", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timings", opt.timings, "Record wall-clock time in stats");
  verify_cmd->add_flag("--zigzag-only", zigzag_only, "Expand from the zigzag triangulation only");
  verify_cmd->add_option("--out,-o", out_path, "Report file (default stdout)");

  auto* graph_cmd = app.add_subcommand("graph", "Enumerate the exchange graph of A_n");
  graph_cmd->add_option("--rank,-n", rank, "Rank n")->required()->check(CLI::PositiveNumber);
  graph_cmd->add_option("--coeff", coeff, "Coefficients")->check(CLI::IsMember({"free", "principal"}));
  graph_cmd->add_option("--out,-o", out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const std::size_t budget = budget_from_env();

    if (*mutate_cmd) {
      const auto path = parse_path(path_text, rank);
      const bool principal = coeff == "principal";
      const ExchangeMatrix b0 = a_n_matrix(rank);
      PatternVertex v = initial_vertex(principal ? principal_seed(b0) : coefficient_free_seed(b0), principal);
      json steps = json::array({matrices_json(v)});
      for (std::size_t k : path) {
        v = step(v, b0, k, principal);
        steps.push_back(matrices_json(v));
      }
      json result{{"coeff", coeff}, {"seed", to_json(v.seed)}};
      if (principal) result["steps"] = std::move(steps);
      emit(result, out_path, out);
      return kOk;
    }

    if (*tpaths_cmd) {
      const Triangulation t = load_triangulation(tri_source, ngon);
      const bool free = tpath_coeff == "free";
      if (from < 0 || to < 0 || from >= t.ngon() || to >= t.ngon())
        throw UsageError("vertices must lie in 0.." + std::to_string(t.ngon() - 1));
      if (from == to || is_boundary_edge(Edge(from, to), t.ngon()))
        throw UsageError("vertices " + std::to_string(from) + " and " + std::to_string(to) +
                         " must be distinct and non-adjacent");
      json paths = json::array();
      LaurentPoly sum(free ? static_cast<std::size_t>(t.rank()) : static_cast<std::size_t>(t.edge_count()));
      for (const auto& p : enumerate_t_paths(t, from, to)) {
        const LaurentPoly mono = tpath_monomial(t, p, free);
        json row = to_json(p);
        row["monomial"] = to_json(mono);
        row["monomial_text"] = mono.to_string();
        paths.push_back(std::move(row));
        sum += mono;
      }
      emit({{"triangulation", to_json(t)}, {"from", from}, {"to", to}, {"coeff", tpath_coeff},
            {"paths", std::move(paths)}, {"expansion", to_json(sum)}, {"expansion_text", sum.to_string()}},
           out_path, out);
      return kOk;
    }

    if (*verify_cmd) {
      const auto& ids = known_claims();
      if (std::find(ids.begin(), ids.end(), claim) == ids.end()) throw UsageError("unknown claim '" + claim + "'");
      opt.budget = budget;
      opt.all_triangulations = !zigzag_only;
      const Report r = run_claim(claim, verify_rank, deg, opt);
      emit(to_json(r), out_path, out);
      err << r.claim << ": " << status_name(r.status) << " (" << r.witnesses.size() << " witnesses)\n";
      return r.clean() ? kOk : kViolation;
    }

    if (*graph_cmd) {
      const ExchangeMatrix b0 = a_n_matrix(rank);
      const auto g = enumerate_exchange_graph(coeff == "principal" ? principal_seed(b0) : coefficient_free_seed(b0), budget);
      emit(to_json(g), out_path, out);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cluster::cli
