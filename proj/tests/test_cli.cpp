#include "cluster_cli/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cluster/json_io.hpp"

namespace cluster {
namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  return json::parse(r.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"mutate"}).code, cli::kUsage);
  EXPECT_EQ(run({"mutate", "--rank", "2", "--path", "1,3"}).code, cli::kUsage);
  EXPECT_EQ(run({"mutate", "--rank", "2", "--path", "1,,2"}).code, cli::kUsage);
  EXPECT_EQ(run({"mutate", "--rank", "2", "--coeff", "boundary"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--claim", "nope"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--claim", "main1", "--rank", "12"}).code, cli::kUsage);
  EXPECT_EQ(run({"tpaths", "--ngon", "6", "--from", "1", "--to", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"tpaths", "--ngon", "6", "--from", "1", "--to", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"tpaths", "--ngon", "6", "--from", "0", "--to", "9"}).code, cli::kUsage);
  EXPECT_EQ(run({"tpaths", "--ngon", "6", "-t", "/nonexistent.json", "--from", "0", "--to", "3"}).code, cli::kUsage);
  const auto r = run({"mutate", "--rank", "2", "--path", "0"});
  EXPECT_NE(r.err.find("out of range"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, MutateEmptyPathAndInvolution) {
  const json init = run_json({"mutate", "--rank", "3"});
  EXPECT_EQ(init["seed"]["history"], json::array());
  const json back = run_json({"mutate", "--rank", "3", "--path", "2,2"});
  EXPECT_EQ(seed_from_json(back["seed"]), seed_from_json(init["seed"]));
}

TEST(Cli, MutatePrincipalReportsSteps) {
  const json j = run_json({"mutate", "--rank", "2", "--coeff", "principal", "--path", "1,2"});
  ASSERT_EQ(j["steps"].size(), 3u);
  EXPECT_EQ(j["steps"][2]["history"], json({1, 2}));
  EXPECT_EQ(matrix_from_json(j["steps"][2]["C"]), (IntMatrix{{0, -1}, {1, -1}}));
  EXPECT_EQ(matrix_from_json(j["steps"][2]["F"]), (IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_EQ(j["seed"]["frozen"], 2);
  EXPECT_FALSE(run_json({"mutate", "--rank", "2", "--path", "1"}).contains("steps"));
}

TEST(Cli, TPathsHexagon) {
  const json j = run_json({"tpaths", "--ngon", "6", "--from", "1", "--to", "4"});
  EXPECT_EQ(j["paths"].size(), 5u);
  EXPECT_EQ(j["expansion_text"], "(x1*x3 + x2^2 + 2*x2 + 1)/(x1*x2*x3)");
  const json boundary = run_json({"tpaths", "--ngon", "6", "--from", "1", "--to", "4", "--coeff", "boundary"});
  EXPECT_EQ(laurent_from_json(boundary["expansion"]).num_vars(), 9u);
}

TEST(Cli, TPathsSquareAndFileInput) {
  EXPECT_EQ(run_json({"tpaths", "--ngon", "4", "--from", "1", "--to", "3"})["paths"].size(), 2u);

  const auto file = std::filesystem::temp_directory_path() / "cluster_cli_fan.json";
  std::ofstream(file) << to_json(fan(3)).dump();
  const json j = run_json({"tpaths", "-t", file.string(), "--from", "1", "--to", "4"});
  EXPECT_EQ(triangulation_from_json(j["triangulation"]), fan(3));
  EXPECT_EQ(run({"tpaths", "--ngon", "7", "-t", file.string(), "--from", "1", "--to", "4"}).code, cli::kUsage);
  std::filesystem::remove(file);
}

TEST(Cli, VerifyExitCodesAndOutFile) {
  const auto file = std::filesystem::temp_directory_path() / "cluster_cli_report.json";
  const auto r = run({"verify", "--claim", "main1", "--rank", "4", "--out", file.string()});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("main1: verified"), std::string::npos);
  std::ifstream in(file);
  EXPECT_EQ(json::parse(in)["status"], "verified");
  std::filesystem::remove(file);

  EXPECT_EQ(run_json({"verify", "--claim", "a2-monomials", "--deg", "6"})["status"], "verified");
  EXPECT_EQ(run_json({"verify", "--claim", "conj-an", "--rank", "3", "--deg", "3"})["status"], "exploratory");
}

TEST(Cli, DeterministicAcrossRunsAndJobs) {
  const std::vector<std::string> args{"verify", "--claim", "gyo21", "--rank", "3"};
  auto parallel = args;
  parallel.insert(parallel.end(), {"--jobs", "4"});
  const auto a = run(args), b = run(args), c = run(parallel);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(run({"graph", "--rank", "3"}).out, run({"graph", "--rank", "3"}).out);
}

TEST(Cli, BudgetEnvironmentVariable) {
  ::setenv("CLUSTER_LOGCC_BUDGET", "3", 1);
  const auto small = run({"verify", "--claim", "gyo21", "--rank", "3"});
  EXPECT_EQ(small.code, cli::kViolation);
  EXPECT_FALSE(json::parse(run({"graph", "--rank", "3"}).out)["closed"].get<bool>());
  ::setenv("CLUSTER_LOGCC_BUDGET", "lots", 1);
  EXPECT_EQ(run({"graph", "--rank", "2"}).code, cli::kUsage);
  ::unsetenv("CLUSTER_LOGCC_BUDGET");
  EXPECT_TRUE(run_json({"graph", "--rank", "3"})["closed"].get<bool>());
}

}  // namespace
}  // namespace cluster
