#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cblock/cli.hpp"
#include "cblock/graph_io.hpp"

namespace cblock {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(CBLOCK_FIXTURE_DIR) + "/" + name; }

TEST(Cli, ContractVcP4Witness) {
  const Outcome r = run_cli({"contract-vc", fixture("p4.gr"), "-k", "1", "-d", "1", "--witness"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "YES\n1-2\n");
}

TEST(Cli, ContractVcC4) {
  const Outcome r = run_cli({"contract-vc", fixture("c4.gr"), "-k", "1", "-d", "1"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "NO\n");
}

TEST(Cli, ContractVcTrace) {
  const Outcome r = run_cli({"contract-vc", fixture("c5.gr"), "-k", "1", "-d", "1", "--trace"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("YES"), std::string::npos);
  EXPECT_NE(r.out.find("trace=bc-large"), std::string::npos);
}

TEST(Cli, VertexCover) {
  const Outcome r = run_cli({"vc", fixture("c5.gr")});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out.substr(0, 2), "3\n");
  const Outcome b = run_cli({"vc", fixture("p4.gr"), "--bipartite"});
  EXPECT_EQ(b.out.substr(0, 2), "2\n");
  const Outcome bad = run_cli({"vc", fixture("c5.gr"), "--bipartite"});
  EXPECT_EQ(bad.code, cli::kExitInputError);
}

TEST(Cli, TauFamilies) {
  EXPECT_EQ(run_cli({"tau", fixture("c5.gr"), "--family", "oct"}).out.substr(0, 2), "1\n");
  EXPECT_EQ(run_cli({"tau", fixture("c4.gr"), "--family", "fvs"}).out.substr(0, 2), "1\n");
  EXPECT_EQ(run_cli({"tau", fixture("c5.gr"), "--family", "vc"}).out.substr(0, 2), "3\n");
  const Outcome minor = run_cli({"tau", fixture("c4.gr"), "--family", "pattern:" + fixture("c4.gr"),
                                 "--relation", "minor"});
  EXPECT_EQ(minor.code, cli::kExitOk);
  EXPECT_EQ(minor.out.substr(0, 2), "1\n");
  const Outcome budget = run_cli({"tau", fixture("c5.gr"), "--family", "vc", "--budget", "2"});
  EXPECT_EQ(budget.code, cli::kExitBudgetExceeded);
}

TEST(Cli, Bc) {
  EXPECT_EQ(run_cli({"bc", fixture("c5.gr"), "--max", "1"}).out.substr(0, 4), "YES\n");
  EXPECT_EQ(run_cli({"bc", fixture("c5.gr"), "--max", "0"}).out, "NO\n");
}

TEST(Cli, MinContract) {
  const Outcome brute = run_cli({"min-contract-vc", fixture("p4.gr"), "-d", "1", "--brute", "--cap", "2"});
  EXPECT_EQ(brute.code, cli::kExitOk);
  EXPECT_EQ(brute.out.substr(0, 2), "1\n");
  const Outcome cap = run_cli({"min-contract-vc", fixture("c4.gr"), "-d", "1", "--brute", "--cap", "1"});
  EXPECT_EQ(cap.code, cli::kExitBudgetExceeded);
  EXPECT_NE(cap.out.find("EXCEEDS-CAP"), std::string::npos);
  const Outcome approx = run_cli({"min-contract-vc", fixture("c5.gr"), "-d", "1"});
  EXPECT_EQ(approx.out.substr(0, 2), "1\n");
  EXPECT_NE(approx.out.find("exact=true"), std::string::npos);
}

TEST(Cli, ReduceWritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "cblock_cli_test";
  std::filesystem::create_directories(dir);
  const std::string prefix = (dir / "phi0").string();
  const Outcome r = run_cli({"reduce", fixture("phi0.cnf"), "--theorem", "1", "--gadget", "c4", "-o", prefix});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("threshold=13"), std::string::npos);
  const Graph g = read_graph_file(prefix + ".gr");
  EXPECT_EQ(g.order(), 112);
  std::ifstream roles(prefix + ".roles");
  int lines = 0;
  for (std::string line; std::getline(roles, line);) ++lines;
  EXPECT_EQ(lines, 112);
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyClaims) {
  const Outcome r = run_cli({"verify-claims", fixture("phi0.cnf"), "--theorem", "3", "--path", "4",
                             "--sample-edges", "5"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("tau=13"), std::string::npos);
  EXPECT_NE(r.out.find("claim1=pass"), std::string::npos);
}

TEST(Cli, BlockerEdge) {
  EXPECT_EQ(run_cli({"blocker-edge", fixture("p4.gr"), "--family", "vc", "-e", "1,2"}).out, "YES\n");
  EXPECT_EQ(run_cli({"blocker-edge", fixture("c4.gr"), "--family", "fvs"}).out, "NONE\n");
  EXPECT_EQ(run_cli({"blocker-edge", fixture("p4.gr"), "--family", "vc"}).out, "1-2\n");
  EXPECT_EQ(run_cli({"blocker-edge", fixture("p4.gr"), "--family", "vc", "-e", "0,2"}).code, cli::kExitInputError);
}

TEST(Cli, InputErrors) {
  const Outcome missing = run_cli({"vc", fixture("nope.gr")});
  EXPECT_EQ(missing.code, cli::kExitInputError);
  EXPECT_NE(missing.err.find("error:"), std::string::npos);
  EXPECT_EQ(run_cli({"contract-vc", fixture("p4.gr"), "-k", "0", "-d", "1"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitInputError);
}

}  // namespace
}  // namespace cblock
