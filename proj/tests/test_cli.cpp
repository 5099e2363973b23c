#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_runner.hpp"
#include "dominator/exact.hpp"
#include "dominator/generators.hpp"
#include "dominator/io.hpp"

namespace dominator {
namespace {

using testing::run_cli;

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << content;
  return path.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, GenPipesIntoGamma) {
  const auto r = run_cli("gen heawood | '" DOMINATOR_CLI "' gamma - -a 2 -b 2");
  EXPECT_EQ(r.exit_code, 0);
  ASSERT_FALSE(r.out.empty());
  EXPECT_EQ(lines(r.out).front(), "12");
}

TEST(Cli, GenGraph6) {
  const auto r = run_cli("gen petersen --format graph6");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(lines(r.out).front(), "IheA@GUAo");
}

TEST(Cli, LllTable) {
  const auto r = run_cli("lll-table");
  EXPECT_EQ(r.exit_code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 16u);
  EXPECT_EQ(rows[0].rfind("delta\tDelta\ta\tb\tminimal_N", 0), 0u);
  EXPECT_EQ(rows[1].rfind("7\t7\t2\t2\t4\t3\t4\t11\t2048\t0.71", 0), 0u) << rows[1];

  const auto j = nlohmann::json::parse(run_cli("lll-table --output json").out);
  EXPECT_EQ(j["schema"], "dominator/1");
  EXPECT_EQ(j["rows"].size(), 15u);

  const auto single = run_cli("lll-table --delta 14 --Delta 14 -a 2 -b 2");
  EXPECT_EQ(lines(single.out).size(), 2u);
  EXPECT_EQ(lines(single.out)[1].rfind("14\t14\t2\t2\t2\t1\t2", 0), 0u);
}

TEST(Cli, TuranOnGraph6File) {
  const std::string path = temp_file("heawood.g6", write_graph6(heawood_graph()) + "\n");
  const auto r = run_cli("turan " + path + " --strategy tt22_min3");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "dominator/1");
  EXPECT_LE(j["certificate"]["size"].get<int>(), 12);
  EXPECT_TRUE(j["certificate"]["verified"].get<bool>());
  EXPECT_EQ(j["alpha"], "3");
}

TEST(Cli, TuranPartitionReportsFormula) {
  const std::string path = temp_file("rr.el", write_edge_list(random_regular_graph(30, 5, 2)));
  const auto r = run_cli("turan " + path + " --strategy kk_partition -k 3 -d 1");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["alpha"], "4");
  EXPECT_EQ(j["formula_alpha"], "15/4");
  EXPECT_EQ(j["printed_bound"], "8/9");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("frobnicate 2>/dev/null").exit_code, 1);
  EXPECT_EQ(run_cli("gamma /nonexistent/file -a 1 -b 1 2>/dev/null").exit_code, 1);
  const std::string c4 = temp_file("c4.el", write_edge_list(cycle_graph(4)));
  EXPECT_EQ(run_cli("gamma " + c4 + " -a 3 -b 3 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run_cli("bounds " + c4 + " -a 3 -b 3 >/dev/null 2>&1").exit_code, 2);
  const std::string rr = temp_file("rr30.el", write_edge_list(random_regular_graph(30, 5, 0)));
  EXPECT_EQ(run_cli("gamma " + rr + " -a 2 -b 2 --node-limit 50 2>/dev/null").exit_code, 3);
  const std::string k3 = temp_file("k3.el", write_edge_list(complete_graph(3)));
  EXPECT_EQ(run_cli("lll-run " + k3 + " -N 2 -a 2 -b 2 --seed 1 --max-resamples 10 2>/dev/null").exit_code, 3);
  EXPECT_EQ(run_cli("verify " + c4 + " --set 0 -a 1 -b 1 2>/dev/null").exit_code, 4);
  EXPECT_EQ(run_cli("turan " + c4 + " --strategy tt22_min3 2>/dev/null").exit_code, 1);
  const std::string bad = temp_file("bad.el", "4\n0 1\n1 1\n");
  EXPECT_EQ(run_cli("gamma " + bad + " -a 1 -b 1 2>/dev/null").exit_code, 1);
}

TEST(Cli, DiagnosticIsOneLine) {
  const std::string bad = temp_file("bad2.el", "4\n0 1\n1 1\n");
  const auto r = run_cli("gamma " + bad + " -a 1 -b 1 2>&1 >/dev/null");
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].rfind("dominator: error=self-loop", 0), 0u) << out[0];
  EXPECT_NE(out[0].find("line 3"), std::string::npos);
}

TEST(Cli, SeedsReproduce) {
  const auto a = run_cli("gen random_regular 40 5 --seed 9");
  const auto b = run_cli("gen random_regular 40 5 --seed 9");
  const auto c = run_cli("gen random_regular 40 5 --seed 10");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  const auto env = run_cli("gen random_regular 40 5", "DOMINATOR_SEED=9 ");
  EXPECT_EQ(env.out, a.out);
  EXPECT_EQ(run_cli("gen random_regular 40 5 2>/dev/null", "env -u DOMINATOR_SEED ").exit_code, 1);

  const std::string g = temp_file("rr7.el", write_edge_list(random_regular_graph(100, 7, 1)));
  const auto r1 = run_cli("lll-run " + g + " -N 4 -a 2 -b 2 --seed 2");
  const auto r2 = run_cli("lll-run " + g + " -N 4 -a 2 -b 2", "DOMINATOR_SEED=2 ");
  ASSERT_EQ(r1.exit_code, 0);
  EXPECT_EQ(r1.out, r2.out);
  const auto j = nlohmann::json::parse(r1.out);
  EXPECT_LE(j["certificate"]["size"].get<int>(), 75);
}

TEST(Cli, VerifyAgreesWithLibrary) {
  const Graph g = petersen_graph();
  const std::string path = temp_file("petersen.el", write_edge_list(g));
  const auto gamma = nlohmann::json::parse(run_cli("gamma " + path + " -a 2 -b 3 --output json").out);
  EXPECT_EQ(gamma["gamma"], 9);
  std::string set;
  for (const auto& v : gamma["witness"]) set += (set.empty() ? "" : ",") + std::to_string(v.get<int>());
  EXPECT_EQ(run_cli("verify " + path + " --set " + set + " -a 2 -b 3").out, "true\n");
  for (int drop = 0; drop < 10; ++drop) {
    VertexSet s;
    std::string text;
    for (Vertex v = 0; v < 10; ++v) {
      if (v == drop) continue;
      s.push_back(v);
      text += (text.empty() ? "" : ",") + std::to_string(v);
    }
    const bool expected = is_ab_dominating(g, s, 2, 3);
    EXPECT_EQ(run_cli("verify " + path + " --set " + text + " -a 2 -b 3").exit_code, expected ? 0 : 4);
  }
}

TEST(Cli, BoundsJson) {
  const std::string path = temp_file("heawood2.g6", write_graph6(heawood_graph()) + "\n");
  const auto r = run_cli("bounds " + path + " -a 2 -b 2 --projective --output json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "dominator/1");
  ASSERT_FALSE(j["rows"].empty());
  bool saw_exact = false;
  for (const auto& row : j["rows"]) {
    if (row["method"] == "exact") {
      EXPECT_EQ(row["value"], 12);
      saw_exact = true;
    }
  }
  EXPECT_TRUE(saw_exact);
}

}  // namespace
}  // namespace dominator
