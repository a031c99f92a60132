#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "chromkh/chromatic_complex.hpp"
#include "chromkh/graph_dsl.hpp"

using namespace chromkh;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const char* bin = std::getenv("CHROMKH_BIN");
  if (!bin) throw std::runtime_error("CHROMKH_BIN not set");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, ComputeCycleTable) {
  auto r = run("compute --dsl 'cycle(5)' -m 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("j\\i | 0 | 1  | 2 | 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("4   |   | Z2 |   |"), std::string::npos) << r.out;
}

TEST(Cli, ComputeJsonRoundTrips) {
  auto r = run("compute --dsl 'cycle(3)' -m 3 --json");
  ASSERT_EQ(r.code, 0);
  auto js = nlohmann::json::parse(r.out);
  EXPECT_EQ(js.at("m"), 3);
  EXPECT_EQ(bigraded_from_json(js), chromatic_homology(cycle_graph(3), 3));
}

TEST(Cli, ComputeFromFile) {
  std::string path = ::testing::TempDir() + "k4.txt";
  {
    std::ofstream f(path);
    f << "v 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n";
  }
  auto r = run("compute --file " + path + " --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(bigraded_from_json(nlohmann::json::parse(r.out)), chromatic_homology(complete_graph(4), 2));
}

TEST(Cli, ComputePretzelTorsionRow) {
  auto r = run("compute --pretzel 3,2,3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Z2 exponents by p: -6:0 -5:1 -4:1 -3:2 -2:2 -1:1 0:2 1:0 2:1"), std::string::npos) << r.out;
}

TEST(Cli, ComputePdJson) {
  auto r = run("compute --pd 'X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]' --json");
  ASSERT_EQ(r.code, 0);
  auto js = nlohmann::json::parse(r.out);
  EXPECT_EQ(js.at("crossings"), 3);
  EXPECT_EQ(js.at("groups").size(), 5u);
}

TEST(Cli, VerifyPasses) {
  auto r = run("verify twocycle --s 3..4 --t 3..5");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("0 mismatches"), std::string::npos);
}

TEST(Cli, VerifyCorrespondencePretzel) {
  auto r = run("verify correspondence --pretzel 3,2,3 --json");
  EXPECT_EQ(r.code, 0);
  auto js = nlohmann::json::parse(r.out);
  ASSERT_EQ(js.size(), 1u);
  EXPECT_TRUE(js[0].at("match").get<bool>());
}

TEST(Cli, VerifyMismatchExitsOneWithDiff) {
  auto r = run("verify pretzel --json");
  EXPECT_EQ(r.code, 1);
  auto js = nlohmann::json::parse(r.out);
  int with_diff = 0;
  for (const auto& rec : js)
    if (!rec.at("match").get<bool>()) {
      EXPECT_TRUE(rec.contains("diff"));
      ++with_diff;
    }
  EXPECT_EQ(with_diff, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("verify nosuchtheorem").code, 2);
  EXPECT_EQ(run("compute").code, 2);
  EXPECT_EQ(run("compute --dsl 'cycle(3' ").code, 2);
  EXPECT_EQ(run("compute --dsl 'cycle(3)' --pretzel 3,2,3").code, 2);
  EXPECT_EQ(run("compute --pd 'X[1,2,3]'").code, 2);
  EXPECT_EQ(run("table 4").code, 2);
  EXPECT_EQ(run("experiment").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, ResourceExit) {
  EXPECT_EQ(run("--max-cube-dim 4 compute --dsl 'cycle(5)'").code, 3);
  EXPECT_EQ(run("--max-cube-dim 7 compute --pretzel 3,2,3").code, 3);
}

TEST(Cli, Deterministic) {
  const std::string args = "compute --dsl 'theta(2,3,3)' -m 3 --json";
  auto a = run(args), b = run(args), c = run("--workers 3 " + args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, TableThree) {
  auto r = run("table 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("torsion isomorphic"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("khovanov   | 0   | 1   | 1   | 2   | 2   | 1   | 2   | 0   | 1"), std::string::npos) << r.out;
}

TEST(Cli, DistinguishFourVerticesNoSplit) {
  auto r = run("distinguish --v 4 -m 2 --json");
  ASSERT_EQ(r.code, 0);
  auto js = nlohmann::json::parse(r.out);
  EXPECT_EQ(js.at("split_classes"), 0);
  EXPECT_EQ(js.at("classes").size(), 1u);
}

TEST(Cli, ExperimentObservations) {
  auto r = run("experiment --experimental --max-v 4");
  ASSERT_EQ(r.code, 0);
  auto js = nlohmann::json::parse(r.out);
  EXPECT_TRUE(js.contains("span_over_Am"));
  EXPECT_TRUE(js.contains("tails"));
}
