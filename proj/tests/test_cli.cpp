#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ptchain/cli.hpp"
#include "ptchain/golden.hpp"

using namespace ptchain;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Golden, EveryFixtureMatches) {
  auto results = run_golden(default_golden_dir());
  EXPECT_EQ(results.size(), 19u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.message << "\n  " << r.expected << "\n  " << r.actual;
}

TEST(Golden, CanonicalFormIgnoresLayout) {
  EXPECT_EQ(canonical_expression("(1+v)*w"), canonical_expression("w + v*w"));
  EXPECT_EQ(canonical_up_to_sign("-(t^2 - v)"), canonical_expression("t^2-v"));
}

TEST(Cli, SymbolicSecular) {
  Outcome r = run({"secular", "--symbolic", "--J", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t^4 - (1+u+2*v+2*w)*t^3 + (2*u*w+v^2+2*v*w+w^2)*t^2 + (2*v*w+w^2-u*w^2)*t + w^2\n");
}

TEST(Cli, SecularJson) {
  Outcome r = run({"secular", "--values", "3,6,5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["J"], 3);
  EXPECT_EQ(j["coefficients"].size(), 5u);
  EXPECT_EQ(j["coefficients"][4], "1");
}

TEST(Cli, SymbolicLimit) {
  Outcome r = run({"secular", "--symbolic", "--J", "8"});
  EXPECT_EQ(r.code, 2);
  auto j = nlohmann::json::parse(r.err);
  EXPECT_EQ(j["error"]["code"], "ResourceLimit");
}

TEST(Cli, ErrorsAreMachineReadable) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"spectrum"}, {"spectrum", "--values", "1,x"}, {"spectrum", "--pairs", "1:0"}, {"spectrum", "--J", "2", "--values", "1"}, {"nonsense"}}) {
    Outcome r = run(args);
    EXPECT_EQ(r.code, 2) << args[0];
    auto j = nlohmann::json::parse(r.err);
    EXPECT_TRUE(j.contains("error"));
  }
}

TEST(Cli, SpectrumWithWavefunction) {
  Outcome r = run({"spectrum", "--values", "17,6,5", "--wavefunction", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["states"].size(), 3u);
  EXPECT_NEAR(std::stod(j["states"][0]["t"].get<std::string>()), 30.95255, 1e-5);
  EXPECT_LT(std::stod(j["states"][0]["wavefunction"]["residual"].get<std::string>()), 1e-10);
  EXPECT_EQ(j["states"][0]["wavefunction"]["interior"].size(), 4u);
}

TEST(Cli, SturmianText) {
  Outcome r = run({"sturmian", "--symbolic", "--J", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("A0 = v\n"), std::string::npos);
  EXPECT_NE(r.out.find("B2~ = "), std::string::npos);
  EXPECT_NE(r.out.find("A2~ = -y/w\n"), std::string::npos);
}

TEST(Cli, SturmianShape) {
  Outcome r = run({"sturmian", "--values", "0,1,1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["shape"]["label"], "/+/");
  EXPECT_EQ(j["shape"]["nominal_intersections"], 4);
}

TEST(Cli, DomainCsvAndBoundaries) {
  const std::string path = ::testing::TempDir() + "ptchain_boundary.json";
  Outcome r = run({"domain", "--J", "1", "--raw", "--range", "-1:1,-1:1", "--step", "0.5", "--boundary-out", path});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "param1,param2,count,complex_flag");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 25);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j[0]["level"], 1);
  std::remove(path.c_str());
}

TEST(Cli, VerifyRandomAndOracle) {
  Outcome a = run({"verify", "--random", "3", "--J", "3", "--seed", "4"});
  EXPECT_EQ(a.code, 0) << a.out;
  Outcome b = run({"verify", "--values", "3", "--oracle-N", "60"});
  EXPECT_EQ(b.code, 0) << b.out;
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "ptchain_out.txt";
  Outcome r = run({"secular", "--values", "3", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string text;
  std::getline(in, text);
  EXPECT_EQ(text, "t - 4");
  std::remove(path.c_str());
}
