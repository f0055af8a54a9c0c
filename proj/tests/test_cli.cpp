// Copyright 2026 The degen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_runner.hpp"
#include "degen/commands.hpp"

using degen::testing::run_cli;
using nlohmann::json;

namespace {

const std::string kCli = DEGEN_CLI_PATH;
const std::string kGolden = DEGEN_GOLDEN_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json entry(const json& doc, std::size_t n, std::optional<std::size_t> k = std::nullopt) {
  for (const auto& e : doc["entries"])
    if (e["n"] == n && (!k || e["k"] == *k)) return e["value"];
  return nullptr;
}

}  // namespace

TEST(Cli, TriangleSymbolicEntry) {
  const auto r = run_cli(kCli, "triangle --kind s2deg --order 2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(entry(json::parse(r.out), 2, 1), json({"1", "-1"}));
}

TEST(Cli, TriangleAtLambdaZeroMatchesPartitionOracle) {
  const auto r = run_cli(kCli, "triangle --kind s2deg --order 3 --lambda 0");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = json::parse(r.out);
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(entry(doc, static_cast<std::size_t>(n), static_cast<std::size_t>(k)),
                json(std::to_string(degen::oracle::partition_oracle(n, k))));
}

TEST(Cli, TNumbers) {
  const auto r = run_cli(kCli, "triangle --kind t --order 3");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(entry(json::parse(r.out), 3, 1), json("5"));
}

TEST(Cli, KorobovSlice) {
  const auto r = run_cli(kCli, "triangle --kind korobov --order 2 --r 2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(entry(json::parse(r.out), 1), json({"1", "-1"}));
}

TEST(Cli, PolyExamples) {
  auto r = run_cli(kCli, "poly --family gaenari --order 2 --x 1");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(entry(json::parse(r.out), 2), json({"-1", "1"}));

  r = run_cli(kCli, "poly --family degbell --order 2 --lambda 0 --x 1");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(entry(json::parse(r.out), 2), json("2"));

  r = run_cli(kCli, "poly --family jindalrae --order 0");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(entry(json::parse(r.out), 0), json::parse(R"([["1"]])"));

  r = run_cli(kCli, "poly --family degbell --order 2 --lambda 1/2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(entry(json::parse(r.out), 2), json({"0", "0", "1"}));
}

TEST(Cli, EvalExpressions) {
  EXPECT_EQ(run_cli(kCli, "eval --expr 's2deg(3,2)'").out, "3 - 3λ\n");
  EXPECT_EQ(run_cli(kCli, "eval --expr 'gaenari(2)' --x 1").out, "-1 + λ\n");
  EXPECT_EQ(run_cli(kCli, "eval --expr 'degbernoulli(1,2)'").out, "-1 + λ\n");
  EXPECT_EQ(run_cli(kCli, "eval --expr 'degbell(10)' --lambda 0 --x 1").out, "115975\n");
  EXPECT_EQ(run_cli(kCli, "eval --expr 'j2deg(2,1)' --format json").out, "[\n  \"2\",\n  \"-2\"\n]\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const char* args : {"", "triangle --kind nope --order 3", "triangle --kind s2deg --order 3 --lambda 1/0",
                           "triangle --kind s2deg --order 25", "triangle --kind s2deg --order 3 --format xml",
                           "poly --family nope --order 2", "poly --family degbell --order 2 --x 1.5",
                           "verify --order 12 --filter nonexistent-id", "verify --order 0",
                           "eval --expr 's2deg(3)'", "eval --expr 'nope(1,1)'", "eval --expr 's2deg(3,1)' --x 2",
                           "bogus"}) {
    EXPECT_EQ(run_cli(kCli, args).exit_code, 2) << args;
  }
}

TEST(Cli, VerifyWithSpecializations) {
  const auto r = run_cli(kCli, "verify --order 6 --lambda-list 1,2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("lambda=2"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyJsonReport) {
  const auto r = run_cli(kCli, "verify --order 4 --filter eq44,cor13 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = json::parse(r.out);
  ASSERT_EQ(doc["results"].size(), 2U);
  EXPECT_EQ(doc["results"][0]["id"], "eq44");
  EXPECT_EQ(doc["results"][0]["status"], "pass");
  EXPECT_EQ(doc["summary"]["failed"], 0);
}

TEST(Cli, JsonRoundTripsByteIdentically) {
  for (const char* args : {"triangle --kind j1deg --order 5", "triangle --kind s1 --order 6 --lambda 1/3",
                           "poly --family gaenari --order 4", "poly --family newbell --order 3 --lambda -2",
                           "triangle --kind degbernoulli --order 4 --r 3", "verify --order 3 --format json"}) {
    const auto r = run_cli(kCli, args);
    ASSERT_EQ(r.exit_code, 0) << args;
    EXPECT_EQ(json::parse(r.out).dump(2) + "\n", r.out) << args;
  }
}

TEST(Cli, OutputMatchesLibrary) {
  const auto doc = degen::triangle_document("j2deg", 4, std::nullopt, std::nullopt);
  EXPECT_EQ(run_cli(kCli, "triangle --kind j2deg --order 4").out, degen::render_json(degen::to_json(doc)));
  const auto pdoc = degen::poly_document("jindalrae", 3, degen::Rational(1, 2), std::nullopt);
  EXPECT_EQ(run_cli(kCli, "poly --family jindalrae --order 3 --lambda 1/2 --format csv").out, degen::render_csv(pdoc));
}

struct GoldenCase {
  const char* file;
  const char* args;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.file; }

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesPinnedDocument) {
  const auto r = run_cli(kCli, GetParam().args);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, slurp(kGolden + "/" + GetParam().file));
}

INSTANTIATE_TEST_SUITE_P(
    Documents, Golden,
    ::testing::Values(GoldenCase{"s2deg_order3_lambda0.json", "triangle --kind s2deg --order 3 --lambda 0"},
                      GoldenCase{"s2deg_order3.json", "triangle --kind s2deg --order 3"},
                      GoldenCase{"t_order4.csv", "triangle --kind t --order 4 --format csv"},
                      GoldenCase{"gaenari_order3_x1.json", "poly --family gaenari --order 3 --x 1"},
                      GoldenCase{"jindalrae_order3.csv", "poly --family jindalrae --order 3 --format csv"},
                      GoldenCase{"korobov_order3_r2.json", "triangle --kind korobov --order 3 --r 2"}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) {
      std::string name = info.param.file;
      for (auto& c : name)
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
      return name;
    });
