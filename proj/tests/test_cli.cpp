// Copyright 2026 The anyon-qpg Authors
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
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "anyon/json_io.hpp"

namespace anyon {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(ANYON_QPG_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("anyon_qpg_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(Cli, AllSuitesPassOnIdentity) {
  const CliResult r = run("verify --N 3 --seed identity --suite all");
  EXPECT_EQ(r.code, 0);
  const json j = parse_json(r.out);
  EXPECT_EQ(j.at("passed"), true);
  EXPECT_EQ(j.at("failures"), 0);
  EXPECT_GT(j.at("items").size(), 100u);
}

TEST_F(Cli, PaperWitness) {
  const CliResult r = run("verify --N 4 --seed paper-n4 --suite commutativity");
  EXPECT_EQ(r.code, 0);
  const json j = parse_json(r.out);
  bool witness = false;
  for (const auto& item : j.at("items")) {
    if (item.at("label") == "commutativity/witness.noncommutative") witness = item.at("pass");
  }
  EXPECT_TRUE(witness);
}

TEST_F(Cli, GenVerifyFromFileAndDeterminism) {
  ASSERT_EQ(run("gen random-block --N 3 --rng-seed 4 --out " + path("seed.json")).code, 0);
  ASSERT_EQ(run("verify --N 3 --suite sn --seed " + path("seed.json") + " --out " + path("a.json")).code, 0);
  ASSERT_EQ(run("verify --N 3 --suite sn --seed " + path("seed.json") + " --out " + path("b.json")).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  const CliResult rep = run("report " + path("a.json"));
  EXPECT_EQ(rep.code, 0);
  EXPECT_NE(rep.out.find("pass"), std::string::npos);
}

TEST_F(Cli, TransformShiftIsDiagonalAndRoundTrips) {
  ASSERT_EQ(run("gen shift --N 3 --out " + path("m.json")).code, 0);
  ASSERT_EQ(run("transform " + path("m.json") + " --out " + path("t.json")).code, 0);
  std::string kind;
  const BlockMatrix t = blocks_from_json(parse_json(slurp(path("t.json"))), &kind);
  EXPECT_EQ(kind, "twisted");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Matrix expect = i == j ? Matrix::identity(3, 1) * CycScalar::omega_power(3, -i) : Matrix(3, 1, 1);
      EXPECT_EQ(t.at(i, j), expect);
    }
  }
  ASSERT_EQ(run("transform " + path("t.json") + " --out " + path("m2.json")).code, 0);
  EXPECT_EQ(slurp(path("m.json")), slurp(path("m2.json")));
}

TEST_F(Cli, NonMagicSeedFails) {
  ASSERT_EQ(run("gen identity --N 2 --out " + path("s.json")).code, 0);
  json j = parse_json(slurp(path("s.json")));
  j["blocks"][0][0]["entries"][0][0]["coeffs"][0] = "1/2";
  std::ofstream(path("bad.json")) << j.dump();
  EXPECT_EQ(run("verify --N 2 --suite magic-lemma --seed " + path("bad.json")).code, 1);
}

TEST_F(Cli, UsageAndParseErrors) {
  std::ofstream(path("corrupt.json")) << "{\"N\": 3, \"blocks\": [";
  EXPECT_EQ(run("verify --N 3 --suite sn --seed " + path("corrupt.json")).code, 2);
  EXPECT_EQ(run("verify --N 3 --suite sn --seed " + path("missing.json")).code, 2);
  EXPECT_EQ(run("verify --N 13 --suite sn --seed identity").code, 2);
  EXPECT_EQ(run("verify --N 3 --suite nope --seed identity").code, 2);
  EXPECT_EQ(run("verify --N 3 --suite sn --seed identity --mode approx --eps -1").code, 2);
  EXPECT_EQ(run("gen permutation --N 3 --perm 0,0,1").code, 2);
  EXPECT_EQ(run("verify --N 4 --suite sn --seed perm:1,0,2").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

}  // namespace
}  // namespace anyon
