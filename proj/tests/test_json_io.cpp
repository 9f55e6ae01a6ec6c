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

#include <random>

#include "anyon/json_io.hpp"
#include "test_support.hpp"

namespace anyon {
namespace {

TEST(JsonScalar, RoundTripAndTextForm) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 12; ++n) {
    for (int t = 0; t < 10; ++t) {
      const CycScalar a = testing_support::random_scalar(n, rng);
      EXPECT_EQ(scalar_from_json(parse_json(to_json(a).dump())), a);
    }
  }
  const json j = to_json(CycScalar::omega_power(4, 1) * Rational(-3, 7));
  EXPECT_EQ(j.at("N"), 4);
  EXPECT_EQ(j.at("coeffs"), json({"0/1", "-3/7"}));
}

TEST(JsonScalar, Errors) {
  EXPECT_THROW(scalar_from_json(json{{"N", 4}, {"coeffs", {"1/1"}}}), ParseError);
  EXPECT_THROW(scalar_from_json(json{{"N", 2}, {"coeffs", {"1/0"}}}), ParseError);
  EXPECT_THROW(scalar_from_json(json{{"N", 2}, {"coeffs", {"x"}}}), ParseError);
  EXPECT_THROW(scalar_from_json(json{{"N", 2}, {"coeffs", {1}}}), ParseError);
  EXPECT_THROW(scalar_from_json(json{{"N", 0}, {"coeffs", json::array()}}), ParseError);
  EXPECT_THROW(scalar_from_json(json{{"coeffs", {"1/1"}}}), ParseError);
}

TEST(JsonMatrix, RoundTripAndErrors) {
  std::mt19937_64 rng(6);
  const Matrix m = testing_support::random_matrix(5, 3, 2, rng);
  EXPECT_EQ(matrix_from_json(parse_json(to_json(m).dump())), m);
  const Matrix empty(3, 0, 0);
  EXPECT_EQ(matrix_from_json(to_json(empty)), empty);

  json bad = to_json(m);
  bad["rows"] = 4;
  EXPECT_THROW(matrix_from_json(bad), ParseError);
  bad = to_json(m);
  bad["entries"][0].erase(1);
  EXPECT_THROW(matrix_from_json(bad), ParseError);
  bad = to_json(m);
  bad["entries"][0][0] = to_json(CycScalar::omega_power(3, 1));
  EXPECT_THROW(matrix_from_json(bad), ParseError);
}

TEST(JsonSpace, RoundTripAndErrors) {
  const GradedSpace s(4, {0, 3, 1, 1});
  EXPECT_EQ(space_from_json(to_json(s)), s);
  EXPECT_THROW(space_from_json(json{{"N", 4}, {"degrees", {0, 4}}}), ParseError);
  EXPECT_THROW(space_from_json(json{{"N", 4}, {"degrees", {-1}}}), ParseError);
  EXPECT_THROW(space_from_json(json{{"N", 4}, {"degrees", 2}}), ParseError);
}

TEST(JsonBlocks, MagicAndTwistedRoundTrip) {
  const MagicUnitary u = paper_magic_unitary(4, paper_seed_p(4), paper_seed_q(4));
  std::string kind;
  const BlockMatrix b = blocks_from_json(parse_json(to_json(u).dump()), &kind);
  EXPECT_EQ(kind, "magic");
  EXPECT_EQ(b, static_cast<const BlockMatrix&>(u));

  const TwistedMatrix a = magic_to_twisted(permutation_magic({1, 2, 0}));
  EXPECT_EQ(blocks_from_json(to_json(a), &kind), static_cast<const BlockMatrix&>(a));
  EXPECT_EQ(kind, "twisted");
}

TEST(JsonBlocks, Errors) {
  const json good = to_json(permutation_magic({1, 0, 2}));
  json bad = good;
  bad["kind"] = "other";
  EXPECT_THROW(blocks_from_json(bad), ParseError);
  bad = good;
  bad["d"] = 2;
  EXPECT_THROW(blocks_from_json(bad), ParseError);
  bad = good;
  bad["blocks"].erase(2);
  EXPECT_THROW(blocks_from_json(bad), ParseError);
  bad = good;
  bad["N"] = 4;
  EXPECT_THROW(blocks_from_json(bad), ParseError);
  EXPECT_THROW(parse_json("{\"N\": 3, "), ParseError);
}

TEST(JsonReport, Fields) {
  VerificationReport r;
  r.subject = "suite:sn";
  r.seed = "identity";
  r.add_exact("a", true, 0.0);
  r.add_exact("b", false, 2.5, "off");
  r.notes.push_back("hello");
  json j = to_json(r);
  EXPECT_EQ(j.at("mode"), "exact");
  EXPECT_FALSE(j.contains("eps"));
  EXPECT_EQ(j.at("passed"), false);
  EXPECT_EQ(j.at("failures"), 1);
  EXPECT_EQ(j.at("items")[0].at("residual"), "0");
  EXPECT_EQ(j.at("items")[1].at("residual"), 2.5);
  EXPECT_EQ(j.at("items")[1].at("note"), "off");
  EXPECT_EQ(j.at("notes"), json({"hello"}));

  VerificationReport q;
  q.mode = Mode::approx(1e-6);
  q.add_approx("c", 1e-9);
  j = to_json(q);
  EXPECT_EQ(j.at("mode"), "approx");
  EXPECT_EQ(j.at("eps"), 1e-6);
  EXPECT_EQ(j.at("passed"), true);
}

}  // namespace
}  // namespace anyon
