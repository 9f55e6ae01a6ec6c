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

#include "anyon/magic.hpp"
#include "anyon/representations.hpp"
#include "anyon/verifier.hpp"
#include "test_support.hpp"

namespace anyon {
namespace {

CycScalar w(int n, long long k) { return CycScalar::omega_power(n, k); }

RepAssignment identity_rep(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i;
  return build_sn_rep(permutation_magic(s));
}

RepAssignment paper_rep() { return build_sn_rep(paper_magic_unitary(4, paper_seed_p(4), paper_seed_q(4))); }

// Delta(q_ij) = sum_k j1(q_ik) j2(q_kj), straight from the embeddings.
Matrix delta_oracle(const RepAssignment& rep, int i, int j) {
  const int n = rep.space.order;
  const std::size_t dl = rep.space.dim();
  Matrix out(n, dl * dl, dl * dl);
  for (int k = 0; k < n; ++k) {
    out += embed_j1(rep.image(q_gen(n, i, k)), rep.space) *
           embed_j2(rep.image(q_gen(n, k, j)), rep.space, rep.space);
  }
  return out;
}

bool any_failure_with_prefix(const VerificationReport& r, const std::string& prefix) {
  for (const auto& item : r.items) {
    if (item.label.rfind(prefix, 0) == 0 && !item.pass) return true;
  }
  return false;
}

TEST(Comult, ImagesMatchEmbeddingOracle) {
  const RepAssignment rep = build_sn_rep(random_block_magic(3, 1));
  const RepAssignment d = comult_images(rep, Family::sn);
  EXPECT_EQ(d.space, GradedSpace::tensor(rep.space, rep.space));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(d.image(q_gen(3, i, j)), delta_oracle(rep, i, j));
      EXPECT_TRUE(degree_of(d.graded(q_gen(3, i, j))).admits(j - i, 3));
    }
  }
}

TEST(Comult, IdentitySeedUnitCorner) {
  const RepAssignment rep = identity_rep(2);
  const RepAssignment d = comult_images(rep, Family::sn);
  EXPECT_EQ(d.image(q_gen(2, 0, 0)), Matrix::identity(2, rep.space.dim() * rep.space.dim()));
}

TEST(Comult, PermutationSeedsWellDefinedAndCoassociative) {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& s : all_permutations(n)) {
      const RepAssignment rep = build_sn_rep(permutation_magic(s));
      EXPECT_TRUE(check_comult_welldefined(rep, Family::sn).passed());
      const VerificationReport c = check_coassociativity(rep, Family::sn);
      EXPECT_TRUE(c.passed());
      EXPECT_EQ(c.max_residual(), 0.0);
      const RepAssignment un = build_un_rep_from_sn(rep);
      EXPECT_TRUE(check_comult_welldefined(un, Family::un).passed());
      EXPECT_TRUE(check_coassociativity(un, Family::un).passed());
    }
  }
}

TEST(Comult, ZeroedGeneratorIsLocalized) {
  RepAssignment rep = build_sn_rep(random_block_magic(3, 2));
  rep.set(q_gen(3, 1, 1), Matrix(3, rep.space.dim(), rep.space.dim()));
  const VerificationReport r = check_comult_welldefined(rep, Family::sn);
  EXPECT_FALSE(r.passed());
  std::size_t failures = 0;
  for (const auto& item : r.items) {
    if (!item.pass) ++failures;
  }
  EXPECT_GT(failures, 0u);
  EXPECT_LT(failures, r.items.size());
  EXPECT_TRUE(r.find("sn.1a[i=0]")->pass);
}

TEST(Braid, PhaseForQ12Q21AtOrderThree) {
  const RepAssignment rep = build_sn_rep(random_block_magic(3, 3));
  const Matrix& x = rep.image(q_gen(3, 1, 2));
  const Matrix& y = rep.image(q_gen(3, 2, 1));
  ASSERT_FALSE(x.is_zero());
  ASSERT_FALSE(y.is_zero());
  const Matrix a = embed_j1(x, rep.space);
  const Matrix b = embed_j2(y, rep.space, rep.space);
  EXPECT_EQ(a * b, b * a * w(3, -1));
  EXPECT_TRUE(braided_commutator(x, 1, rep.space, y, 2, rep.space).is_zero());
  EXPECT_FALSE(braided_commutator(x, 1, rep.space, y, 0, rep.space).is_zero());
  EXPECT_TRUE(check_braided_commutation(rep).passed());
}

TEST(Action, RelationsCoassociativityAndRoundTrip) {
  const RepAssignment xn = build_xn_rep(3);
  for (const auto& s : all_permutations(3)) {
    const RepAssignment sn = build_sn_rep(permutation_magic(s));
    EXPECT_TRUE(check_action(xn, sn).passed());
    const RepAssignment back = extract_coefficients(action_images(xn, sn), xn, sn.space);
    for (const auto& [g, m] : sn.images) EXPECT_EQ(back.image(g), m);
  }
  const RepAssignment sn = build_sn_rep(random_block_magic(3, 8));
  const RepAssignment back = extract_coefficients(action_images(xn, sn), xn, sn.space);
  for (const auto& [g, m] : sn.images) EXPECT_EQ(back.image(g), m);
}

TEST(Action, ImagesMatchEmbeddingOracle) {
  const RepAssignment xn = build_xn_rep(3);
  const RepAssignment sn = build_sn_rep(random_block_magic(3, 4));
  const RepAssignment eta = action_images(xn, sn);
  for (int j = 0; j < 3; ++j) {
    Matrix expect(3, 3 * sn.space.dim(), 3 * sn.space.dim());
    for (int i = 0; i < 3; ++i) {
      expect += embed_j1(xn.image(P_gen(3, i)), sn.space) * embed_j2(sn.image(q_gen(3, i, j)), xn.space, sn.space);
    }
    EXPECT_EQ(eta.image(P_gen(3, j)), expect);
  }
}

TEST(Action, TrivialActionGivesDiagonalCoefficients) {
  const int n = 3;
  const RepAssignment xn = build_xn_rep(n);
  const GradedSpace l = GradedSpace::trivial(n, 2);
  RepAssignment eta{GradedSpace::tensor(xn.space, l), {}, "trivial"};
  for (int j = 0; j < n; ++j) eta.set(P_gen(n, j), embed_j1(xn.image(P_gen(n, j)), l));
  const RepAssignment a = extract_coefficients(eta, xn, l);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      EXPECT_EQ(a.image(q_gen(n, i, j)), i == j ? Matrix::identity(n, 2) : Matrix(n, 2, 2));
    }
  }
  EXPECT_TRUE(check_presentation(sn_plus_relations(n), a).passed());
}

TEST(Action, InconsistentImagesThrow) {
  const int n = 3;
  const RepAssignment xn = build_xn_rep(n);
  const GradedSpace l = GradedSpace::trivial(n, 2);
  std::mt19937_64 rng(31);
  RepAssignment eta{GradedSpace::tensor(xn.space, l), {}, "random"};
  for (int j = 0; j < n; ++j) eta.set(P_gen(n, j), testing_support::random_matrix(n, 6, 6, rng));
  EXPECT_THROW(extract_coefficients(eta, xn, l), InconsistentSystem);
}

TEST(Action, ZeroedRepFailsUnit) {
  const RepAssignment xn = build_xn_rep(3);
  RepAssignment sn = identity_rep(3);
  for (auto& [g, m] : sn.images) m = Matrix(3, sn.space.dim(), sn.space.dim());
  const VerificationReport r = check_action(xn, sn);
  ASSERT_NE(r.find("xn.1"), nullptr);
  EXPECT_FALSE(r.find("xn.1")->pass);
}

TEST(Podles, ProxyRanks) {
  const VerificationReport r2 = check_podles_span(identity_rep(2), Family::sn, 2);
  ASSERT_NE(r2.find("podles.proxy.rank"), nullptr);
  EXPECT_TRUE(r2.passed());
  // The comparison applies exactly when Delta respects the linear relations
  // of the image algebra: the identity and the 3-cycles, not transpositions.
  for (const auto& s : all_permutations(3)) {
    const RepAssignment rep = build_sn_rep(permutation_magic(s));
    const RepAssignment d = comult_images(rep, Family::sn);
    std::vector<Matrix> gens, graph;
    for (const auto& [g, m] : rep.images) {
      gens.push_back(m);
      graph.push_back(direct_sum(m, d.image(g)));
    }
    gens.push_back(Matrix::identity(3, rep.space.dim()));
    graph.push_back(direct_sum(gens.back(), Matrix::identity(3, rep.space.dim() * rep.space.dim())));
    const bool descends = span_dimension(gens) == span_dimension(graph);
    const bool even = s == std::vector<int>{0, 1, 2} || s == std::vector<int>{1, 2, 0} ||
                      s == std::vector<int>{2, 0, 1};
    EXPECT_EQ(descends, even);
    const VerificationReport r = check_podles_span(rep, Family::sn, 3);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.find("podles.proxy.rank") != nullptr, descends);
  }
  const VerificationReport r0 = check_podles_span(identity_rep(3), Family::sn, 0);
  ASSERT_NE(r0.find("podles.proxy.rank"), nullptr);
  EXPECT_NE(r0.find("podles.proxy.rank")->note.find("= 1, rank j1(x) j2(y) = 1"), std::string::npos);
  bool proxy_note = false;
  for (const auto& n : r0.notes) proxy_note |= n.find("proxy") != std::string::npos;
  EXPECT_TRUE(proxy_note);
}

TEST(Commutativity, OrderThreeSeedsCommute) {
  std::vector<RepAssignment> reps;
  for (const auto& s : all_permutations(3)) reps.push_back(build_sn_rep(permutation_magic(s)));
  for (std::uint64_t k = 0; k < 4; ++k) reps.push_back(build_sn_rep(random_block_magic(3, k)));
  for (const auto& rep : reps) {
    const CommutativityResult c = check_commutativity(rep);
    EXPECT_TRUE(c.commutative_exact);
    EXPECT_EQ(c.max_commutator_norm, 0.0);
    EXPECT_TRUE(c.report.passed());
    EXPECT_NE(c.report.find("vanish[q_1,1*q_2,1]"), nullptr);
    EXPECT_NE(c.report.find("vanish[q_2,2*q_1,2]"), nullptr);
  }
}

TEST(Commutativity, VanishingProductsByHand) {
  const RepAssignment rep = build_sn_rep(random_block_magic(3, 5));
  auto q = [&](int i, int j) -> const Matrix& { return rep.image(q_gen(3, i, j)); };
  EXPECT_TRUE((q(1, 1) * q(2, 1)).is_zero());
  EXPECT_TRUE((q(2, 1) * q(2, 2)).is_zero());
  EXPECT_TRUE((q(1, 1) * q(1, 2)).is_zero());
  EXPECT_TRUE((q(1, 2) * q(2, 2)).is_zero());
}

TEST(Commutativity, PaperSeedWitness) {
  const CommutativityResult c = check_commutativity(paper_rep(), true);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_TRUE(c.witness->identity_holds);
  EXPECT_GT(c.witness->product_norm, 1e-6);
  EXPECT_FALSE(c.commutative_exact);
  EXPECT_GT(c.max_commutator_norm, 1e-6);
  EXPECT_TRUE(c.report.passed());
}

TEST(Commutativity, EqualProjectionsNegativeControl) {
  const Matrix p = paper_seed_p(4);
  const CommutativityResult c = check_commutativity(build_sn_rep(paper_magic_unitary(4, p, p)), true);
  EXPECT_TRUE(c.commutative_exact);
  EXPECT_FALSE(c.report.passed());
  EXPECT_FALSE(c.report.find("witness.noncommutative")->pass);
}

TEST(Boso, FundamentalAndComult) {
  for (int n = 2; n <= 3; ++n) {
    const RepAssignment b = build_boso_rep(identity_rep(n));
    EXPECT_TRUE(check_fundamental(b, Family::sn).passed());
    EXPECT_TRUE(check_boso_comult(b, Family::sn).passed());
  }
  const RepAssignment b = build_boso_rep(build_sn_rep(random_block_magic(3, 7)));
  const VerificationReport full = check_boso_comult(b, Family::sn);
  EXPECT_TRUE(full.passed());
  const VerificationReport probed = check_boso_comult(b, Family::sn, Mode::exact(), 0);
  EXPECT_TRUE(probed.passed());
  EXPECT_FALSE(probed.notes.empty());
  EXPECT_TRUE(check_boso_comult(build_boso_rep(build_un_rep_from_sn(identity_rep(3))), Family::un).passed());
}

TEST(Boso, CorruptedGeneratorFails) {
  RepAssignment b = build_boso_rep(build_sn_rep(random_block_magic(3, 7)));
  const Matrix q12 = b.image(q_gen(3, 1, 2));
  ASSERT_FALSE(q12.is_zero());
  b.set(q_gen(3, 1, 2), q12 * CycScalar(3, 2));
  EXPECT_FALSE(check_fundamental(b, Family::sn).passed());
  EXPECT_FALSE(check_boso_comult(b, Family::sn).passed());
}

TEST(Modes, ApproxAgreesOnPaperSeed) {
  const RepAssignment rep = paper_rep();
  const VerificationReport a = check_comult_welldefined(rep, Family::sn, Mode::approx(1e-10));
  const VerificationReport e = check_comult_welldefined(rep, Family::sn);
  EXPECT_TRUE(a.passed());
  EXPECT_TRUE(e.passed());
  ASSERT_EQ(a.items.size(), e.items.size());
  EXPECT_LT(a.max_residual(), 1e-10);
}

}  // namespace
}  // namespace anyon
