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
#include "anyon/presentation.hpp"
#include "anyon/representations.hpp"
#include "test_support.hpp"

namespace anyon {
namespace {

CycScalar w(int n, long long k) { return CycScalar::omega_power(n, k); }

// a = Omega^{-1} u Omega as one Nd x Nd product, independent of the blockwise
// Fourier sum in magic_to_twisted.
Matrix twisted_oracle(const MagicUnitary& u) {
  const Matrix id = Matrix::identity(u.n, u.d);
  return kron(omega_inverse(u.n), id) * u.assemble() * kron(omega_matrix(u.n), id);
}

TEST(Magic, PermutationsAreMagic) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& s : all_permutations(n)) EXPECT_TRUE(validate_magic(permutation_magic(s)).passed());
  }
}

TEST(Magic, InvalidPermutationThrows) {
  EXPECT_THROW(permutation_magic({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(permutation_magic({0, 3, 1}), std::invalid_argument);
}

TEST(Magic, HalfIdentityBlockFails) {
  MagicUnitary u = permutation_magic({0, 1, 2});
  u.at(0, 0) = Matrix::identity(3, 1) * CycScalar(3, Rational(1, 2));
  const VerificationReport r = validate_magic(u);
  EXPECT_FALSE(r.passed());
  const ReportItem* sq = r.find("magic.square[i=0,j=0]");
  ASSERT_NE(sq, nullptr);
  EXPECT_FALSE(sq->pass);
  EXPECT_DOUBLE_EQ(*sq->residual, 0.25);
}

TEST(Magic, PaperSeedIsMagicWithNoncommutingBlocks) {
  const Matrix p = paper_seed_p(4);
  const Matrix q = paper_seed_q(4);
  EXPECT_TRUE(is_projection(p));
  EXPECT_TRUE(is_projection(q));
  EXPECT_FALSE((p * q - q * p).is_zero());
  for (int n = 4; n <= 6; ++n) {
    const MagicUnitary u = paper_magic_unitary(n, paper_seed_p(n), paper_seed_q(n));
    EXPECT_EQ(u.d, 4u);
    EXPECT_TRUE(validate_magic(u).passed()) << n;
  }
  EXPECT_EQ(paper_magic_unitary(5, paper_seed_p(5), paper_seed_q(5)).at(4, 4), Matrix::identity(5, 4));
  EXPECT_THROW(paper_magic_unitary(3, paper_seed_p(3), paper_seed_q(3)), std::invalid_argument);
  EXPECT_THROW(paper_magic_unitary(4, p * CycScalar(4, 2), q), std::invalid_argument);
}

TEST(Twist, IdentityAndShift) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
    EXPECT_EQ(magic_to_twisted(permutation_magic(id)).assemble(), Matrix::identity(n, static_cast<std::size_t>(n)));
  }
  const TwistedMatrix a = magic_to_twisted(permutation_magic({1, 2, 0}));
  Matrix expect(3, 3, 3);
  for (int j = 0; j < 3; ++j) expect.set(static_cast<std::size_t>(j), static_cast<std::size_t>(j), w(3, -j));
  EXPECT_EQ(a.assemble(), expect);
}

TEST(Twist, MatchesOmegaConjugation) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& s : all_permutations(n)) {
      const MagicUnitary u = permutation_magic(s);
      EXPECT_EQ(magic_to_twisted(u).assemble(), twisted_oracle(u));
    }
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const MagicUnitary u = random_block_magic(3 + static_cast<int>(seed % 3), seed);
    EXPECT_EQ(magic_to_twisted(u).assemble(), twisted_oracle(u));
  }
  const MagicUnitary pu = paper_magic_unitary(5, paper_seed_p(5), paper_seed_q(5));
  EXPECT_EQ(magic_to_twisted(pu).assemble(), twisted_oracle(pu));
}

TEST(Twist, RoundTripRandomPermutations) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i;
    std::shuffle(s.begin(), s.end(), rng);
    const MagicUnitary u = permutation_magic(s);
    EXPECT_EQ(twisted_to_magic(magic_to_twisted(u)), u);
  }
}

TEST(Twist, ClosedFormMatches) {
  for (int n = 4; n <= 6; ++n) {
    const Matrix p = paper_seed_p(n);
    const Matrix q = paper_seed_q(n);
    EXPECT_EQ(magic_to_twisted(paper_magic_unitary(n, p, q)), paper_twisted_closed_form(n, p, q)) << n;
  }
}

TEST(RandomBlock, ExactAndMagic) {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const MagicUnitary u = random_block_magic(n, seed);
      EXPECT_TRUE(validate_magic(u).passed()) << n << " " << seed;
    }
  }
  EXPECT_EQ(random_block_magic(5, 9), random_block_magic(5, 9));
}

TEST(LemmaMagic, EquivalenceOnCandidates) {
  // Valid seeds and deliberately broken ones: the two tests must agree.
  std::vector<MagicUnitary> cands;
  for (const auto& s : all_permutations(3)) cands.push_back(permutation_magic(s));
  cands.push_back(random_block_magic(3, 4));
  MagicUnitary broken = permutation_magic({0, 1, 2});
  broken.at(0, 1) = Matrix::identity(3, 1);
  cands.push_back(broken);
  MagicUnitary swapped = permutation_magic({0, 1, 2});
  swapped.at(1, 1) = Matrix(3, 1, 1);
  cands.push_back(swapped);
  MagicUnitary half = random_block_magic(3, 5);
  half.at(0, 0) = half.at(0, 0) * CycScalar(3, 2);
  cands.push_back(half);
  int invalid = 0;
  for (const auto& u : cands) {
    const bool magic = validate_magic(u).passed();
    if (!magic) ++invalid;
    const TwistedMatrix a = magic_to_twisted(u);
    EXPECT_EQ(check_presentation(rel_ord_relations(3), twisted_assignment(a)).passed(), magic);
  }
  EXPECT_EQ(invalid, 3);
}

TEST(LemmaMagic, ConjugateSymmetry) {
  std::vector<MagicUnitary> seeds;
  for (const auto& s : all_permutations(4)) seeds.push_back(permutation_magic(s));
  seeds.push_back(paper_magic_unitary(4, paper_seed_p(4), paper_seed_q(4)));
  seeds.push_back(random_block_magic(4, 2));
  for (const auto& u : seeds) {
    TwistedMatrix a = magic_to_twisted(u);
    const bool pass = check_presentation(rel_ord_relations(4), twisted_assignment(a)).passed();
    for (auto& b : a.blocks) b = conjugate(b);
    EXPECT_EQ(check_presentation(rel_ord_relations(4), twisted_assignment(a)).passed(), pass);
  }
}

TEST(SnRep, IdentitySeedUnitCorner) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
    const RepAssignment rep = build_sn_rep(permutation_magic(id));
    EXPECT_EQ(rep.image(q_gen(n, 0, 0)), Matrix::identity(n, rep.space.dim()));
    EXPECT_TRUE(check_presentation(sn_plus_relations(n), rep).passed());
  }
}

TEST(SnRep, DegreesAreColumnMinusRow) {
  const RepAssignment rep = build_sn_rep(paper_magic_unitary(4, paper_seed_p(4), paper_seed_q(4)));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_TRUE(degree_of(rep.graded(q_gen(4, i, j))).admits(j - i, 4)) << i << "," << j;
    }
  }
}

TEST(SnRep, TwistFormulaByHand) {
  const MagicUnitary u = random_block_magic(3, 6);
  const TwistedMatrix a = magic_to_twisted(u);
  const RepAssignment rep = build_sn_rep(u);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Matrix leg = power(adjoint(clock_matrix(3)), static_cast<unsigned>(i)) *
                         power(shift_matrix(3), static_cast<unsigned>(zmod(j - i, 3)));
      EXPECT_EQ(rep.image(q_gen(3, i, j)), kron(leg, a.at(i, j)));
    }
  }
}

TEST(SnRep, NonMagicRejected) {
  MagicUnitary u = permutation_magic({0, 1, 2});
  u.at(2, 2) = Matrix(3, 1, 1);
  EXPECT_THROW(build_sn_rep(u), std::invalid_argument);
}

TEST(SnRep, PaperSeedPhaseIdentity) {
  const RepAssignment rep = build_sn_rep(paper_magic_unitary(4, paper_seed_p(4), paper_seed_q(4)));
  const Matrix& q12 = rep.image(q_gen(4, 1, 2));
  const Matrix& q23 = rep.image(q_gen(4, 2, 3));
  EXPECT_TRUE((q12 * q23 - q23 * q12 * w(4, 1)).is_zero());
  EXPECT_FALSE((q12 * q23).is_zero());
  EXPECT_FALSE((q12 * q23 - q23 * q12).is_zero());
}

TEST(SnRep, EqualProjectionsCommute) {
  const Matrix p = paper_seed_p(4);
  const RepAssignment rep = build_sn_rep(paper_magic_unitary(4, p, p));
  for (const auto& [g, x] : rep.images) {
    for (const auto& [h, y] : rep.images) EXPECT_TRUE((x * y - y * x).is_zero());
  }
}

TEST(Boso, ExchangeDegreesAndIdentitySeed) {
  const RepAssignment base = build_sn_rep(permutation_magic({0, 1}));
  const RepAssignment b = build_boso_rep(base);
  EXPECT_TRUE(b.image(q_gen(2, 0, 1)).is_zero());
  EXPECT_TRUE(check_presentation(boso_sn_relations(2), b).passed());
  for (int n = 3; n <= 4; ++n) {
    const RepAssignment bb = build_boso_rep(build_sn_rep(random_block_magic(n, 1)));
    const Degree dz = degree_of(bb.graded(z_gen()));
    EXPECT_TRUE(dz.is_homogeneous());
    EXPECT_EQ(dz.value, 1);
    const Matrix& z = bb.image(z_gen());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Matrix& x = bb.image(q_gen(n, i, j));
        EXPECT_TRUE(degree_of(bb.graded(q_gen(n, i, j))).admits(j - i, n));
        EXPECT_EQ(z * x * adjoint(z), x * w(n, j - i));
      }
    }
  }
}

TEST(Boso, AllSeedsOfOrderThreePass) {
  for (const auto& s : all_permutations(3)) {
    const RepAssignment b = build_boso_rep(build_sn_rep(permutation_magic(s)));
    EXPECT_TRUE(check_presentation(boso_sn_relations(3), b).passed());
  }
}

TEST(Fundamental, UnitaryAndBlockDiagonal) {
  for (const MagicUnitary& u : {permutation_magic({0, 1, 2}),
                                paper_magic_unitary(4, paper_seed_p(4), paper_seed_q(4))}) {
    const RepAssignment b = build_boso_rep(build_sn_rep(u));
    const FundamentalRep t = fundamental_rep(b);
    const int n = u.n;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        EXPECT_EQ(t.at(i, j), power(b.image(z_gen()), static_cast<unsigned>(i)) * b.image(q_gen(n, i, j)));
      }
    }
    EXPECT_TRUE(mat_is_unitary(t.assemble()).unitary);
    const Matrix zt = z_plus_t(b, t);
    EXPECT_TRUE(mat_is_unitary(zt).unitary);
    EXPECT_EQ(zt, direct_sum(b.image(z_gen()), t.assemble()));
  }
}

TEST(Xn, FourierPicture) {
  for (int n = 2; n <= 6; ++n) {
    const RepAssignment xn = build_xn_rep(n);
    EXPECT_EQ(xn.image(P_gen(n, 0)), Matrix::identity(n, static_cast<std::size_t>(n)) * CycScalar(n, Rational(1, n)));
    const std::vector<Matrix> p = xn_point_projections(xn);
    Matrix sum(n, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i)]);
      EXPECT_EQ(adjoint(p[static_cast<std::size_t>(i)]), p[static_cast<std::size_t>(i)]);
      sum += p[static_cast<std::size_t>(i)];
      // P_j = (1/N) sum_i w^{ij} p_i.
    }
    EXPECT_EQ(sum, Matrix::identity(n, static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
      Matrix pj(n, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) pj += p[static_cast<std::size_t>(i)] * w(n, static_cast<long long>(i) * j);
      EXPECT_EQ(pj * CycScalar(n, Rational(1, n)), xn.image(P_gen(n, j)));
    }
  }
  // N = 2: P_1 is off-diagonal of degree 1.
  const RepAssignment x2 = build_xn_rep(2);
  EXPECT_EQ(x2.image(P_gen(2, 1)), Matrix::from_rationals(2, {{0, Rational(1, 2)}, {Rational(1, 2), 0}}));
  EXPECT_EQ(degree_of(x2.graded(P_gen(2, 1))).value, 1);
}

TEST(UnRep, QuotientOnOrderThreeSeeds) {
  for (const auto& s : all_permutations(3)) {
    const RepAssignment un = build_un_rep_from_sn(build_sn_rep(permutation_magic(s)));
    EXPECT_TRUE(check_presentation(un_plus_relations(3), un).passed());
  }
}

TEST(UnRep, PerturbedStarRelationBreaksBarUnitarity) {
  RepAssignment sn = build_sn_rep(random_block_magic(3, 2));
  const Matrix q12 = sn.image(q_gen(3, 1, 2));
  ASSERT_FALSE(q12.is_zero());
  sn.set(q_gen(3, 1, 2), q12 * CycScalar(3, 2));
  EXPECT_FALSE(check_presentation(sn_plus_relations(3), sn).passed());
  const VerificationReport r = check_presentation(un_plus_relations(3), build_un_rep_from_sn(sn));
  bool bar_failed = false;
  for (const auto& item : r.items) {
    if (item.label.rfind("un.ub", 0) == 0 && !item.pass) bar_failed = true;
  }
  EXPECT_TRUE(bar_failed);
}

}  // namespace
}  // namespace anyon
