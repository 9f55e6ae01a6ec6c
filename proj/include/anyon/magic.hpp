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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anyon/matrix.hpp"
#include "anyon/presentation.hpp"
#include "anyon/report.hpp"

namespace anyon {

/// N x N array of d x d blocks over Q(w_N), row-major.
struct BlockMatrix {
  int n = 2;
  std::size_t d = 1;
  std::vector<Matrix> blocks;

  BlockMatrix(int n, std::size_t d);
  const Matrix& at(int i, int j) const;
  Matrix& at(int i, int j);
  /// The Nd x Nd matrix with block (i, j) at rows i*d.., cols j*d...
  Matrix assemble() const;
  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;
};

/// Candidate magic unitary u_{ij}; validity is checked, not assumed.
struct MagicUnitary : BlockMatrix {
  using BlockMatrix::BlockMatrix;
  explicit MagicUnitary(BlockMatrix b) : BlockMatrix(std::move(b)) {}
};

/// Omega^{-1} u Omega, meant to satisfy the untwisted relations.
struct TwistedMatrix : BlockMatrix {
  using BlockMatrix::BlockMatrix;
  explicit TwistedMatrix(BlockMatrix b) : BlockMatrix(std::move(b)) {}
};

/// Projection, self-adjointness and row/column sum identities.
VerificationReport validate_magic(const MagicUnitary& u, Mode mode = Mode::exact());

/// a_{ij} = (1/N) sum_{r,s} w^{ir - sj} u_{rs}.
TwistedMatrix magic_to_twisted(const MagicUnitary& u);
/// u_{ij} = (1/N) sum_{r,s} w^{-ir + sj} a_{rs}.
MagicUnitary twisted_to_magic(const TwistedMatrix& a);

/// Assignment a_{ij} -> block (i, j) on an ungraded C^d.
RepAssignment twisted_assignment(const TwistedMatrix& a);

/// (p, 1-p; 1-p, p) + (q, 1-q; 1-q, q) + I_{N-4}, with p and q zero-padded
/// to d = max(dim p, dim q, 1). Throws std::invalid_argument for N < 4 or a
/// non-projection.
MagicUnitary paper_magic_unitary(int n, const Matrix& p, const Matrix& q);
/// (1/N)(1 - w^{-j})(1 - w^i)((p - 1) + w^{2(i-j)}(q - 1)) + delta_{ij} 1,
/// with the same padding.
TwistedMatrix paper_twisted_closed_form(int n, const Matrix& p, const Matrix& q);

/// The standard example in M_4: p = E_11 and q = (1/2)[[1,1],[1,1]] in the
/// top-left corner.
Matrix paper_seed_p(int n);
Matrix paper_seed_q(int n);

/// u_{i, sigma(i)} = 1 (d = 1). Throws std::invalid_argument if sigma is not
/// a permutation of {0, ..., n-1}.
MagicUnitary permutation_magic(const std::vector<int>& sigma);

/// Exact magic unitary with 2 x 2 blocks: paired rows carry rational
/// projections (p, 1-p; 1-p, p) built from Pythagorean triples, and rows
/// and columns are then permuted at random.
MagicUnitary random_block_magic(int n, std::uint64_t seed);

/// All permutations of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

/// True if m*m = m = m* exactly.
bool is_projection(const Matrix& m);

}  // namespace anyon
