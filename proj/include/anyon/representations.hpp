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

#include <string>
#include <vector>

#include "anyon/magic.hpp"
#include "anyon/presentation.hpp"

namespace anyon {

/// q_{ij} = (v1^{-i} v2^{j-i}) (x) a_{ij} on C^N (x) C^d, with v1 = clock,
/// v2 = shift, and degree label k on the k-th clock basis vector. No
/// validation of a.
RepAssignment twist_to_sn(const TwistedMatrix& a, std::string provenance = "twisted");

/// twist_to_sn(magic_to_twisted(u)). Throws std::invalid_argument if u is
/// not an exact magic unitary.
RepAssignment build_sn_rep(const MagicUnitary& u, std::string provenance = "magic");

/// Bosonization on C^N (x) L with labels m + deg_L:
///   z -> v2 (x) 1,  g -> v1^{-deg g} (x) pi(g)
/// for every image of a generator with a declared degree. Throws
/// std::invalid_argument if some image lacks a degree.
RepAssignment build_boso_rep(const RepAssignment& base);

/// t_{ij} = z^i g_{ij} for g = q (or u) in a bosonized assignment.
struct FundamentalRep {
  int n = 2;
  std::size_t dim = 0;
  std::vector<Matrix> t;

  const Matrix& at(int i, int j) const;
  /// The N dim x N dim block matrix.
  Matrix assemble() const;
};

FundamentalRep fundamental_rep(const RepAssignment& boso, const std::string& name = "q");
/// z (+) t, block diagonal.
Matrix z_plus_t(const RepAssignment& boso, const FundamentalRep& t);

/// P_j = (1/N) v2^j on C^N with labels s: the Fourier picture of
/// P_j = (1/N) sum_i w^{ij} p_i.
RepAssignment build_xn_rep(int n);
/// p_i = sum_j w^{-ij} P_j in the same basis.
std::vector<Matrix> xn_point_projections(const RepAssignment& xn);

/// u_{ij} := q_{ij}.
RepAssignment build_un_rep_from_sn(const RepAssignment& sn);

/// The N x N images of g_{ij} (name "q" or "u").
std::vector<Matrix> generator_matrix(const RepAssignment& rep, const std::string& name);

}  // namespace anyon
