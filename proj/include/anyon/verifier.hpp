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

#include <optional>
#include <stdexcept>
#include <string>

#include "anyon/presentation.hpp"
#include "anyon/representations.hpp"

namespace anyon {

/// Which matrix of generators is being comultiplied: q (S+) or u (U+).
enum class Family { sn, un };

std::string family_name(Family f);
/// Generator letter of the family, "q" or "u".
std::string family_letter(Family f);
Presentation family_presentation(Family f, int n);

/// Delta(g_ij) = sum_k j1(g_ik) j2(g_kj) on L (x) L.
RepAssignment comult_images(const RepAssignment& rep, Family f);

/// The family presentation and grading on the comultiplied images.
VerificationReport check_comult_welldefined(const RepAssignment& rep, Family f,
                                            Mode mode = Mode::exact());

/// (Delta (x) id) Delta and (id (x) Delta) Delta on generators, each compared
/// with sum_{k,l} j1(g_ik) j2(g_kl) j3(g_lj) on L (x) L (x) L.
VerificationReport check_coassociativity(const RepAssignment& rep, Family f,
                                         Mode mode = Mode::exact());

/// j1(x) j2(y) - w^{deg x deg y} j2(y) j1(x) for x on X and y on Y.
Matrix braided_commutator(const Matrix& x, int deg_x, const GradedSpace& xs, const Matrix& y,
                          int deg_y, const GradedSpace& ys);

/// The commutation law for every ordered pair of graded generators.
VerificationReport check_braided_commutation(const RepAssignment& rep, Mode mode = Mode::exact());

/// eta(P_j) = sum_i j1(P_i) j2(q_ij) on C^N (x) L.
RepAssignment action_images(const RepAssignment& xn, const RepAssignment& sn);

/// X_N relations and grading on the action images, and
/// (eta (x) id) eta = (id (x) Delta) eta on every P_j.
VerificationReport check_action(const RepAssignment& xn, const RepAssignment& sn,
                                Mode mode = Mode::exact());

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves eta(P_j) = sum_i j1(P_i) j2(a_ij) for the a_ij on l_space, using
/// the column of each P_i at the first basis vector. The images are
/// returned as q_ij. Throws InconsistentSystem if eta is not of that form.
RepAssignment extract_coefficients(const RepAssignment& eta, const RepAssignment& xn,
                                   const GradedSpace& l_space);

/// Finite-dimensional proxy of the density conditions: the rank of
/// {Delta(x) j2(y)} against the rank of {j1(x) j2(y)} for x, y in a basis
/// of the algebra spanned by generator words of length <= word_length.
/// The rank item is emitted only when Delta descends to that algebra
/// (x -> Delta(x) respects every linear relation among the words) and the
/// work fits the size cap; otherwise the report carries a note instead.
VerificationReport check_podles_span(const RepAssignment& rep, Family f, int word_length = 3,
                                     double tol = 1e-9);

struct PhaseWitness {
  /// q12 q23 = w q23 q12 exactly.
  bool identity_holds = false;
  double product_norm = 0.0;
  double reverse_norm = 0.0;
};

struct CommutativityResult {
  double max_commutator_norm = 0.0;
  bool commutative_exact = false;
  std::optional<PhaseWitness> witness;
  VerificationReport report;
};

/// Commutators of all generator pairs. At N = 3 the report also carries the
/// vanishing products q11 q21, q21 q22, q11 q12, q12 q22 (both orders). At
/// N = 4 the phase witness is computed; require_witness turns it into
/// report items (phase identity, nonzero product, noncommutativity).
CommutativityResult check_commutativity(const RepAssignment& sn, bool require_witness = false);

/// Exchange relation, unitarity of t and of z (+) t.
VerificationReport check_fundamental(const RepAssignment& boso, Family f,
                                     Mode mode = Mode::exact());

/// Delta(z) = z (x) z and Delta(g_ij) = sum_k g_ik (x) z^{k-i} g_kj on
/// H (x) H: bosonized relations, coassociativity and
/// Delta(t_ij) = sum_k t_ik (x) t_kj. Coassociativity switches to random
/// product-vector probes when H (x) H (x) H exceeds probe_threshold.
VerificationReport check_boso_comult(const RepAssignment& boso, Family f,
                                     Mode mode = Mode::exact(),
                                     std::size_t probe_threshold = 20000);

}  // namespace anyon
