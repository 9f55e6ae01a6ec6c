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
#include <span>
#include <string>
#include <vector>

#include "anyon/matrix.hpp"

namespace anyon {

/// Verification arithmetic: exact identities in Q(w_N), or complex doubles
/// compared against a tolerance.
struct Mode {
  enum class Kind { exact, approx };
  Kind kind = Kind::exact;
  double eps = 1e-9;

  static Mode exact() { return {}; }
  static Mode approx(double eps) { return {Kind::approx, eps}; }
  bool is_exact() const { return kind == Kind::exact; }
  std::string name() const { return is_exact() ? "exact" : "approx"; }
};

/// Reduces k into {0, ..., n-1}.
constexpr int zmod(long long k, int n) {
  long long r = k % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// A Z_N-graded Hilbert space given by the degree label of each basis
/// vector. The implementing unitary of t in Z_N is diag(w^(t * degrees)).
struct GradedSpace {
  int order = 1;
  std::vector<int> degrees;

  GradedSpace() = default;
  /// Labels are reduced mod order.
  GradedSpace(int order, std::vector<int> degrees);
  /// All labels zero.
  static GradedSpace trivial(int order, std::size_t dim);
  /// Left factor is the slow index; degrees add mod N.
  static GradedSpace tensor(const GradedSpace& x, const GradedSpace& y);

  std::size_t dim() const { return degrees.size(); }
  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;
};

struct GradedOperator {
  GradedSpace space;
  Matrix mat;

  GradedOperator(GradedSpace space, Matrix mat);
};

/// Result of degree_of. The zero operator is homogeneous of every degree.
struct Degree {
  enum class Kind { zero, homogeneous, inhomogeneous };
  Kind kind = Kind::zero;
  int value = 0;

  bool is_homogeneous() const { return kind == Kind::homogeneous; }
  bool is_zero() const { return kind == Kind::zero; }
  bool is_inhomogeneous() const { return kind == Kind::inhomogeneous; }
  /// True if an operator with this degree may be declared of degree t.
  bool admits(int t, int order) const {
    return kind == Kind::zero || (kind == Kind::homogeneous && value == zmod(t, order));
  }
  std::string to_string() const;
};

Degree degree_of(const GradedSpace& space, const Matrix& op);
inline Degree degree_of(const GradedOperator& op) { return degree_of(op.space, op.mat); }

/// diag(w^(t * degrees)).
Matrix grading_unitary(const GradedSpace& space, int t = 1);

/// diag(1, w, ..., w^(N-1)).
Matrix clock_matrix(int n);
/// e_k -> e_{k+1 mod N}.
Matrix shift_matrix(int n);
/// Entries w^(-ij) / N.
Matrix omega_matrix(int n);
/// Entries w^(ij).
Matrix omega_inverse(int n);

enum class BraidDirection { forward, backward };

/// forward: c_{X,Y}: X (x) Y -> Y (x) X, e_a (x) e_b -> w^(l_a l_b) e_b (x) e_a.
/// backward: c_{Y,X}: Y (x) X -> X (x) Y with the inverse phase.
Matrix braiding(const GradedSpace& x, const GradedSpace& y, BraidDirection direction);

/// j1(x) = x (x) id_Y on X (x) Y.
Matrix embed_j1(const Matrix& x, const GradedSpace& y_space);
/// j2(y) = c_{Y,X} (y (x) id_X) c_{X,Y} on X (x) Y, computed entrywise:
/// entry ((a,b'),(a,b)) = y[b',b] * w^(l_a (l_b - l_b')).
Matrix embed_j2(const Matrix& y, const GradedSpace& x_space, const GradedSpace& y_space);

GradedOperator embed_j1(const GradedOperator& x, const GradedSpace& y_space);
GradedOperator embed_j2(const GradedOperator& y, const GradedSpace& x_space);

struct UnitaryCheck {
  bool unitary = false;
  /// Max-entry residual of A*A - I and AA* - I; 0 when exact and unitary.
  double residual = 0.0;
};

UnitaryCheck mat_is_unitary(const Matrix& a, Mode mode = Mode::exact());

/// Rank of the operators viewed as vectors, from singular values above
/// tol * max(1, largest singular value).
std::size_t span_dimension(std::span<const Matrix> ops, double tol = 1e-9);
/// Rank by exact Gaussian elimination over Q(w_N).
std::size_t span_dimension_exact(std::span<const Matrix> ops);

}  // namespace anyon
