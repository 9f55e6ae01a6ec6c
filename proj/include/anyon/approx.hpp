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

// Floating-point projection of the exact operator algebra. Used for
// tolerance-mode checks and norms; never the source of truth.

#include <complex>

#include <Eigen/Sparse>

#include "anyon/graded.hpp"

namespace anyon {

using ApproxMatrix = Eigen::SparseMatrix<std::complex<double>, Eigen::RowMajor>;

ApproxMatrix to_approx(const Matrix& m);
ApproxMatrix approx_identity(std::size_t n);
ApproxMatrix approx_kron(const ApproxMatrix& a, const ApproxMatrix& b);
ApproxMatrix approx_embed_j1(const ApproxMatrix& x, const GradedSpace& y_space);
ApproxMatrix approx_embed_j2(const ApproxMatrix& y, const GradedSpace& x_space,
                             const GradedSpace& y_space);
double max_abs(const ApproxMatrix& m);
/// Largest singular value, by power iteration on A*A.
double operator_norm(const ApproxMatrix& m, int iterations = 200);

/// w^k as a complex double.
std::complex<double> omega_complex(int order, long long k);

}  // namespace anyon
