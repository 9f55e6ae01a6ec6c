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

#include "anyon/approx.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace anyon {

namespace {

using Triplet = Eigen::Triplet<std::complex<double>>;

ApproxMatrix from_triplets(std::size_t rows, std::size_t cols,
                           const std::vector<Triplet>& triplets) {
  ApproxMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

}  // namespace

std::complex<double> omega_complex(int order, long long k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * zmod(k, order) / order);
}

ApproxMatrix to_approx(const Matrix& m) {
  std::vector<Triplet> t;
  t.reserve(m.nnz());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) {
      t.emplace_back(static_cast<int>(r), static_cast<int>(e.col), e.value.to_complex());
    }
  }
  return from_triplets(m.rows(), m.cols(), t);
}

ApproxMatrix approx_identity(std::size_t n) {
  ApproxMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m.setIdentity();
  return m;
}

ApproxMatrix approx_kron(const ApproxMatrix& a, const ApproxMatrix& b) {
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (Eigen::Index ra = 0; ra < a.outerSize(); ++ra) {
    for (ApproxMatrix::InnerIterator ia(a, ra); ia; ++ia) {
      for (Eigen::Index rb = 0; rb < b.outerSize(); ++rb) {
        for (ApproxMatrix::InnerIterator ib(b, rb); ib; ++ib) {
          t.emplace_back(static_cast<int>(ra * b.rows() + rb),
                         static_cast<int>(ia.col() * b.cols() + ib.col()),
                         ia.value() * ib.value());
        }
      }
    }
  }
  return from_triplets(static_cast<std::size_t>(a.rows() * b.rows()),
                       static_cast<std::size_t>(a.cols() * b.cols()), t);
}

ApproxMatrix approx_embed_j1(const ApproxMatrix& x, const GradedSpace& y_space) {
  return approx_kron(x, approx_identity(y_space.dim()));
}

ApproxMatrix approx_embed_j2(const ApproxMatrix& y, const GradedSpace& x_space,
                             const GradedSpace& y_space) {
  const auto dy = static_cast<Eigen::Index>(y_space.dim());
  const int n = x_space.order;
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(y.nonZeros()) * x_space.dim());
  for (std::size_t a = 0; a < x_space.dim(); ++a) {
    const long long la = x_space.degrees[a];
    for (Eigen::Index rb = 0; rb < y.outerSize(); ++rb) {
      for (ApproxMatrix::InnerIterator it(y, rb); it; ++it) {
        const long long shift = y_space.degrees[static_cast<std::size_t>(it.col())] -
                                y_space.degrees[static_cast<std::size_t>(rb)];
        t.emplace_back(static_cast<int>(static_cast<Eigen::Index>(a) * dy + rb),
                       static_cast<int>(static_cast<Eigen::Index>(a) * dy + it.col()),
                       it.value() * omega_complex(n, la * shift));
      }
    }
  }
  return from_triplets(x_space.dim() * y_space.dim(), x_space.dim() * y_space.dim(), t);
}

double max_abs(const ApproxMatrix& m) {
  double best = 0.0;
  for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
    for (ApproxMatrix::InnerIterator it(m, r); it; ++it) {
      best = std::max(best, std::abs(it.value()));
    }
  }
  return best;
}

double operator_norm(const ApproxMatrix& m, int iterations) {
  if (m.nonZeros() == 0) return 0.0;
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(m.cols());
  // Deterministic, non-symmetric start vector.
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = {1.0 + 0.01 * i, 0.003 * i};
  v.normalize();
  ApproxMatrix adj = m.adjoint();
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Eigen::VectorXcd w = adj * (m * v);
    double nrm = w.norm();
    if (nrm == 0.0) return 0.0;
    lambda = nrm;
    v = w / nrm;
  }
  return std::sqrt(lambda);
}

}  // namespace anyon
