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

// Operator arithmetic shared by the exact and tolerance verification paths.
// Checks are written once against this interface:
//
//   Op identity(n) / zero(n)
//   Op lift(const Matrix&)
//   Op adjoint(const Op&), Op mul(a, b), Op kron(a, b)
//   void axpy(Op& acc, const CycScalar& c, const Op& x)   acc += c * x
//   Op j1(x, y_space), Op j2(y, x_space, y_space)
//   void record(report, label, const Op& residual)

#include <string>

#include "anyon/approx.hpp"
#include "anyon/matrix.hpp"
#include "anyon/report.hpp"

namespace anyon {

struct ExactBackend {
  using Op = Matrix;
  int order;

  Op identity(std::size_t n) const { return Matrix::identity(order, n); }
  Op zero(std::size_t n) const { return Matrix(order, n, n); }
  Op lift(const Matrix& m) const { return m; }
  Op adjoint(const Op& a) const { return anyon::adjoint(a); }
  Op mul(const Op& a, const Op& b) const { return a * b; }
  Op kron(const Op& a, const Op& b) const { return anyon::kron(a, b); }
  void axpy(Op& acc, const CycScalar& c, const Op& x) const {
    if (c.is_zero() || x.is_zero()) return;
    if (c.is_one()) acc += x;
    else acc += x * c;
  }
  Op j1(const Op& x, const GradedSpace& y) const { return embed_j1(x, y); }
  Op j2(const Op& y, const GradedSpace& x, const GradedSpace& ys) const {
    return embed_j2(y, x, ys);
  }
  bool is_zero(const Op& a) const { return a.is_zero(); }
  double magnitude(const Op& a) const { return a.max_abs(); }
  Degree degree(const GradedSpace& s, const Op& a) const { return degree_of(s, a); }
  std::size_t dim(const Op& a) const { return a.rows(); }
  void record(VerificationReport& report, std::string label, const Op& residual,
              std::string note = {}) const {
    const bool zero = residual.is_zero();
    report.add_exact(std::move(label), zero, zero ? 0.0 : residual.max_abs(), std::move(note));
  }
};

struct ApproxBackend {
  using Op = ApproxMatrix;
  int order;
  double eps = 1e-9;

  Op identity(std::size_t n) const { return approx_identity(n); }
  Op zero(std::size_t n) const {
    return Op(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  }
  Op lift(const Matrix& m) const { return to_approx(m); }
  Op adjoint(const Op& a) const { return Op(a.adjoint()); }
  Op mul(const Op& a, const Op& b) const { return Op((a * b).pruned()); }
  Op kron(const Op& a, const Op& b) const { return approx_kron(a, b); }
  void axpy(Op& acc, const CycScalar& c, const Op& x) const {
    if (c.is_zero() || x.nonZeros() == 0) return;
    acc += c.to_complex() * x;
  }
  Op j1(const Op& x, const GradedSpace& y) const { return approx_embed_j1(x, y); }
  Op j2(const Op& y, const GradedSpace& x, const GradedSpace& ys) const {
    return approx_embed_j2(y, x, ys);
  }
  bool is_zero(const Op& a) const { return max_abs(a) == 0.0; }
  double magnitude(const Op& a) const { return max_abs(a); }
  /// Entries below eps are treated as zero.
  Degree degree(const GradedSpace& s, const Op& a) const {
    Degree d;
    for (Eigen::Index r = 0; r < a.outerSize(); ++r) {
      for (Op::InnerIterator it(a, r); it; ++it) {
        if (std::abs(it.value()) < eps) continue;
        const int t = zmod(s.degrees[static_cast<std::size_t>(r)] -
                               s.degrees[static_cast<std::size_t>(it.col())],
                           s.order);
        if (d.kind == Degree::Kind::zero) d = {Degree::Kind::homogeneous, t};
        else if (d.value != t) return {Degree::Kind::inhomogeneous, 0};
      }
    }
    return d;
  }
  std::size_t dim(const Op& a) const { return static_cast<std::size_t>(a.rows()); }
  void record(VerificationReport& report, std::string label, const Op& residual,
              std::string note = {}) const {
    report.add_approx(std::move(label), max_abs(residual), std::move(note));
  }
};

/// Runs f(ExactBackend) or f(ApproxBackend) according to mode.
template <class F>
decltype(auto) with_backend(int order, Mode mode, F&& f) {
  if (mode.is_exact()) return f(ExactBackend{order});
  return f(ApproxBackend{order, mode.eps});
}

}  // namespace anyon
