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

#include "anyon/graded.hpp"

#include <algorithm>

#include <Eigen/Dense>

#include "anyon/approx.hpp"

namespace anyon {

GradedSpace::GradedSpace(int order, std::vector<int> degrees)
    : order(order), degrees(std::move(degrees)) {
  if (order < 1) throw std::invalid_argument("grading order must be >= 1");
  for (int& d : this->degrees) d = zmod(d, order);
}

GradedSpace GradedSpace::trivial(int order, std::size_t dim) {
  return GradedSpace(order, std::vector<int>(dim, 0));
}

GradedSpace GradedSpace::tensor(const GradedSpace& x, const GradedSpace& y) {
  if (x.order != y.order) throw std::invalid_argument("tensor of spaces with different N");
  std::vector<int> d;
  d.reserve(x.dim() * y.dim());
  for (int a : x.degrees) {
    for (int b : y.degrees) d.push_back(zmod(a + b, x.order));
  }
  return GradedSpace(x.order, std::move(d));
}

GradedOperator::GradedOperator(GradedSpace s, Matrix m)
    : space(std::move(s)), mat(std::move(m)) {
  if (mat.rows() != space.dim() || mat.cols() != space.dim()) {
    throw DimensionMismatch("graded operator shape does not match its space");
  }
}

std::string Degree::to_string() const {
  switch (kind) {
    case Kind::zero: return "zero";
    case Kind::homogeneous: return std::to_string(value);
    case Kind::inhomogeneous: return "inhomogeneous";
  }
  return "?";
}

Degree degree_of(const GradedSpace& space, const Matrix& op) {
  if (op.rows() != space.dim() || op.cols() != space.dim()) {
    throw DimensionMismatch("degree_of: operator shape does not match space");
  }
  Degree d;
  for (std::size_t r = 0; r < op.rows(); ++r) {
    for (const auto& e : op.row(r)) {
      int t = zmod(space.degrees[r] - space.degrees[e.col], space.order);
      if (d.kind == Degree::Kind::zero) {
        d = {Degree::Kind::homogeneous, t};
      } else if (d.value != t) {
        return {Degree::Kind::inhomogeneous, 0};
      }
    }
  }
  return d;
}

Matrix grading_unitary(const GradedSpace& space, int t) {
  Matrix u(space.order, space.dim(), space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) {
    u.set(i, i, CycScalar::omega_power(space.order, static_cast<long long>(t) * space.degrees[i]));
  }
  return u;
}

Matrix clock_matrix(int n) {
  Matrix m(n, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) m.set(k, k, CycScalar::omega_power(n, k));
  return m;
}

Matrix shift_matrix(int n) {
  Matrix m(n, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) m.set(zmod(k + 1, n), k, CycScalar(n, 1));
  return m;
}

Matrix omega_matrix(int n) {
  Matrix m(n, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const Rational inv_n(1, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.set(i, j, CycScalar::omega_power(n, -i * j) * inv_n);
  }
  return m;
}

Matrix omega_inverse(int n) {
  Matrix m(n, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.set(i, j, CycScalar::omega_power(n, i * j));
  }
  return m;
}

Matrix braiding(const GradedSpace& x, const GradedSpace& y, BraidDirection direction) {
  if (x.order != y.order) throw std::invalid_argument("braiding spaces with different N");
  const int n = x.order;
  const std::size_t dx = x.dim();
  const std::size_t dy = y.dim();
  Matrix c(n, dx * dy, dx * dy);
  for (std::size_t a = 0; a < dx; ++a) {
    for (std::size_t b = 0; b < dy; ++b) {
      const long long phase = static_cast<long long>(x.degrees[a]) * y.degrees[b];
      if (direction == BraidDirection::forward) {
        c.set(b * dx + a, a * dy + b, CycScalar::omega_power(n, phase));
      } else {
        c.set(a * dy + b, b * dx + a, CycScalar::omega_power(n, -phase));
      }
    }
  }
  return c;
}

Matrix embed_j1(const Matrix& x, const GradedSpace& y_space) {
  return kron(x, Matrix::identity(x.order(), y_space.dim()));
}

Matrix embed_j2(const Matrix& y, const GradedSpace& x_space, const GradedSpace& y_space) {
  if (y.rows() != y_space.dim() || !y.is_square()) {
    throw DimensionMismatch("embed_j2: operator does not act on the given space");
  }
  if (x_space.order != y_space.order || y.order() != x_space.order) {
    throw std::invalid_argument("embed_j2: mixed N");
  }
  const int n = x_space.order;
  const std::size_t dy = y_space.dim();
  Matrix out(n, x_space.dim() * dy, x_space.dim() * dy);
  for (std::size_t a = 0; a < x_space.dim(); ++a) {
    const long long la = x_space.degrees[a];
    for (std::size_t b = 0; b < dy; ++b) {
      for (const auto& e : y.row(b)) {
        const long long shift = y_space.degrees[e.col] - y_space.degrees[b];
        CycScalar v = e.value;
        if (zmod(la * shift, n) != 0) v *= CycScalar::omega_power(n, la * shift);
        out.set(a * dy + b, a * dy + e.col, std::move(v));
      }
    }
  }
  return out;
}

GradedOperator embed_j1(const GradedOperator& x, const GradedSpace& y_space) {
  return {GradedSpace::tensor(x.space, y_space), embed_j1(x.mat, y_space)};
}

GradedOperator embed_j2(const GradedOperator& y, const GradedSpace& x_space) {
  return {GradedSpace::tensor(x_space, y.space), embed_j2(y.mat, x_space, y.space)};
}

UnitaryCheck mat_is_unitary(const Matrix& a, Mode mode) {
  if (!a.is_square()) throw DimensionMismatch("unitarity of a non-square matrix");
  if (mode.is_exact()) {
    const Matrix id = Matrix::identity(a.order(), a.rows());
    const Matrix adj = adjoint(a);
    Matrix r1 = adj * a - id;
    Matrix r2 = a * adj - id;
    if (r1.is_zero() && r2.is_zero()) return {true, 0.0};
    return {false, std::max(r1.max_abs(), r2.max_abs())};
  }
  const ApproxMatrix x = to_approx(a);
  const ApproxMatrix id = approx_identity(a.rows());
  const ApproxMatrix adj = x.adjoint();
  ApproxMatrix r1 = ApproxMatrix(adj * x) - id;
  ApproxMatrix r2 = ApproxMatrix(x * adj) - id;
  const double res = std::max(max_abs(r1), max_abs(r2));
  return {res < mode.eps, res};
}

std::size_t span_dimension(std::span<const Matrix> ops, double tol) {
  if (ops.empty()) return 0;
  const std::size_t len = ops.front().rows() * ops.front().cols();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(ops.size()),
                                              static_cast<Eigen::Index>(len));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const Matrix& op = ops[k];
    if (op.rows() * op.cols() != len || op.cols() != ops.front().cols()) {
      throw DimensionMismatch("span_dimension: operators of different shapes");
    }
    for (std::size_t r = 0; r < op.rows(); ++r) {
      for (const auto& e : op.row(r)) {
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r * op.cols() + e.col)) =
            e.value.to_complex();
      }
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd& ev = svd.singularValues();
  const double top = ev.size() ? ev.maxCoeff() : 0.0;
  const double cut = tol * std::max(1.0, top);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > cut) ++rank;
  }
  return rank;
}

std::size_t span_dimension_exact(std::span<const Matrix> ops) {
  if (ops.empty()) return 0;
  const std::size_t len = ops.front().rows() * ops.front().cols();
  // Echelon rows normalized to 1 at their pivot.
  std::vector<std::pair<std::size_t, std::vector<CycScalar>>> basis;
  for (const Matrix& op : ops) {
    if (op.rows() * op.cols() != len) {
      throw DimensionMismatch("span_dimension_exact: operators of different shapes");
    }
    std::vector<CycScalar> v = op.to_dense();
    for (const auto& [pivot, row] : basis) {
      if (v[pivot].is_zero()) continue;
      const CycScalar f = v[pivot];
      for (std::size_t i = 0; i < len; ++i) {
        if (!row[i].is_zero()) v[i] -= f * row[i];
      }
    }
    auto it = std::find_if(v.begin(), v.end(), [](const CycScalar& s) { return !s.is_zero(); });
    if (it == v.end()) continue;
    const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    const CycScalar inv = v[pivot].inv();
    for (auto& s : v) {
      if (!s.is_zero()) s *= inv;
    }
    // Keep earlier rows reduced at the new pivot.
    for (auto& [p, row] : basis) {
      if (row[pivot].is_zero()) continue;
      const CycScalar f = row[pivot];
      for (std::size_t i = 0; i < len; ++i) {
        if (!v[i].is_zero()) row[i] -= f * v[i];
      }
    }
    basis.emplace_back(pivot, std::move(v));
  }
  return basis.size();
}

}  // namespace anyon
