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

#include "anyon/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace anyon {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(int order, std::size_t rows, std::size_t cols)
    : order_(order), cols_(cols), rows_(rows) {
  CyclotomicField::get(order);  // validates order
}

Matrix Matrix::identity(int order, std::size_t n) {
  Matrix m(order, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.rows_[i].push_back({static_cast<std::uint32_t>(i), CycScalar(order, 1)});
  }
  return m;
}

Matrix Matrix::from_dense(int order, std::size_t rows, std::size_t cols,
                          std::span<const CycScalar> entries) {
  if (entries.size() != rows * cols) {
    throw DimensionMismatch("dense entry count does not match shape");
  }
  Matrix m(order, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const CycScalar& v = entries[r * cols + c];
      if (v.order() != order) throw std::invalid_argument("mixed scalar orders");
      if (!v.is_zero()) m.rows_[r].push_back({static_cast<std::uint32_t>(c), v});
    }
  }
  return m;
}

Matrix Matrix::from_rationals(int order,
                              const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(order, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged rational rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!rows[r][c].is_zero()) {
        m.rows_[r].push_back({static_cast<std::uint32_t>(c), CycScalar(order, rows[r][c])});
      }
    }
  }
  return m;
}

CycScalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols_) throw std::out_of_range("matrix index");
  const auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return CycScalar(order_);
}

void Matrix::set(std::size_t r, std::size_t c, CycScalar value) {
  if (r >= rows() || c >= cols_) throw std::out_of_range("matrix index");
  if (value.order() != order_) throw std::invalid_argument("mixed scalar orders");
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  const bool present = it != row.end() && it->col == c;
  if (value.is_zero()) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = std::move(value);
  } else {
    row.insert(it, {static_cast<std::uint32_t>(c), std::move(value)});
  }
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const auto& row) { return row.empty(); });
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& row : rows_) {
    for (const auto& e : row) m = std::max(m, e.value.abs());
  }
  return m;
}

std::vector<CycScalar> Matrix::to_dense() const {
  std::vector<CycScalar> out(rows() * cols_, CycScalar(order_));
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& e : rows_[r]) out[r * cols_ + e.col] = e.value;
  }
  return out;
}

void Matrix::check_same_shape(const Matrix& b, const char* op) const {
  if (rows() != b.rows() || cols_ != b.cols_) {
    throw DimensionMismatch(std::string(op) + ": " + shape(*this) + " vs " + shape(b));
  }
  if (order_ != b.order_) throw std::invalid_argument("mixed scalar orders");
}

void Matrix::axpy(const Matrix& b, bool subtract) {
  for (std::size_t r = 0; r < rows(); ++r) {
    const auto& rb = b.rows_[r];
    if (rb.empty()) continue;
    auto& ra = rows_[r];
    std::vector<Entry> merged;
    merged.reserve(ra.size() + rb.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ra.size() || j < rb.size()) {
      if (j == rb.size() || (i < ra.size() && ra[i].col < rb[j].col)) {
        merged.push_back(std::move(ra[i++]));
      } else if (i == ra.size() || rb[j].col < ra[i].col) {
        merged.push_back({rb[j].col, subtract ? -rb[j].value : rb[j].value});
        ++j;
      } else {
        CycScalar v = std::move(ra[i].value);
        if (subtract) v -= rb[j].value;
        else v += rb[j].value;
        if (!v.is_zero()) merged.push_back({ra[i].col, std::move(v)});
        ++i;
        ++j;
      }
    }
    ra = std::move(merged);
  }
}

Matrix& Matrix::operator+=(const Matrix& b) {
  check_same_shape(b, "add");
  axpy(b, false);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
  check_same_shape(b, "subtract");
  axpy(b, true);
  return *this;
}

Matrix& Matrix::operator*=(const CycScalar& s) {
  if (s.order() != order_) throw std::invalid_argument("mixed scalar orders");
  if (s.is_zero()) {
    for (auto& row : rows_) row.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (auto& row : rows_) {
    for (auto& e : row) e.value *= s;
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: " + shape(a) + " * " + shape(b));
  }
  if (a.order_ != b.order_) throw std::invalid_argument("mixed scalar orders");
  Matrix out(a.order_, a.rows(), b.cols());
  const CycScalar zero(a.order_);
  std::vector<CycScalar> acc(b.cols(), zero);
  std::vector<char> touched(b.cols(), 0);
  std::vector<std::uint32_t> cols;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    cols.clear();
    for (const auto& ea : a.rows_[r]) {
      for (const auto& eb : b.rows_[ea.col]) {
        if (!touched[eb.col]) {
          touched[eb.col] = 1;
          cols.push_back(eb.col);
        }
        acc[eb.col].add_product(ea.value, eb.value);
      }
    }
    std::sort(cols.begin(), cols.end());
    auto& row = out.rows_[r];
    for (auto c : cols) {
      if (!acc[c].is_zero()) row.push_back({c, acc[c]});
      acc[c] = zero;
      touched[c] = 0;
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.order_ != b.order_ || a.rows() != b.rows() || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto& ra = a.rows_[r];
    const auto& rb = b.rows_[r];
    if (ra.size() != rb.size()) return false;
    for (std::size_t i = 0; i < ra.size(); ++i) {
      if (ra[i].col != rb[i].col || !(ra[i].value == rb[i].value)) return false;
    }
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows(); ++r) {
    os << (r ? ",\n [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix adjoint(const Matrix& a) {
  Matrix out(a.order(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& e : a.row(r)) out.set(e.col, r, e.value.conj());
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.order(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& e : a.row(r)) out.set(e.col, r, e.value);
  }
  return out;
}

Matrix conjugate(const Matrix& a) {
  Matrix out(a.order(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& e : a.row(r)) out.set(r, e.col, e.value.conj());
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("mixed scalar orders");
  Matrix out(a.order(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    for (std::size_t rb = 0; rb < b.rows(); ++rb) {
      const std::size_t r = ra * b.rows() + rb;
      for (const auto& ea : a.row(ra)) {
        for (const auto& eb : b.row(rb)) {
          out.set(r, ea.col * b.cols() + eb.col, ea.value * eb.value);
        }
      }
    }
  }
  return out;
}

Matrix power(const Matrix& a, unsigned k) {
  if (!a.is_square()) throw DimensionMismatch("power of a non-square matrix");
  Matrix result = Matrix::identity(a.order(), a.rows());
  Matrix base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("mixed scalar orders");
  Matrix out(a.order(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& e : a.row(r)) out.set(r, e.col, e.value);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (const auto& e : b.row(r)) out.set(a.rows() + r, a.cols() + e.col, e.value);
  }
  return out;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const int order = a.order();
  std::vector<std::vector<CycScalar>> m(n);
  for (std::size_t r = 0; r < n; ++r) {
    m[r].assign(2 * n, CycScalar(order));
    for (const auto& e : a.row(r)) m[r][e.col] = e.value;
    m[r][n + r] = CycScalar(order, 1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) throw std::domain_error("inverse of a singular matrix");
    std::swap(m[p], m[c]);
    const CycScalar inv = m[c][c].inv();
    for (auto& v : m[c]) {
      if (!v.is_zero()) v *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const CycScalar f = m[r][c];
      for (std::size_t k = c; k < 2 * n; ++k) {
        if (!m[c][k].is_zero()) m[r][k] -= f * m[c][k];
      }
    }
  }
  Matrix out(order, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, m[r][n + c]);
  }
  return out;
}

}  // namespace anyon
