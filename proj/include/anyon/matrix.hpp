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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "anyon/cyclotomic.hpp"

namespace anyon {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix over Q(w_N) with row-major indexing.
///
/// Only nonzero entries are stored (each row keeps its entries sorted by
/// column); operator algebras built from clock, shift and magic-unitary
/// blocks are overwhelmingly sparse once tensored up. Value semantics.
class Matrix {
 public:
  struct Entry {
    std::uint32_t col;
    CycScalar value;
  };

  Matrix(int order, std::size_t rows, std::size_t cols);
  static Matrix identity(int order, std::size_t n);
  /// Row-major dense input of size rows * cols.
  static Matrix from_dense(int order, std::size_t rows, std::size_t cols,
                           std::span<const CycScalar> entries);
  /// Rational-entry convenience, mostly for tests and seeds.
  static Matrix from_rationals(int order,
                               const std::vector<std::vector<Rational>>& rows);

  int order() const { return order_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols_; }

  CycScalar at(std::size_t r, std::size_t c) const;
  /// Setting zero removes the entry.
  void set(std::size_t r, std::size_t c, CycScalar value);
  std::span<const Entry> row(std::size_t r) const { return rows_[r]; }

  std::size_t nnz() const;
  bool is_zero() const;
  /// Largest |entry| after evaluation at w = exp(2 pi i / N).
  double max_abs() const;

  std::vector<CycScalar> to_dense() const;

  Matrix& operator+=(const Matrix& b);
  Matrix& operator-=(const Matrix& b);
  Matrix& operator*=(const CycScalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const CycScalar& s) { return a *= s; }
  friend Matrix operator*(const CycScalar& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  void check_same_shape(const Matrix& b, const char* op) const;
  void axpy(const Matrix& b, bool subtract);

  int order_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
};

/// Conjugate transpose.
Matrix adjoint(const Matrix& a);
/// Kronecker product; row index of a is the slow index.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
/// Entrywise complex conjugate.
Matrix conjugate(const Matrix& a);
/// a^k for square a and k >= 0.
Matrix power(const Matrix& a, unsigned k);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Exact inverse by Gauss-Jordan elimination. Throws std::domain_error if
/// a is singular.
Matrix inverse(const Matrix& a);

/// Short aliases.
inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }
inline Matrix mat_add(const Matrix& a, const Matrix& b) { return a + b; }
inline Matrix mat_adjoint(const Matrix& a) { return adjoint(a); }
inline Matrix mat_scale(const Matrix& a, const CycScalar& s) { return a * s; }
inline Matrix mat_kron(const Matrix& a, const Matrix& b) { return kron(a, b); }

}  // namespace anyon
