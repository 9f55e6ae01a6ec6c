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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "anyon/rational.hpp"

namespace anyon {

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree
/// first. Computed by exact division of x^N - 1 by the cyclotomic
/// polynomials of the proper divisors of N.
std::vector<std::int64_t> cyclotomic_polynomial(int order);

/// Shared, immutable data for Q(w_N): the modulus and reduction tables.
/// Instances are interned and live for the whole program.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  std::span<const std::int64_t> modulus() const { return modulus_; }

  /// Power-basis coefficients of x^k mod Phi_N for 0 <= k < max(N, 2*deg-1).
  std::span<const std::int64_t> power(int k) const;

 private:
  explicit CyclotomicField(int order);

  int order_;
  int degree_;
  std::vector<std::int64_t> modulus_;
  int table_size_;
  std::vector<std::int64_t> powers_;  // table_size_ x degree_, row-major
};

/// Exact element of Q(w_N), w_N = exp(2 pi i / N), stored in the power
/// basis {1, w, ..., w^(deg Phi_N - 1)}.
class CycScalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 4>;

  /// Zero of Q(w_N).
  explicit CycScalar(int order);
  CycScalar(int order, const Rational& value);

  /// Reduces sum_k raw[k] w^k modulo Phi_N. raw may have any length.
  static CycScalar from_powers(int order, std::span<const Rational> raw);
  /// w^k for any integer k.
  static CycScalar omega_power(int order, std::int64_t k);
  /// Builds directly from canonical coefficients; size must equal deg Phi_N.
  static CycScalar from_coeffs(int order, Coeffs coeffs);

  int order() const { return field_->order(); }
  const CyclotomicField& field() const { return *field_; }
  const Coeffs& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value is a rational number.
  bool is_rational() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& b);
  CycScalar& operator-=(const CycScalar& b);
  CycScalar& operator*=(const CycScalar& b);
  CycScalar& operator*=(const Rational& r);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(CycScalar a, const Rational& r) { return a *= r; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);

  /// this += a * b without materializing the product.
  void add_product(const CycScalar& a, const CycScalar& b);

  /// Complex conjugate: w -> w^(N-1).
  CycScalar conj() const;
  /// Multiplicative inverse. Throws std::domain_error on zero.
  CycScalar inv() const;

  /// Double-precision evaluation at w = exp(2 pi i / N).
  std::complex<double> to_complex() const;
  double abs() const { return std::abs(to_complex()); }

  std::string to_string() const;

 private:
  CycScalar(const CyclotomicField* field, Coeffs coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}

  void check_order(const CycScalar& b) const;

  const CyclotomicField* field_;
  Coeffs coeffs_;
};

/// High-precision evaluation of a CycScalar as decimal strings.
struct DecimalComplex {
  std::string real;
  std::string imag;
  std::complex<double> value;
};

/// Evaluates at w = exp(2 pi i / N) with absolute error below 10^-digits in
/// each part. Requires digits >= 1.
DecimalComplex cyc_to_complex(const CycScalar& a, int digits);

}  // namespace anyon
