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

// Random exact data for property tests.

#include <ostream>
#include <random>

#include "anyon/graded.hpp"
#include "anyon/matrix.hpp"

namespace anyon {

inline void PrintTo(const Matrix& m, std::ostream* os) { *os << "\n" << m.to_string(); }
inline void PrintTo(const CycScalar& a, std::ostream* os) { *os << a.to_string(); }

}  // namespace anyon

namespace anyon::testing_support {

inline CycScalar random_scalar(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), pw(0, 11);
  CycScalar s(n);
  for (int t = 0; t < 2; ++t) {
    s += CycScalar::omega_power(n, pw(rng)) * Rational(num(rng), den(rng));
  }
  return s;
}

inline Matrix random_matrix(int n, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(n, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_scalar(n, rng));
  }
  return m;
}

inline GradedSpace random_graded_space(int n, std::size_t dim, std::mt19937_64& rng) {
  std::vector<int> d(dim);
  for (auto& x : d) x = static_cast<int>(rng() % static_cast<unsigned>(n));
  return GradedSpace(n, std::move(d));
}

/// Random operator supported on the entries (r, c) with l_r - l_c = t.
inline Matrix random_homogeneous(const GradedSpace& s, int t, std::mt19937_64& rng) {
  const int n = s.order;
  Matrix m(n, s.dim(), s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < s.dim(); ++c) {
      if (zmod(s.degrees[r] - s.degrees[c] - t, n) == 0) m.set(r, c, random_scalar(n, rng));
    }
  }
  return m;
}

}  // namespace anyon::testing_support
