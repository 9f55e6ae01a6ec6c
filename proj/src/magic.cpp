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

#include "anyon/magic.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace anyon {

BlockMatrix::BlockMatrix(int n, std::size_t d)
    : n(n), d(d), blocks(static_cast<std::size_t>(n * n), Matrix(n, d, d)) {
  if (n < 1) throw std::invalid_argument("block matrix needs N >= 1");
}

const Matrix& BlockMatrix::at(int i, int j) const {
  return blocks.at(static_cast<std::size_t>(zmod(i, n) * n + zmod(j, n)));
}

Matrix& BlockMatrix::at(int i, int j) {
  return blocks.at(static_cast<std::size_t>(zmod(i, n) * n + zmod(j, n)));
}

Matrix BlockMatrix::assemble() const {
  Matrix out(n, n * d, n * d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Matrix& b = at(i, j);
      for (std::size_t r = 0; r < d; ++r) {
        for (const auto& e : b.row(r)) out.set(i * d + r, j * d + e.col, e.value);
      }
    }
  }
  return out;
}

namespace {

void record(VerificationReport& report, const std::string& label, const Matrix& residual,
            Mode mode) {
  if (mode.is_exact()) {
    const bool zero = residual.is_zero();
    report.add_exact(label, zero, zero ? 0.0 : residual.max_abs());
  } else {
    report.add_approx(label, residual.max_abs());
  }
}

std::string ij(const char* head, int i, int j) {
  return std::string(head) + "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]";
}

/// out_{ij} = (1/N) sum_{r,s} w^{sign (ir - sj)} in_{rs}.
BlockMatrix fourier(const BlockMatrix& in, int sign) {
  const int n = in.n;
  BlockMatrix out(n, in.d);
  const Rational inv_n(1, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix acc(n, in.d, in.d);
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          const Matrix& b = in.at(r, s);
          if (b.is_zero()) continue;
          acc += b * CycScalar::omega_power(n, sign * (static_cast<long long>(i) * r -
                                                       static_cast<long long>(s) * j));
        }
      }
      acc *= CycScalar(n, inv_n);
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

Matrix pad(const Matrix& m, int n, std::size_t d) {
  if (m.order() != n) throw std::invalid_argument("seed projection has a different N");
  Matrix out(n, d, d);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) out.set(r, e.col, e.value);
  }
  return out;
}

void check_seed_projections(int n, const Matrix& p, const Matrix& q) {
  if (n < 4) throw std::invalid_argument("paper_magic_unitary needs N >= 4");
  if (!p.is_square() || !q.is_square()) throw DimensionMismatch("seed blocks must be square");
  if (!is_projection(p) || !is_projection(q)) {
    throw std::invalid_argument("seed blocks must be projections");
  }
}

}  // namespace

bool is_projection(const Matrix& m) {
  return m.is_square() && m * m == m && adjoint(m) == m;
}

VerificationReport validate_magic(const MagicUnitary& u, Mode mode) {
  VerificationReport report;
  report.subject = "magic";
  report.mode = mode;
  const int n = u.n;
  const Matrix id = Matrix::identity(n, u.d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Matrix& b = u.at(i, j);
      if (b.rows() != u.d || b.cols() != u.d) throw DimensionMismatch("magic block shape");
      record(report, ij("magic.square", i, j), b * b - b, mode);
      record(report, ij("magic.selfadj", i, j), adjoint(b) - b, mode);
    }
  }
  for (int k = 0; k < n; ++k) {
    Matrix row(n, u.d, u.d);
    Matrix col(n, u.d, u.d);
    for (int l = 0; l < n; ++l) {
      row += u.at(k, l);
      col += u.at(l, k);
    }
    record(report, "magic.rowsum[i=" + std::to_string(k) + "]", row - id, mode);
    record(report, "magic.colsum[j=" + std::to_string(k) + "]", col - id, mode);
  }
  report.sort_items();
  return report;
}

TwistedMatrix magic_to_twisted(const MagicUnitary& u) { return TwistedMatrix(fourier(u, 1)); }

MagicUnitary twisted_to_magic(const TwistedMatrix& a) { return MagicUnitary(fourier(a, -1)); }

RepAssignment twisted_assignment(const TwistedMatrix& a) {
  RepAssignment rep{GradedSpace::trivial(a.n, a.d), {}, "twisted"};
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) rep.set(a_gen(a.n, i, j), a.at(i, j));
  }
  return rep;
}

MagicUnitary paper_magic_unitary(int n, const Matrix& p, const Matrix& q) {
  check_seed_projections(n, p, q);
  const std::size_t d = std::max<std::size_t>({p.rows(), q.rows(), 1});
  const Matrix id = Matrix::identity(n, d);
  const Matrix pp = pad(p, n, d);
  const Matrix qq = pad(q, n, d);
  MagicUnitary u(n, d);
  u.at(0, 0) = pp;
  u.at(1, 1) = pp;
  u.at(0, 1) = id - pp;
  u.at(1, 0) = id - pp;
  u.at(2, 2) = qq;
  u.at(3, 3) = qq;
  u.at(2, 3) = id - qq;
  u.at(3, 2) = id - qq;
  for (int k = 4; k < n; ++k) u.at(k, k) = id;
  return u;
}

TwistedMatrix paper_twisted_closed_form(int n, const Matrix& p, const Matrix& q) {
  check_seed_projections(n, p, q);
  const std::size_t d = std::max<std::size_t>({p.rows(), q.rows(), 1});
  const Matrix id = Matrix::identity(n, d);
  const Matrix pm = pad(p, n, d) - id;
  const Matrix qm = pad(q, n, d) - id;
  const CycScalar one(n, 1);
  TwistedMatrix a(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CycScalar f = (one - CycScalar::omega_power(n, -j)) *
                          (one - CycScalar::omega_power(n, i)) * Rational(1, n);
      Matrix b = (pm + qm * CycScalar::omega_power(n, 2LL * (i - j))) * f;
      if (i == j) b += id;
      a.at(i, j) = std::move(b);
    }
  }
  return a;
}

Matrix paper_seed_p(int n) {
  Matrix p(n, 4, 4);
  p.set(0, 0, CycScalar(n, 1));
  return p;
}

Matrix paper_seed_q(int n) {
  Matrix q(n, 4, 4);
  const CycScalar h(n, Rational(1, 2));
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) q.set(r, c, h);
  }
  return q;
}

MagicUnitary permutation_magic(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(sigma.size());
  std::iota(expect.begin(), expect.end(), 0);
  if (n < 1 || sorted != expect) throw std::invalid_argument("not a permutation");
  MagicUnitary u(n, 1);
  for (int i = 0; i < n; ++i) u.at(i, sigma[static_cast<std::size_t>(i)]) = Matrix::identity(n, 1);
  return u;
}

MagicUnitary random_block_magic(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random block seed needs N >= 2");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return rng() % bound; };
  const Matrix id = Matrix::identity(n, 2);
  MagicUnitary base(n, 2);
  for (int k = 0; k + 1 < n; k += 2) {
    const long long m = 2 + static_cast<long long>(draw(6));
    const long long l = 1 + static_cast<long long>(draw(static_cast<std::uint64_t>(m - 1)));
    const long long a = m * m - l * l;
    const long long b = 2 * m * l;
    const long long c2 = (m * m + l * l) * (m * m + l * l);
    const Matrix p = Matrix::from_rationals(
        n, {{Rational(a * a, c2), Rational(a * b, c2)}, {Rational(a * b, c2), Rational(b * b, c2)}});
    base.at(k, k) = p;
    base.at(k + 1, k + 1) = p;
    base.at(k, k + 1) = id - p;
    base.at(k + 1, k) = id - p;
  }
  if (n % 2 == 1) base.at(n - 1, n - 1) = id;
  auto shuffle = [&] {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = perm.size() - 1; k > 0; --k) {
      std::swap(perm[k], perm[static_cast<std::size_t>(draw(k + 1))]);
    }
    return perm;
  };
  const std::vector<int> rows = shuffle();
  const std::vector<int> cols = shuffle();
  MagicUnitary u(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      u.at(i, j) = base.at(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
    }
  }
  return u;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace anyon
