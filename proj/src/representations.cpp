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

#include "anyon/representations.hpp"

namespace anyon {

namespace {

GeneratorSymbol named(const std::string& name, int n, int i, int j) {
  return name == "u" ? u_gen(n, i, j) : q_gen(n, i, j);
}

}  // namespace

RepAssignment twist_to_sn(const TwistedMatrix& a, std::string provenance) {
  const int n = a.n;
  std::vector<int> labels;
  for (int k = 0; k < n; ++k) labels.insert(labels.end(), a.d, k);
  RepAssignment rep{GradedSpace(n, std::move(labels)), {}, std::move(provenance)};
  const Matrix v1 = clock_matrix(n);
  const Matrix v2 = shift_matrix(n);
  for (int i = 0; i < n; ++i) {
    const Matrix v1i = power(v1, static_cast<unsigned>(zmod(-i, n)));
    for (int j = 0; j < n; ++j) {
      const Matrix leg = v1i * power(v2, static_cast<unsigned>(zmod(j - i, n)));
      rep.set(q_gen(n, i, j), kron(leg, a.at(i, j)));
    }
  }
  return rep;
}

RepAssignment build_sn_rep(const MagicUnitary& u, std::string provenance) {
  if (!validate_magic(u).passed()) throw std::invalid_argument("seed is not a magic unitary");
  return twist_to_sn(magic_to_twisted(u), std::move(provenance));
}

RepAssignment build_boso_rep(const RepAssignment& base) {
  const int n = base.space.order;
  std::vector<int> leg(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) leg[static_cast<std::size_t>(m)] = m;
  RepAssignment rep{GradedSpace::tensor(GradedSpace(n, leg), base.space), {},
                    base.provenance + "/boso"};
  const Matrix v1 = clock_matrix(n);
  rep.set(z_gen(), kron(shift_matrix(n), Matrix::identity(n, base.space.dim())));
  for (const auto& [g, m] : base.images) {
    if (!g.degree) throw std::invalid_argument("bosonization needs graded generators");
    rep.set(g, kron(power(v1, static_cast<unsigned>(zmod(-*g.degree, n))), m));
  }
  return rep;
}

const Matrix& FundamentalRep::at(int i, int j) const {
  return t.at(static_cast<std::size_t>(zmod(i, n) * n + zmod(j, n)));
}

Matrix FundamentalRep::assemble() const {
  Matrix out(n, n * dim, n * dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Matrix& b = at(i, j);
      for (std::size_t r = 0; r < dim; ++r) {
        for (const auto& e : b.row(r)) out.set(i * dim + r, j * dim + e.col, e.value);
      }
    }
  }
  return out;
}

FundamentalRep fundamental_rep(const RepAssignment& boso, const std::string& name) {
  const int n = boso.space.order;
  FundamentalRep f{n, boso.space.dim(), {}};
  const Matrix& z = boso.image(z_gen());
  Matrix zi = Matrix::identity(n, f.dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) f.t.push_back(zi * boso.image(named(name, n, i, j)));
    zi = zi * z;
  }
  return f;
}

Matrix z_plus_t(const RepAssignment& boso, const FundamentalRep& t) {
  return direct_sum(boso.image(z_gen()), t.assemble());
}

RepAssignment build_xn_rep(int n) {
  if (n < 2) throw std::invalid_argument("X_N needs N >= 2");
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) labels[static_cast<std::size_t>(s)] = s;
  RepAssignment rep{GradedSpace(n, std::move(labels)), {}, "xn"};
  const Matrix v2 = shift_matrix(n);
  const CycScalar inv_n(n, Rational(1, n));
  Matrix vj = Matrix::identity(n, static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    rep.set(P_gen(n, j), vj * inv_n);
    vj = vj * v2;
  }
  return rep;
}

std::vector<Matrix> xn_point_projections(const RepAssignment& xn) {
  const int n = xn.space.order;
  std::vector<Matrix> p;
  for (int i = 0; i < n; ++i) {
    Matrix acc(n, xn.space.dim(), xn.space.dim());
    for (int j = 0; j < n; ++j) {
      acc += xn.image(P_gen(n, j)) * CycScalar::omega_power(n, -static_cast<long long>(i) * j);
    }
    p.push_back(std::move(acc));
  }
  return p;
}

RepAssignment build_un_rep_from_sn(const RepAssignment& sn) {
  const int n = sn.space.order;
  RepAssignment rep{sn.space, {}, sn.provenance + "/un"};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rep.set(u_gen(n, i, j), sn.image(q_gen(n, i, j)));
  }
  return rep;
}

std::vector<Matrix> generator_matrix(const RepAssignment& rep, const std::string& name) {
  const int n = rep.space.order;
  std::vector<Matrix> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back(rep.image(named(name, n, i, j)));
  }
  return out;
}

}  // namespace anyon
