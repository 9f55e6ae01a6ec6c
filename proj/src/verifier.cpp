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

#include "anyon/verifier.hpp"

#include <algorithm>
#include <random>
#include <tuple>
#include <type_traits>

#include <Eigen/Dense>

#include "anyon/relation_eval.hpp"

namespace anyon {

std::string family_name(Family f) { return f == Family::sn ? "sn" : "un"; }
std::string family_letter(Family f) { return f == Family::sn ? "q" : "u"; }

Presentation family_presentation(Family f, int n) {
  return f == Family::sn ? sn_plus_relations(n) : un_plus_relations(n);
}

namespace {

GeneratorSymbol gen(Family f, int n, int i, int j) {
  return f == Family::sn ? q_gen(n, i, j) : u_gen(n, i, j);
}

std::string ij(const std::string& head, int i, int j) {
  return head + "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]";
}

/// rows x cols array of operators on one graded space.
template <class B>
struct Fam {
  using Op = typename B::Op;
  int rows = 0;
  int cols = 0;
  GradedSpace space;
  std::vector<Op> ops;

  const Op& at(int i, int j) const { return ops[static_cast<std::size_t>(i * cols + j)]; }
};

template <class B>
Fam<B> lift_family(const B& b, const RepAssignment& rep, Family f) {
  const int n = rep.space.order;
  Fam<B> out{n, n, rep.space, {}};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.ops.push_back(b.lift(rep.image(gen(f, n, i, j))));
  }
  return out;
}

template <class B>
Fam<B> lift_row(const B& b, const RepAssignment& xn) {
  const int n = xn.space.order;
  Fam<B> out{1, n, xn.space, {}};
  for (int i = 0; i < n; ++i) out.ops.push_back(b.lift(xn.image(P_gen(n, i))));
  return out;
}

/// C_ij = sum_k j1(X_ik) j2(Y_kj) on X (x) Y.
template <class B>
Fam<B> compose(const B& b, const Fam<B>& x, const Fam<B>& y) {
  if (x.cols != y.rows) throw DimensionMismatch("compose: inner sizes differ");
  Fam<B> out{x.rows, y.cols, GradedSpace::tensor(x.space, y.space), {}};
  const std::size_t dim = out.space.dim();
  std::vector<typename B::Op> j1s(x.ops.size(), b.zero(0));
  std::vector<typename B::Op> j2s(y.ops.size(), b.zero(0));
  parallel_for(x.ops.size(), [&](std::size_t k) { j1s[k] = b.j1(x.ops[k], y.space); });
  parallel_for(y.ops.size(), [&](std::size_t k) { j2s[k] = b.j2(y.ops[k], x.space, y.space); });
  out.ops.assign(static_cast<std::size_t>(out.rows * out.cols), b.zero(0));
  const CycScalar one(b.order, 1);
  parallel_for(out.ops.size(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / out.cols;
    const int j = static_cast<int>(idx) % out.cols;
    typename B::Op acc = b.zero(dim);
    for (int k = 0; k < x.cols; ++k) {
      b.axpy(acc, one,
             b.mul(j1s[static_cast<std::size_t>(i * x.cols + k)],
                   j2s[static_cast<std::size_t>(k * y.cols + j)]));
    }
    out.ops[idx] = std::move(acc);
  });
  return out;
}

template <class B>
OpAssignment<B> family_assignment(const B& b, const Fam<B>& fam, Family f) {
  std::map<GeneratorSymbol, typename B::Op> imgs;
  for (int i = 0; i < fam.rows; ++i) {
    for (int j = 0; j < fam.cols; ++j) imgs.emplace(gen(f, fam.space.order, i, j), fam.at(i, j));
  }
  return OpAssignment<B>(b, fam.space, std::move(imgs));
}

template <class B>
typename B::Op sub(const B& b, typename B::Op a, const typename B::Op& c) {
  b.axpy(a, CycScalar(b.order, -1), c);
  return a;
}

VerificationReport make_report(std::string subject, Mode mode, const std::string& seed) {
  VerificationReport r;
  r.subject = std::move(subject);
  r.mode = mode;
  r.seed = seed;
  return r;
}

void record_unitary(VerificationReport& r, const std::string& label, const Matrix& m, Mode mode) {
  const UnitaryCheck u = mat_is_unitary(m, mode);
  if (mode.is_exact()) r.add_exact(label, u.unitary, u.residual);
  else r.add_approx(label, u.residual);
}

}  // namespace

RepAssignment comult_images(const RepAssignment& rep, Family f) {
  const ExactBackend b{rep.space.order};
  const auto g = lift_family(b, rep, f);
  const auto d = compose(b, g, g);
  RepAssignment out{d.space, {}, rep.provenance + "/comult"};
  for (int i = 0; i < d.rows; ++i) {
    for (int j = 0; j < d.cols; ++j) out.set(gen(f, d.space.order, i, j), d.at(i, j));
  }
  return out;
}

VerificationReport check_comult_welldefined(const RepAssignment& rep, Family f, Mode mode) {
  const int n = rep.space.order;
  VerificationReport r = make_report("comult/" + family_name(f), mode, rep.provenance);
  const Presentation pres = family_presentation(f, n);
  with_backend(n, mode, [&](const auto& b) {
    const auto g = lift_family(b, rep, f);
    const auto d = compose(b, g, g);
    const auto a = family_assignment(b, d, f);
    check_relations(b, pres, a, r);
    check_grading(b, pres, a, r);
  });
  r.sort_items();
  return r;
}

VerificationReport check_coassociativity(const RepAssignment& rep, Family f, Mode mode) {
  const int n = rep.space.order;
  VerificationReport r = make_report("coassoc/" + family_name(f), mode, rep.provenance);
  with_backend(n, mode, [&](const auto& b) {
    using B = std::decay_t<decltype(b)>;
    using Op = typename B::Op;
    const GradedSpace& l = rep.space;
    const GradedSpace ll = GradedSpace::tensor(l, l);
    const auto g = lift_family(b, rep, f);
    const auto d = compose(b, g, g);
    const auto left = compose(b, d, g);
    const auto right = compose(b, g, d);
    const std::size_t nn = static_cast<std::size_t>(n * n);
    std::vector<Op> j1s(nn, b.zero(0)), j2s(nn, b.zero(0)), j3s(nn, b.zero(0));
    parallel_for(nn, [&](std::size_t k) {
      j1s[k] = b.j1(g.ops[k], ll);
      j2s[k] = b.j1(b.j2(g.ops[k], l, l), l);
      j3s[k] = b.j2(g.ops[k], ll, l);
    });
    const CycScalar one(n, 1);
    std::vector<VerificationReport> parts(nn);
    parallel_for(nn, [&](std::size_t idx) {
      const int i = static_cast<int>(idx) / n;
      const int j = static_cast<int>(idx) % n;
      Op three = b.zero(left.space.dim());
      for (int k = 0; k < n; ++k) {
        for (int m = 0; m < n; ++m) {
          b.axpy(three, one,
                 b.mul(b.mul(j1s[static_cast<std::size_t>(i * n + k)],
                             j2s[static_cast<std::size_t>(k * n + m)]),
                       j3s[static_cast<std::size_t>(m * n + j)]));
        }
      }
      parts[idx].mode = mode;
      b.record(parts[idx], ij("coassoc.left", i, j), sub(b, left.at(i, j), three));
      b.record(parts[idx], ij("coassoc.right", i, j), sub(b, right.at(i, j), three));
    });
    for (const auto& p : parts) r.merge(p, "");
  });
  r.sort_items();
  return r;
}

Matrix braided_commutator(const Matrix& x, int deg_x, const GradedSpace& xs, const Matrix& y,
                          int deg_y, const GradedSpace& ys) {
  const Matrix a = embed_j1(x, ys);
  const Matrix c = embed_j2(y, xs, ys);
  return a * c - c * a * CycScalar::omega_power(xs.order, static_cast<long long>(deg_x) * deg_y);
}

VerificationReport check_braided_commutation(const RepAssignment& rep, Mode mode) {
  const int n = rep.space.order;
  VerificationReport r = make_report("braided-commutation", mode, rep.provenance);
  std::vector<std::pair<GeneratorSymbol, const Matrix*>> gens;
  for (const auto& [g, m] : rep.images) {
    if (g.degree) gens.emplace_back(g, &m);
  }
  with_backend(n, mode, [&](const auto& b) {
    using Op = typename std::decay_t<decltype(b)>::Op;
    std::vector<Op> j1s(gens.size(), b.zero(0)), j2s(gens.size(), b.zero(0));
    parallel_for(gens.size(), [&](std::size_t k) {
      const Op x = b.lift(*gens[k].second);
      j1s[k] = b.j1(x, rep.space);
      j2s[k] = b.j2(x, rep.space, rep.space);
    });
    std::vector<VerificationReport> parts(gens.size() * gens.size());
    parallel_for(parts.size(), [&](std::size_t idx) {
      const std::size_t a = idx / gens.size();
      const std::size_t c = idx % gens.size();
      const long long phase =
          static_cast<long long>(*gens[a].first.degree) * *gens[c].first.degree;
      Op res = b.mul(j1s[a], j2s[c]);
      b.axpy(res, -CycScalar::omega_power(n, phase), b.mul(j2s[c], j1s[a]));
      parts[idx].mode = mode;
      b.record(parts[idx],
               "braid[" + gens[a].first.to_string() + "|" + gens[c].first.to_string() + "]", res);
    });
    for (const auto& p : parts) r.merge(p, "");
  });
  r.sort_items();
  return r;
}

RepAssignment action_images(const RepAssignment& xn, const RepAssignment& sn) {
  const int n = sn.space.order;
  if (xn.space.order != n) throw std::invalid_argument("action: mixed N");
  const ExactBackend b{n};
  const auto eta = compose(b, lift_row(b, xn), lift_family(b, sn, Family::sn));
  RepAssignment out{eta.space, {}, sn.provenance + "/action"};
  for (int j = 0; j < n; ++j) out.set(P_gen(n, j), eta.at(0, j));
  return out;
}

VerificationReport check_action(const RepAssignment& xn, const RepAssignment& sn, Mode mode) {
  const int n = sn.space.order;
  if (xn.space.order != n) throw std::invalid_argument("action: mixed N");
  VerificationReport r = make_report("action", mode, sn.provenance);
  const Presentation pres = xn_relations(n);
  with_backend(n, mode, [&](const auto& b) {
    using B = std::decay_t<decltype(b)>;
    const auto p = lift_row(b, xn);
    const auto g = lift_family(b, sn, Family::sn);
    const auto eta = compose(b, p, g);
    std::map<GeneratorSymbol, typename B::Op> imgs;
    for (int j = 0; j < n; ++j) imgs.emplace(P_gen(n, j), eta.at(0, j));
    const OpAssignment<B> a(b, eta.space, std::move(imgs));
    check_relations(b, pres, a, r);
    check_grading(b, pres, a, r);
    const auto left = compose(b, eta, g);
    const auto right = compose(b, p, compose(b, g, g));
    for (int j = 0; j < n; ++j) {
      b.record(r, "action.coassoc[j=" + std::to_string(j) + "]",
               sub(b, left.at(0, j), right.at(0, j)));
    }
  });
  r.sort_items();
  return r;
}

RepAssignment extract_coefficients(const RepAssignment& eta, const RepAssignment& xn,
                                   const GradedSpace& l_space) {
  const int n = xn.space.order;
  const std::size_t m = xn.space.dim();
  const std::size_t dl = l_space.dim();
  if (m != static_cast<std::size_t>(n)) {
    throw InconsistentSystem("coefficient extraction needs dim C(X_N) = N");
  }
  if (eta.space != GradedSpace::tensor(xn.space, l_space)) {
    throw InconsistentSystem("action images do not act on C^N (x) L");
  }
  // M[r, i] = P_i[r, 0]; the first column of sum_i P_i (x) a_i reads M a.
  Matrix col(n, m, m);
  for (int i = 0; i < n; ++i) {
    const Matrix& p = xn.image(P_gen(n, i));
    for (std::size_t r = 0; r < m; ++r) col.set(r, static_cast<std::size_t>(i), p.at(r, 0));
  }
  Matrix inv(n, m, m);
  try {
    inv = inverse(col);
  } catch (const std::domain_error&) {
    throw InconsistentSystem("P_i columns at the first basis vector are dependent");
  }
  const long long l0 = xn.space.degrees[0];
  RepAssignment out{l_space, {}, eta.provenance + "/extract"};
  for (int j = 0; j < n; ++j) {
    const Matrix& e = eta.image(P_gen(n, j));
    std::vector<Matrix> blocks;
    for (std::size_t r = 0; r < m; ++r) {
      Matrix blk(n, dl, dl);
      for (std::size_t b = 0; b < dl; ++b) {
        for (const auto& ent : e.row(r * dl + b)) {
          if (ent.col < dl) blk.set(b, ent.col, ent.value);
        }
      }
      blocks.push_back(std::move(blk));
    }
    for (int i = 0; i < n; ++i) {
      Matrix a(n, dl, dl);
      for (std::size_t r = 0; r < m; ++r) {
        const CycScalar c = inv.at(static_cast<std::size_t>(i), r);
        if (!c.is_zero()) a += blocks[r] * c;
      }
      Matrix untwisted(n, dl, dl);
      for (std::size_t b = 0; b < dl; ++b) {
        for (const auto& ent : a.row(b)) {
          const long long shift = l_space.degrees[ent.col] - l_space.degrees[b];
          untwisted.set(b, ent.col, ent.value * CycScalar::omega_power(n, -l0 * shift));
        }
      }
      out.set(q_gen(n, i, j), std::move(untwisted));
    }
  }
  const RepAssignment back = action_images(xn, out);
  for (int j = 0; j < n; ++j) {
    if (!(back.image(P_gen(n, j)) == eta.image(P_gen(n, j)))) {
      throw InconsistentSystem("action image of P_" + std::to_string(j) +
                               " is not of the form sum_i j1(P_i) j2(a_ij)");
    }
  }
  return out;
}

namespace {

/// Incremental rank of flattened operators by Gram-Schmidt.
class SpanTracker {
 public:
  explicit SpanTracker(double tol) : tol_(tol) {}

  bool add(const ApproxMatrix& m) { return add(flatten(m)); }

  bool add(Eigen::VectorXcd v) {
    const double scale = std::max(1.0, v.norm());
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis_) v -= q * q.dot(v);
    }
    if (v.norm() <= tol_ * scale) return false;
    basis_.push_back(v / v.norm());
    return true;
  }

  static Eigen::VectorXcd flatten(const ApproxMatrix& m) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(m.rows() * m.cols());
    for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
      for (ApproxMatrix::InnerIterator it(m, r); it; ++it) v[r * m.cols() + it.col()] = it.value();
    }
    return v;
  }

  /// [flatten(a); flatten(b)].
  static Eigen::VectorXcd stack(const ApproxMatrix& a, const ApproxMatrix& b) {
    Eigen::VectorXcd v(a.rows() * a.cols() + b.rows() * b.cols());
    v << flatten(a), flatten(b);
    return v;
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  double tol_;
  std::vector<Eigen::VectorXcd> basis_;
};

}  // namespace

VerificationReport check_podles_span(const RepAssignment& rep, Family f, int word_length,
                                     double tol) {
  const int n = rep.space.order;
  VerificationReport r = make_report("podles/" + family_name(f), Mode::approx(tol), rep.provenance);
  const ApproxBackend b{n, tol};
  const auto g = lift_family(b, rep, f);
  const std::size_t dl = rep.space.dim();
  // Basis of the span of words; entry w is basis[parent[w]] times letter[w].
  std::vector<ApproxMatrix> basis{approx_identity(dl)};
  std::vector<std::size_t> parent{0}, letter{0};
  std::vector<int> length{0};
  SpanTracker words(tol);
  words.add(basis.front());
  std::vector<std::size_t> frontier{0};
  for (int len = 1; len <= word_length; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t w : frontier) {
      for (std::size_t k = 0; k < g.ops.size(); ++k) {
        ApproxMatrix cand = b.mul(basis[w], g.ops[k]);
        if (!words.add(cand)) continue;
        basis.push_back(std::move(cand));
        parent.push_back(w);
        letter.push_back(k);
        length.push_back(len);
        next.push_back(basis.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  const double pairs = static_cast<double>(basis.size() * basis.size());
  const double vec = static_cast<double>(dl * dl) * static_cast<double>(dl * dl);
  const double work = pairs * std::min(pairs, vec) * vec;
  const std::string scope = "proxy, word length " + std::to_string(word_length) + ", basis " +
                            std::to_string(basis.size());
  if (work > 2e9) {
    r.notes.push_back("podles proxy not evaluated: " + scope + " exceeds the size cap");
    return r;
  }
  const auto d = compose(b, g, g);
  std::vector<ApproxMatrix> deltas{approx_identity(dl * dl)};
  for (std::size_t w = 1; w < basis.size(); ++w) deltas.push_back(b.mul(deltas[parent[w]], d.ops[letter[w]]));
  // Delta descends to the image algebra iff x -> Delta(x) respects every
  // linear relation among the words, i.e. [x; Delta(x)] has the rank of x.
  SpanTracker graph(tol);
  for (std::size_t w = 0; w < basis.size(); ++w) graph.add(SpanTracker::stack(basis[w], deltas[w]));
  bool descends = graph.rank() == basis.size();
  for (std::size_t w = 0; w < basis.size() && descends; ++w) {
    if (length[w] == word_length) continue;
    for (std::size_t k = 0; k < g.ops.size() && descends; ++k) {
      if (graph.add(SpanTracker::stack(b.mul(basis[w], g.ops[k]), b.mul(deltas[w], d.ops[k])))) {
        descends = false;
      }
    }
  }
  if (!descends) {
    r.notes.push_back("podles proxy not applicable: " + scope +
                      ", Delta does not descend to the image algebra");
    return r;
  }
  std::vector<ApproxMatrix> j1s, j2s;
  for (const auto& x : basis) {
    j1s.push_back(b.j1(x, rep.space));
    j2s.push_back(b.j2(x, rep.space, rep.space));
  }
  SpanTracker lhs(tol), rhs(tol);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      lhs.add(b.mul(deltas[a], j2s[c]));
      rhs.add(b.mul(j1s[a], j2s[c]));
    }
  }
  r.add_flag("podles.proxy.rank", lhs.rank() == rhs.rank(),
             scope + ": rank Delta(x) j2(y) = " + std::to_string(lhs.rank()) +
                 ", rank j1(x) j2(y) = " + std::to_string(rhs.rank()));
  r.notes.push_back("podles check is a finite-dimensional proxy");
  return r;
}

namespace {

void add_witness_items(CommutativityResult& c) {
  if (!c.witness) return;
  const PhaseWitness& w = *c.witness;
  c.report.add_flag("witness.phase[q_1,2*q_2,3=w*q_2,3*q_1,2]", w.identity_holds);
  c.report.add_flag("witness.nonzero[q_1,2*q_2,3]", w.product_norm > 1e-6,
                    "operator norm " + std::to_string(w.product_norm));
  c.report.add_flag("witness.noncommutative", !c.commutative_exact,
                    "max commutator operator norm " + std::to_string(c.max_commutator_norm));
}

}  // namespace

CommutativityResult check_commutativity(const RepAssignment& sn, bool require_witness) {
  const int n = sn.space.order;
  CommutativityResult out;
  out.report = make_report("commutativity", Mode::exact(), sn.provenance);
  const std::vector<Matrix> g = generator_matrix(sn, "q");
  std::vector<double> norms(g.size() * g.size(), 0.0);
  std::vector<char> zero(g.size() * g.size(), 1);
  parallel_for(norms.size(), [&](std::size_t idx) {
    const std::size_t a = idx / g.size();
    const std::size_t c = idx % g.size();
    if (c <= a) return;
    const Matrix comm = g[a] * g[c] - g[c] * g[a];
    if (comm.is_zero()) return;
    zero[idx] = 0;
    norms[idx] = operator_norm(to_approx(comm));
  });
  out.commutative_exact = std::all_of(zero.begin(), zero.end(), [](char z) { return z != 0; });
  out.max_commutator_norm = *std::max_element(norms.begin(), norms.end());
  const std::string norm_note =
      "max commutator operator norm " + std::to_string(out.max_commutator_norm);
  auto q = [&](int i, int j) -> const Matrix& { return sn.image(q_gen(n, i, j)); };
  if (n == 3) {
    out.report.add_exact("comm.all", out.commutative_exact, out.max_commutator_norm, norm_note);
    const int pairs[4][4] = {{1, 1, 2, 1}, {2, 1, 2, 2}, {1, 1, 1, 2}, {1, 2, 2, 2}};
    for (const auto& p : pairs) {
      const Matrix& x = q(p[0], p[1]);
      const Matrix& y = q(p[2], p[3]);
      for (const auto& [a, c, name] :
           {std::tuple{&x, &y, q_gen(n, p[0], p[1]).to_string() + "*" + q_gen(n, p[2], p[3]).to_string()},
            std::tuple{&y, &x, q_gen(n, p[2], p[3]).to_string() + "*" + q_gen(n, p[0], p[1]).to_string()}}) {
        const Matrix prod = *a * *c;
        out.report.add_exact("vanish[" + name + "]", prod.is_zero(), prod.max_abs());
      }
    }
  } else {
    out.report.notes.push_back(norm_note);
  }
  if (n == 4) {
    const Matrix ab = q(1, 2) * q(2, 3);
    const Matrix ba = q(2, 3) * q(1, 2);
    PhaseWitness w;
    w.identity_holds = (ab - ba * CycScalar::omega_power(n, 1)).is_zero();
    w.product_norm = operator_norm(to_approx(ab));
    w.reverse_norm = operator_norm(to_approx(ba));
    out.witness = w;
    if (require_witness) {
      add_witness_items(out);
    } else {
      out.report.notes.push_back(std::string("phase witness ") +
                                 (w.identity_holds ? "holds" : "fails") + ", product norm " +
                                 std::to_string(w.product_norm));
    }
  }
  return out;
}

VerificationReport check_fundamental(const RepAssignment& boso, Family f, Mode mode) {
  const int n = boso.space.order;
  VerificationReport r = make_report("fundamental/" + family_name(f), mode, boso.provenance);
  const Matrix& z = boso.image(z_gen());
  const Matrix zinv = adjoint(z);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Matrix& x = boso.image(gen(f, n, i, j));
      const Matrix res = z * x * zinv - x * CycScalar::omega_power(n, j - i);
      if (mode.is_exact()) r.add_exact(ij("boso.exchange", i, j), res.is_zero(), res.max_abs());
      else r.add_approx(ij("boso.exchange", i, j), res.max_abs());
    }
  }
  const FundamentalRep t = fundamental_rep(boso, family_letter(f));
  record_unitary(r, "t.unitary", t.assemble(), mode);
  record_unitary(r, "z+t.unitary", z_plus_t(boso, t), mode);
  r.sort_items();
  return r;
}

namespace {

Eigen::VectorXcd vec_kron(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

}  // namespace

VerificationReport check_boso_comult(const RepAssignment& boso, Family f, Mode mode,
                                     std::size_t probe_threshold) {
  const int n = boso.space.order;
  VerificationReport r = make_report("boso-comult/" + family_name(f), mode, boso.provenance);
  const Presentation pres =
      f == Family::sn ? boso_sn_relations(n) : boso_un_relations(n);
  const std::size_t h = boso.space.dim();
  const std::size_t nn = static_cast<std::size_t>(n * n);
  with_backend(n, mode, [&](const auto& b) {
    using B = std::decay_t<decltype(b)>;
    using Op = typename B::Op;
    const Op z = b.lift(boso.image(z_gen()));
    std::vector<Op> zp{b.identity(h)}, dzp;
    for (int k = 1; k < n; ++k) zp.push_back(b.mul(zp.back(), z));
    std::vector<Op> g;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) g.push_back(b.lift(boso.image(gen(f, n, i, j))));
    }
    auto G = [&](int i, int j) -> const Op& { return g[static_cast<std::size_t>(i * n + j)]; };
    const Op dz = b.kron(z, z);
    dzp.push_back(b.identity(h * h));
    for (int k = 1; k < n; ++k) dzp.push_back(b.mul(dzp.back(), dz));
    const CycScalar one(n, 1);
    std::vector<Op> dg(nn, b.zero(0));
    parallel_for(nn, [&](std::size_t idx) {
      const int i = static_cast<int>(idx) / n;
      const int j = static_cast<int>(idx) % n;
      Op acc = b.zero(h * h);
      for (int k = 0; k < n; ++k) {
        b.axpy(acc, one, b.kron(G(i, k), b.mul(zp[static_cast<std::size_t>(zmod(k - i, n))], G(k, j))));
      }
      dg[idx] = std::move(acc);
    });
    auto DG = [&](int i, int j) -> const Op& { return dg[static_cast<std::size_t>(i * n + j)]; };

    std::map<GeneratorSymbol, Op> imgs;
    imgs.emplace(z_gen(), dz);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) imgs.emplace(gen(f, n, i, j), DG(i, j));
    }
    const OpAssignment<B> a(b, GradedSpace::trivial(n, h * h), std::move(imgs));
    VerificationReport rel;
    rel.mode = mode;
    check_relations(b, pres, a, rel);
    r.merge(rel, "welldef");

    std::vector<VerificationReport> parts(nn);
    parallel_for(nn, [&](std::size_t idx) {
      const int i = static_cast<int>(idx) / n;
      const int j = static_cast<int>(idx) % n;
      // Delta(t_ij) = Delta(z)^i Delta(g_ij) against sum_k t_ik (x) t_kj.
      Op rhs = b.zero(h * h);
      for (int k = 0; k < n; ++k) {
        b.axpy(rhs, one,
               b.kron(b.mul(zp[static_cast<std::size_t>(i)], G(i, k)),
                      b.mul(zp[static_cast<std::size_t>(k)], G(k, j))));
      }
      parts[idx].mode = mode;
      b.record(parts[idx], ij("comult.t", i, j),
               sub(b, b.mul(dzp[static_cast<std::size_t>(i)], DG(i, j)), rhs));
    });
    for (const auto& p : parts) r.merge(p, "");

    if (h * h * h <= probe_threshold) {
      b.record(r, "coassoc.z", sub(b, b.kron(dz, z), b.kron(z, dz)));
      std::vector<VerificationReport> cparts(nn);
      parallel_for(nn, [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / n;
        const int j = static_cast<int>(idx) % n;
        Op left = b.zero(h * h * h);
        Op right = b.zero(h * h * h);
        for (int k = 0; k < n; ++k) {
          const auto e = static_cast<std::size_t>(zmod(k - i, n));
          b.axpy(left, one, b.kron(DG(i, k), b.mul(zp[e], G(k, j))));
          b.axpy(right, one, b.kron(G(i, k), b.mul(dzp[e], DG(k, j))));
        }
        cparts[idx].mode = mode;
        b.record(cparts[idx], ij("coassoc", i, j), sub(b, left, right));
      });
      for (const auto& p : cparts) r.merge(p, "");
    } else {
      // Random product vectors v1 (x) v2 (x) v3; both sides act leg-wise.
      auto ax = [&](const Op& m) {
        if constexpr (std::is_same_v<Op, Matrix>) return to_approx(m);
        else return m;
      };
      std::mt19937_64 rng(0x5eed);
      std::uniform_real_distribution<double> unif(-1.0, 1.0);
      auto random_vec = [&] {
        Eigen::VectorXcd v(static_cast<Eigen::Index>(h));
        for (auto& x : v) x = {unif(rng), unif(rng)};
        return v;
      };
      std::vector<ApproxMatrix> zpa, dzpa, ga, dga;
      for (const auto& m : zp) zpa.push_back(ax(m));
      for (const auto& m : dzp) dzpa.push_back(ax(m));
      for (const auto& m : g) ga.push_back(ax(m));
      for (const auto& m : dg) dga.push_back(ax(m));
      const int probes = 3;
      std::vector<double> worst(nn, 0.0);
      for (int p = 0; p < probes; ++p) {
        const Eigen::VectorXcd v1 = random_vec(), v2 = random_vec(), v3 = random_vec();
        const Eigen::VectorXcd v12 = vec_kron(v1, v2), v23 = vec_kron(v2, v3);
        parallel_for(nn, [&](std::size_t idx) {
          const int i = static_cast<int>(idx) / n;
          const int j = static_cast<int>(idx) % n;
          Eigen::VectorXcd diff = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(h * h * h));
          for (int k = 0; k < n; ++k) {
            const auto e = static_cast<std::size_t>(zmod(k - i, n));
            const std::size_t ik = static_cast<std::size_t>(i * n + k);
            const std::size_t kj = static_cast<std::size_t>(k * n + j);
            Eigen::VectorXcd l3 = zpa[e] * (ga[kj] * v3);
            diff += vec_kron(dga[ik] * v12, l3);
            Eigen::VectorXcd r23 = dzpa[e] * (dga[kj] * v23);
            diff -= vec_kron(ga[ik] * v1, r23);
          }
          worst[idx] = std::max(worst[idx], diff.cwiseAbs().maxCoeff());
        });
      }
      for (std::size_t idx = 0; idx < nn; ++idx) {
        r.add_approx(ij("coassoc", static_cast<int>(idx) / n, static_cast<int>(idx) % n),
                     worst[idx], "randomized: 3 product-vector probes");
      }
      r.notes.push_back("boso coassociativity probed with random product vectors");
    }
  });
  r.sort_items();
  return r;
}

}  // namespace anyon
