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

#include "anyon/presentation.hpp"

#include <set>
#include <sstream>

#include "anyon/relation_eval.hpp"

namespace anyon {

std::string GeneratorSymbol::to_string() const {
  std::string s = name;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    s += (k == 0 ? "_" : ",");
    s += std::to_string(indices[k]);
  }
  return s;
}

Polynomial Polynomial::scalar(const CycScalar& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms.push_back({c, {}});
  return p;
}

Polynomial Polynomial::letter(int order, const GeneratorSymbol& g, bool star) {
  Polynomial p;
  p.terms.push_back({CycScalar(order, 1), {Letter{g, star}}});
  return p;
}

Polynomial& Polynomial::add(CycScalar coeff, std::vector<Letter> word) {
  if (!coeff.is_zero()) terms.push_back({std::move(coeff), std::move(word)});
  return *this;
}

std::optional<Degree> Polynomial::degree(int order) const {
  Degree d;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    long long sum = 0;
    for (const auto& l : t.word) {
      if (!l.gen.degree) return std::nullopt;
      sum += l.star ? -*l.gen.degree : *l.gen.degree;
    }
    const int v = zmod(sum, order);
    if (d.kind == Degree::Kind::zero) d = {Degree::Kind::homogeneous, v};
    else if (d.value != v) d = {Degree::Kind::inhomogeneous, 0};
  }
  return d;
}

const Relation* Presentation::find(const std::string& label) const {
  for (const auto& r : relations) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& r : relations) {
    if (!seen.insert(r.label).second) throw std::logic_error("duplicate relation label " + r.label);
    const auto dl = r.lhs.degree(order);
    const auto dr = r.rhs.degree(order);
    if (!dl || !dr) continue;
    if (dl->is_inhomogeneous() || dr->is_inhomogeneous()) {
      throw std::logic_error("relation " + r.label + " is not homogeneous");
    }
    if (dl->is_homogeneous() && dr->is_homogeneous() && dl->value != dr->value) {
      throw std::logic_error("relation " + r.label + " has sides of different degree");
    }
  }
}

const Matrix& RepAssignment::image(const GeneratorSymbol& g) const {
  auto it = images.find(g);
  if (it == images.end()) throw MissingGenerator("no image for " + g.to_string());
  return it->second;
}

void RepAssignment::set(const GeneratorSymbol& g, Matrix m) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) {
    throw DimensionMismatch("image of " + g.to_string() + " does not act on the space");
  }
  images.insert_or_assign(g, std::move(m));
}

namespace {

GeneratorSymbol indexed(const char* name, int n, int i, int j, bool graded) {
  GeneratorSymbol g{name, {zmod(i, n), zmod(j, n)}, std::nullopt};
  if (graded) g.degree = zmod(j - i, n);
  return g;
}

std::string label(const std::string& head, std::initializer_list<std::pair<char, int>> idx) {
  std::ostringstream s;
  s << head << '[';
  bool first = true;
  for (const auto& [c, v] : idx) {
    if (!first) s << ',';
    s << c << '=' << v;
    first = false;
  }
  s << ']';
  return s.str();
}

CycScalar w(int n, long long k) { return CycScalar::omega_power(n, k); }
CycScalar one(int n) { return CycScalar(n, 1); }
CycScalar delta(int n, int a, int b) { return CycScalar(n, zmod(a - b, n) == 0 ? 1 : 0); }

Letter L(const GeneratorSymbol& g, bool star = false) { return {g, star}; }

Polynomial mono(CycScalar c, std::vector<Letter> word) {
  Polynomial p;
  p.add(std::move(c), std::move(word));
  return p;
}

std::vector<GeneratorSymbol> square_generators(const char* name, int n, bool graded) {
  std::vector<GeneratorSymbol> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) gens.push_back(indexed(name, n, i, j, graded));
  }
  return gens;
}

void require_order(int n) {
  if (n < 2) throw std::invalid_argument("presentations need N >= 2");
}

/// Shared shape of the q and a families; the untwisted variant drops every
/// phase and declares no degrees.
Presentation permutation_like(int n, const char* name, const char* head, bool twisted) {
  require_order(n);
  auto g = [&](int i, int j) { return indexed(name, n, i, j, twisted); };
  auto ph = [&](long long e) { return twisted ? w(n, e) : one(n); };
  Presentation p;
  p.order = n;
  p.generators = square_generators(name, n, twisted);
  const std::string h = head;
  for (int i = 0; i < n; ++i) {
    p.relations.push_back({label(h + ".1a", {{'i', i}}), Polynomial::letter(n, g(0, i)),
                           Polynomial::scalar(delta(n, i, 0))});
  }
  for (int i = 0; i < n; ++i) {
    p.relations.push_back({label(h + ".1b", {{'i', i}}), Polynomial::letter(n, g(i, 0)),
                           Polynomial::scalar(delta(n, i, 0))});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      p.relations.push_back({label(h + ".2", {{'i', i}, {'j', j}}), Polynomial::letter(n, g(i, j), true),
                             mono(ph(-static_cast<long long>(i) * (i - j)), {L(g(-i, -j))})});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Polynomial rhs;
        for (int l = 0; l < n; ++l) {
          rhs.add(ph(-static_cast<long long>(l) * (i - k + l)), {L(g(k - l, i)), L(g(l, j))});
        }
        p.relations.push_back(
            {label(h + ".3", {{'i', i}, {'j', j}, {'k', k}}), Polynomial::letter(n, g(k, i + j)), rhs});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Polynomial rhs;
        for (int l = 0; l < n; ++l) {
          rhs.add(ph(-static_cast<long long>(i) * (l - j)), {L(g(j, l)), L(g(i, k - l))});
        }
        p.relations.push_back(
            {label(h + ".4", {{'i', i}, {'j', j}, {'k', k}}), Polynomial::letter(n, g(i + j, k)), rhs});
      }
    }
  }
  return p;
}

/// ubar_R entry (i, j) = w^{-i(j-i)} u*_{ij} as (coefficient, letter).
std::pair<CycScalar, Letter> ubar(int n, int i, int j, bool star) {
  const GeneratorSymbol g = u_gen(n, i, j);
  const long long e = -static_cast<long long>(i) * (j - i);
  if (!star) return {w(n, e), L(g, true)};
  return {w(n, -e), L(g, false)};
}

void add_z_relations(Presentation& p, const std::vector<GeneratorSymbol>& base) {
  const int n = p.order;
  const GeneratorSymbol z = z_gen();
  p.generators.insert(p.generators.begin(), z);
  p.relations.push_back({"boso.z*z", mono(one(n), {L(z, true), L(z)}), Polynomial::scalar(one(n))});
  p.relations.push_back({"boso.zz*", mono(one(n), {L(z), L(z, true)}), Polynomial::scalar(one(n))});
  p.relations.push_back(
      {"boso.z^N", mono(one(n), std::vector<Letter>(static_cast<std::size_t>(n), L(z))),
       Polynomial::scalar(one(n))});
  for (const auto& g : base) {
    p.relations.push_back({label("boso.ex", {{'i', g.indices[0]}, {'j', g.indices[1]}}),
                           mono(one(n), {L(z), L(g)}), mono(w(n, *g.degree), {L(g), L(z)})});
  }
}

}  // namespace

GeneratorSymbol q_gen(int n, int i, int j) { return indexed("q", n, i, j, true); }
GeneratorSymbol u_gen(int n, int i, int j) { return indexed("u", n, i, j, true); }
GeneratorSymbol a_gen(int n, int i, int j) { return indexed("a", n, i, j, false); }
GeneratorSymbol z_gen() { return {"z", {}, 1}; }
GeneratorSymbol P_gen(int n, int j) { return {"P", {zmod(j, n)}, zmod(j, n)}; }

Presentation sn_plus_relations(int n) {
  Presentation p = permutation_like(n, "q", "sn", true);
  p.name = "sn_plus";
  return p;
}

Presentation rel_ord_relations(int n) {
  Presentation p = permutation_like(n, "a", "ord", false);
  // Only a_{i0} = delta_{i0} is imposed on the first index pair.
  std::erase_if(p.relations, [](const Relation& r) { return r.label.rfind("ord.1a", 0) == 0; });
  for (auto& r : p.relations) {
    if (r.label.rfind("ord.1b", 0) == 0) r.label = "ord.1" + r.label.substr(6);
  }
  p.name = "rel_ord";
  return p;
}

Presentation un_plus_relations(int n) {
  require_order(n);
  Presentation p;
  p.order = n;
  p.name = "un_plus";
  p.generators = square_generators("u", n, true);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Polynomial a, b, c, d;
      for (int k = 0; k < n; ++k) {
        a.add(one(n), {L(u_gen(n, k, i), true), L(u_gen(n, k, j))});
        b.add(one(n), {L(u_gen(n, i, k)), L(u_gen(n, j, k), true)});
        auto [c1, l1] = ubar(n, k, i, true);
        auto [c2, l2] = ubar(n, k, j, false);
        c.add(c1 * c2, {l1, l2});
        auto [c3, l3] = ubar(n, i, k, false);
        auto [c4, l4] = ubar(n, j, k, true);
        d.add(c3 * c4, {l3, l4});
      }
      const Polynomial id = Polynomial::scalar(delta(n, i, j));
      p.relations.push_back({label("un.u*u", {{'i', i}, {'j', j}}), a, id});
      p.relations.push_back({label("un.uu*", {{'i', i}, {'j', j}}), b, id});
      p.relations.push_back({label("un.ub*ub", {{'i', i}, {'j', j}}), c, id});
      p.relations.push_back({label("un.ubub*", {{'i', i}, {'j', j}}), d, id});
    }
  }
  return p;
}

Presentation boso_sn_relations(int n) {
  Presentation p = sn_plus_relations(n);
  const auto base = p.generators;
  add_z_relations(p, base);
  p.name = "boso_sn";
  return p;
}

Presentation boso_un_relations(int n) {
  Presentation p = un_plus_relations(n);
  const auto base = p.generators;
  add_z_relations(p, base);
  p.name = "boso_un";
  return p;
}

Presentation xn_relations(int n) {
  require_order(n);
  Presentation p;
  p.order = n;
  p.name = "xn";
  for (int j = 0; j < n; ++j) p.generators.push_back(P_gen(n, j));
  p.relations.push_back({"xn.1", Polynomial::letter(n, P_gen(n, 0)),
                         Polynomial::scalar(CycScalar(n, Rational(1, n)))});
  for (int i = 0; i < n; ++i) {
    p.relations.push_back({label("xn.2", {{'i', i}}), Polynomial::letter(n, P_gen(n, i), true),
                           Polynomial::letter(n, P_gen(n, -i))});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      p.relations.push_back({label("xn.3", {{'i', i}, {'j', j}}),
                             mono(one(n), {L(P_gen(n, i)), L(P_gen(n, j))}),
                             mono(CycScalar(n, Rational(1, n)), {L(P_gen(n, i + j))})});
    }
  }
  return p;
}

Matrix evaluate_relation(const Relation& rel, const RepAssignment& rep) {
  const ExactBackend b{rep.space.order};
  std::map<GeneratorSymbol, Matrix> used;
  for (const Polynomial* side : {&rel.lhs, &rel.rhs}) {
    for (const auto& t : side->terms) {
      for (const auto& l : t.word) used.emplace(l.gen, rep.image(l.gen));
    }
  }
  const OpAssignment<ExactBackend> a(b, rep.space, std::move(used));
  Matrix r = eval_polynomial(b, rel.lhs, a);
  r -= eval_polynomial(b, rel.rhs, a);
  return r;
}

VerificationReport check_presentation(const Presentation& pres, const RepAssignment& rep,
                                      Mode mode) {
  VerificationReport report;
  report.subject = pres.name;
  report.mode = mode;
  report.seed = rep.provenance;
  with_backend(pres.order, mode, [&](const auto& b) {
    const auto a = lift_assignment(b, rep);
    check_relations(b, pres, a, report);
    check_grading(b, pres, a, report);
  });
  report.sort_items();
  return report;
}

}  // namespace anyon
