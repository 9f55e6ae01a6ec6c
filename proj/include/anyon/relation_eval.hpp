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

#include <map>
#include <vector>

#include "anyon/backend.hpp"
#include "anyon/parallel.hpp"
#include "anyon/presentation.hpp"

namespace anyon {

/// Generator images in backend form, with their adjoints precomputed.
template <class B>
struct OpAssignment {
  GradedSpace space;
  std::map<GeneratorSymbol, typename B::Op> images;
  std::map<GeneratorSymbol, typename B::Op> adjoints;

  OpAssignment(const B& b, GradedSpace s, std::map<GeneratorSymbol, typename B::Op> imgs)
      : space(std::move(s)), images(std::move(imgs)) {
    for (const auto& [g, op] : images) {
      if (b.dim(op) != space.dim()) {
        throw DimensionMismatch("image of " + g.to_string() + " does not act on the space");
      }
      adjoints.emplace(g, b.adjoint(op));
    }
  }

  const typename B::Op& letter(const Letter& l) const {
    const auto& m = l.star ? adjoints : images;
    auto it = m.find(l.gen);
    if (it == m.end()) throw MissingGenerator("no image for " + l.gen.to_string());
    return it->second;
  }
};

template <class B>
OpAssignment<B> lift_assignment(const B& b, const RepAssignment& rep) {
  std::map<GeneratorSymbol, typename B::Op> ops;
  for (const auto& [g, m] : rep.images) ops.emplace(g, b.lift(m));
  return OpAssignment<B>(b, rep.space, std::move(ops));
}

template <class B>
typename B::Op eval_polynomial(const B& b, const Polynomial& p, const OpAssignment<B>& a) {
  const std::size_t n = a.space.dim();
  typename B::Op acc = b.zero(n);
  for (const auto& t : p.terms) {
    if (t.coeff.is_zero()) continue;
    if (t.word.empty()) {
      b.axpy(acc, t.coeff, b.identity(n));
      continue;
    }
    typename B::Op w = a.letter(t.word.front());
    for (std::size_t k = 1; k < t.word.size(); ++k) w = b.mul(w, a.letter(t.word[k]));
    b.axpy(acc, t.coeff, w);
  }
  return acc;
}

/// Appends one item per relation, in relation order.
template <class B>
void check_relations(const B& b, const Presentation& pres, const OpAssignment<B>& a,
                     VerificationReport& report) {
  std::vector<VerificationReport> parts(pres.relations.size());
  parallel_for(pres.relations.size(), [&](std::size_t i) {
    const Relation& rel = pres.relations[i];
    typename B::Op r = eval_polynomial(b, rel.lhs, a);
    b.axpy(r, CycScalar(b.order, -1), eval_polynomial(b, rel.rhs, a));
    parts[i].mode = report.mode;
    b.record(parts[i], rel.label, r);
  });
  for (const auto& p : parts) report.merge(p, "");
}

/// Appends one "grade[...]" item per generator with a declared degree.
template <class B>
void check_grading(const B& b, const Presentation& pres, const OpAssignment<B>& a,
                   VerificationReport& report) {
  for (const auto& g : pres.generators) {
    if (!g.degree) continue;
    auto it = a.images.find(g);
    if (it == a.images.end()) throw MissingGenerator("no image for " + g.to_string());
    const Degree d = b.degree(a.space, it->second);
    report.add_flag("grade[" + g.to_string() + "]", d.admits(*g.degree, pres.order),
                    "declared " + std::to_string(*g.degree) + ", found " + d.to_string());
  }
}

}  // namespace anyon
