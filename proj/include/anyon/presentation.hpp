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

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anyon/graded.hpp"
#include "anyon/report.hpp"

namespace anyon {

/// Abstract generator such as q_{ij}, u_{ij}, z or P_j. Identity is
/// (name, indices); the declared degree is metadata (nullopt = ungraded).
struct GeneratorSymbol {
  std::string name;
  std::vector<int> indices;
  std::optional<int> degree;

  std::string to_string() const;
  friend bool operator==(const GeneratorSymbol& a, const GeneratorSymbol& b) {
    return a.name == b.name && a.indices == b.indices;
  }
  friend std::strong_ordering operator<=>(const GeneratorSymbol& a, const GeneratorSymbol& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.indices <=> b.indices;
  }
};

/// A generator or its formal adjoint.
struct Letter {
  GeneratorSymbol gen;
  bool star = false;
};

/// coeff * (product of letters); an empty word is the unit.
struct Term {
  CycScalar coeff;
  std::vector<Letter> word;
};

/// Finite sum of terms; no terms means zero.
struct Polynomial {
  std::vector<Term> terms;

  static Polynomial scalar(const CycScalar& c);
  static Polynomial zero() { return {}; }
  static Polynomial letter(int order, const GeneratorSymbol& g, bool star = false);
  Polynomial& add(CycScalar coeff, std::vector<Letter> word);
  /// Degree::Kind::zero for the zero polynomial, inhomogeneous when terms
  /// disagree, nullopt when some letter has no declared degree.
  std::optional<Degree> degree(int order) const;
};

struct Relation {
  std::string label;
  Polynomial lhs;
  Polynomial rhs;
};

struct Presentation {
  int order = 2;
  std::string name;
  std::vector<GeneratorSymbol> generators;
  std::vector<Relation> relations;

  const Relation* find(const std::string& label) const;
  /// Throws std::logic_error on duplicate labels or on a relation whose
  /// sides have different degrees.
  void validate() const;
};

class MissingGenerator : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Images of generators as operators on one graded space.
struct RepAssignment {
  GradedSpace space;
  std::map<GeneratorSymbol, Matrix> images;
  std::string provenance;

  const Matrix& image(const GeneratorSymbol& g) const;
  GradedOperator graded(const GeneratorSymbol& g) const { return {space, image(g)}; }
  void set(const GeneratorSymbol& g, Matrix m);
  bool has(const GeneratorSymbol& g) const { return images.count(g) != 0; }
};

GeneratorSymbol q_gen(int n, int i, int j);
GeneratorSymbol u_gen(int n, int i, int j);
GeneratorSymbol a_gen(int n, int i, int j);
GeneratorSymbol z_gen();
GeneratorSymbol P_gen(int n, int j);

/// C(S_N^+(R)): q_{0i} = q_{i0} = delta_{i0}; q*_{ij} = w^{-i(i-j)} q_{-i,-j};
/// q_{k,i+j} = sum_l w^{-l(i-k+l)} q_{k-l,i} q_{lj};
/// q_{i+j,k} = sum_l w^{-i(l-j)} q_{jl} q_{i,k-l}.
Presentation sn_plus_relations(int n);
/// Untwisted relations characterizing Omega^{-1} u Omega for magic u.
Presentation rel_ord_relations(int n);
/// Unitarity of u and of ubar_R = (w^{-i(j-i)} u*_{ij}).
Presentation un_plus_relations(int n);
/// Base presentation plus z z* = z* z = 1 = z^N and z g = w^{deg g} g z.
Presentation boso_sn_relations(int n);
Presentation boso_un_relations(int n);
/// C(X_N) in the Fourier basis: P_0 = 1/N, P_i* = P_{-i}, P_i P_j = P_{i+j}/N.
Presentation xn_relations(int n);

/// eval(lhs) - eval(rhs) in exact arithmetic. Throws MissingGenerator or
/// DimensionMismatch.
Matrix evaluate_relation(const Relation& rel, const RepAssignment& rep);

/// Evaluates every relation and checks each image's degree against its
/// declared degree. Items are sorted by label.
VerificationReport check_presentation(const Presentation& pres, const RepAssignment& rep,
                                      Mode mode = Mode::exact());

}  // namespace anyon
