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

#include "anyon/json_io.hpp"

namespace anyon {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

int order_field(const json& j) {
  const int n = int_field(j, "N");
  if (n < 1) throw ParseError("N must be positive");
  return n;
}

json word_to_json(const std::vector<Letter>& word) {
  json out = json::array();
  for (const auto& l : word) out.push_back({{"gen", l.gen.to_string()}, {"star", l.star}});
  return out;
}

json poly_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& t : p.terms) out.push_back(json::array({to_json(t.coeff), word_to_json(t.word)}));
  return out;
}

json blocks_to_json(const BlockMatrix& b, const char* kind) {
  json rows = json::array();
  for (int i = 0; i < b.n; ++i) {
    json row = json::array();
    for (int j = 0; j < b.n; ++j) row.push_back(to_json(b.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"kind", kind}, {"N", b.n}, {"d", b.d}, {"blocks", std::move(rows)}};
}

}  // namespace

json to_json(const CycScalar& a) {
  json coeffs = json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(c.to_string());
  return {{"N", a.order()}, {"coeffs", std::move(coeffs)}};
}

CycScalar scalar_from_json(const json& j) {
  const int n = order_field(j);
  const json& c = field(j, "coeffs");
  if (!c.is_array()) throw ParseError("coeffs must be an array");
  const std::size_t deg = CyclotomicField::get(n).degree();
  if (c.size() != deg) throw ParseError("coeffs length must equal deg Phi_N");
  CycScalar::Coeffs coeffs;
  for (const auto& e : c) {
    if (!e.is_string()) throw ParseError("coefficients must be \"p/q\" strings");
    try {
      coeffs.push_back(Rational::parse(e.get<std::string>()));
    } catch (const std::exception& ex) {
      throw ParseError(std::string("bad rational: ") + ex.what());
    }
  }
  return CycScalar::from_coeffs(n, std::move(coeffs));
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"N", m.order()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  const int n = order_field(j);
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  if (rows < 0 || cols < 0) throw ParseError("negative matrix shape");
  const json& e = field(j, "entries");
  if (!e.is_array() || e.size() != static_cast<std::size_t>(rows)) {
    throw ParseError("entries must have one array per row");
  }
  Matrix m(n, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < e.size(); ++r) {
    if (!e[r].is_array() || e[r].size() != static_cast<std::size_t>(cols)) {
      throw ParseError("matrix row has the wrong length");
    }
    for (std::size_t c = 0; c < e[r].size(); ++c) {
      CycScalar s = scalar_from_json(e[r][c]);
      if (s.order() != n) throw ParseError("entry order differs from matrix N");
      m.set(r, c, std::move(s));
    }
  }
  return m;
}

json to_json(const GradedSpace& s) { return {{"N", s.order}, {"degrees", s.degrees}}; }

GradedSpace space_from_json(const json& j) {
  const int n = order_field(j);
  const json& d = field(j, "degrees");
  if (!d.is_array()) throw ParseError("degrees must be an array");
  std::vector<int> degrees;
  for (const auto& v : d) {
    if (!v.is_number_integer()) throw ParseError("degrees must be integers");
    const int x = v.get<int>();
    if (x < 0 || x >= n) throw ParseError("degree label outside {0, ..., N-1}");
    degrees.push_back(x);
  }
  return GradedSpace(n, std::move(degrees));
}

json to_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& g : p.generators) {
    json d = g.degree ? json(*g.degree) : json(nullptr);
    gens.push_back({{"name", g.name}, {"indices", g.indices}, {"degree", d}});
  }
  json rels = json::array();
  for (const auto& r : p.relations) {
    rels.push_back({{"label", r.label}, {"lhs", poly_to_json(r.lhs)}, {"rhs", poly_to_json(r.rhs)}});
  }
  return {{"N", p.order}, {"name", p.name}, {"generators", std::move(gens)},
          {"relations", std::move(rels)}};
}

json to_json(const MagicUnitary& u) { return blocks_to_json(u, "magic"); }
json to_json(const TwistedMatrix& a) { return blocks_to_json(a, "twisted"); }

BlockMatrix blocks_from_json(const json& j, std::string* kind) {
  const int n = order_field(j);
  const int d = int_field(j, "d");
  if (d < 1) throw ParseError("block dimension must be positive");
  std::string k = "magic";
  if (j.contains("kind")) {
    if (!j.at("kind").is_string()) throw ParseError("kind must be a string");
    k = j.at("kind").get<std::string>();
    if (k != "magic" && k != "twisted") throw ParseError("kind must be magic or twisted");
  }
  if (kind) *kind = k;
  const json& b = field(j, "blocks");
  if (!b.is_array() || b.size() != static_cast<std::size_t>(n)) {
    throw ParseError("blocks must be an N x N array");
  }
  BlockMatrix out(n, static_cast<std::size_t>(d));
  for (int i = 0; i < n; ++i) {
    const json& row = b[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw ParseError("blocks must be an N x N array");
    }
    for (int c = 0; c < n; ++c) {
      Matrix m = matrix_from_json(row[static_cast<std::size_t>(c)]);
      if (m.order() != n || m.rows() != out.d || m.cols() != out.d) {
        throw ParseError("block shape or order does not match N and d");
      }
      out.at(i, c) = std::move(m);
    }
  }
  return out;
}

json to_json(const VerificationReport& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    json item = {{"label", i.label}, {"pass", i.pass}};
    item["residual"] = i.residual ? json(*i.residual) : json("0");
    if (!i.note.empty()) item["note"] = i.note;
    items.push_back(std::move(item));
  }
  json out = {{"subject", r.subject}, {"mode", r.mode.name()}, {"seed", r.seed},
              {"passed", r.passed()}, {"failures", r.failures()}, {"items", std::move(items)},
              {"notes", r.notes}};
  if (!r.mode.is_exact()) out["eps"] = r.mode.eps;
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace anyon
