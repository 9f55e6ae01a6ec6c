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

#include "anyon/suites.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "anyon/json_io.hpp"
#include "anyon/representations.hpp"
#include "anyon/verifier.hpp"

namespace anyon {

namespace {

constexpr std::array<std::pair<Suite, const char*>, 8> kSuites{{
    {Suite::sn, "sn"},
    {Suite::un, "un"},
    {Suite::boso_sn, "boso-sn"},
    {Suite::boso_un, "boso-un"},
    {Suite::xn_action, "xn-action"},
    {Suite::magic_lemma, "magic-lemma"},
    {Suite::commutativity, "commutativity"},
    {Suite::all, "all"},
}};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation entry \"" + tok + "\"");
    }
    if (used != tok.size()) throw std::invalid_argument("bad permutation entry \"" + tok + "\"");
    out.push_back(v);
  }
  return out;
}

MagicUnitary read_seed_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read seed \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string kind;
  BlockMatrix b = blocks_from_json(parse_json(buf.str()), &kind);
  if (b.n != n) throw ParseError("seed file has N = " + std::to_string(b.n));
  if (kind == "twisted") return twisted_to_magic(TwistedMatrix(std::move(b)));
  return MagicUnitary(std::move(b));
}

bool need(Suite want, Suite s) { return want == s || want == Suite::all; }

}  // namespace

std::string suite_name(Suite s) {
  for (const auto& [k, name] : kSuites) {
    if (k == s) return name;
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (const auto& [k, n] : kSuites) {
    if (name == n) return k;
  }
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [k, name] : kSuites) out.emplace_back(name);
  return out;
}

bool is_paper_seed(const std::string& seed) { return seed == "paper" || seed == "paper-n4"; }

MagicUnitary resolve_seed(const std::string& seed, int n) {
  if (n < kMinOrder || n > kMaxOrder) throw std::invalid_argument("N out of range");
  if (seed == "identity") {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i;
    return permutation_magic(s);
  }
  if (seed == "shift") {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (i + 1) % n;
    return permutation_magic(s);
  }
  if (seed.rfind("perm:", 0) == 0) {
    std::vector<int> s = parse_int_list(seed.substr(5));
    if (static_cast<int>(s.size()) != n) throw std::invalid_argument("permutation length differs from N");
    return permutation_magic(s);
  }
  if (is_paper_seed(seed)) {
    return paper_magic_unitary(n, paper_seed_p(n), paper_seed_q(n));
  }
  if (seed == "random-block" || seed.rfind("random-block:", 0) == 0) {
    std::uint64_t rng = 0;
    if (seed.size() > 13) {
      try {
        rng = std::stoull(seed.substr(13));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad random-block seed");
      }
    }
    return random_block_magic(n, rng);
  }
  return read_seed_file(seed, n);
}

VerificationReport run_suite(const RunConfig& config) {
  const int n = config.n;
  const Mode mode = config.mode;
  const MagicUnitary u = resolve_seed(config.seed, n);

  VerificationReport r;
  r.subject = "suite:" + suite_name(config.suite);
  r.mode = mode;
  r.seed = config.seed;

  const VerificationReport magic = validate_magic(u, mode);
  r.merge(magic, "magic");
  if (need(config.suite, Suite::magic_lemma)) {
    const TwistedMatrix a = magic_to_twisted(u);
    const VerificationReport ord =
        check_presentation(rel_ord_relations(n), twisted_assignment(a), mode);
    r.merge(ord, "lemma/rel_ord");
    r.add_flag("lemma/equivalence", ord.passed() == magic.passed());
    r.add_flag("lemma/roundtrip", twisted_to_magic(a) == u);
    TwistedMatrix abar = a;
    for (auto& m : abar.blocks) m = conjugate(m);
    const bool ord_bar =
        check_presentation(rel_ord_relations(n), twisted_assignment(abar), mode).passed();
    r.add_flag("lemma/conjugate", ord_bar == ord.passed());
    if (is_paper_seed(config.seed)) {
      const TwistedMatrix closed = paper_twisted_closed_form(n, paper_seed_p(n), paper_seed_q(n));
      r.add_flag("lemma/closed_form", closed == a);
    }
  }
  if (!magic.passed()) {
    r.notes.push_back("seed is not a magic unitary; representation checks skipped");
    r.sort_items();
    return r;
  }

  const RepAssignment sn = build_sn_rep(u, config.seed);
  if (need(config.suite, Suite::sn)) {
    r.merge(check_presentation(sn_plus_relations(n), sn, mode), "sn/rep");
    r.merge(check_comult_welldefined(sn, Family::sn, mode), "sn/comult");
    r.merge(check_coassociativity(sn, Family::sn, mode), "sn/coassoc");
    r.merge(check_braided_commutation(sn, mode), "sn/braid");
    r.merge(check_podles_span(sn, Family::sn, config.word_length), "sn/podles");
  }
  const RepAssignment un = build_un_rep_from_sn(sn);
  if (need(config.suite, Suite::un)) {
    r.merge(check_presentation(un_plus_relations(n), un, mode), "un/rep");
    r.merge(check_comult_welldefined(un, Family::un, mode), "un/comult");
    r.merge(check_coassociativity(un, Family::un, mode), "un/coassoc");
  }
  if (need(config.suite, Suite::boso_sn)) {
    const RepAssignment b = build_boso_rep(sn);
    r.merge(check_presentation(boso_sn_relations(n), b, mode), "boso-sn/rep");
    r.merge(check_fundamental(b, Family::sn, mode), "boso-sn/fundamental");
    r.merge(check_boso_comult(b, Family::sn, mode), "boso-sn/comult");
  }
  if (need(config.suite, Suite::boso_un)) {
    const RepAssignment b = build_boso_rep(un);
    r.merge(check_presentation(boso_un_relations(n), b, mode), "boso-un/rep");
    r.merge(check_fundamental(b, Family::un, mode), "boso-un/fundamental");
    r.merge(check_boso_comult(b, Family::un, mode), "boso-un/comult");
  }
  if (need(config.suite, Suite::xn_action)) {
    const RepAssignment xn = build_xn_rep(n);
    r.merge(check_presentation(xn_relations(n), xn, mode), "xn/rep");
    r.merge(check_action(xn, sn, mode), "xn/action");
    bool recovered = false;
    try {
      const RepAssignment back = extract_coefficients(action_images(xn, sn), xn, sn.space);
      recovered = true;
      for (const auto& [g, m] : sn.images) {
        if (!back.has(g) || !(back.image(g) - m).is_zero()) recovered = false;
      }
    } catch (const InconsistentSystem&) {
      recovered = false;
    }
    r.add_flag("xn/extract.roundtrip", recovered);
  }
  if (need(config.suite, Suite::commutativity)) {
    const bool witness = n == 4 && is_paper_seed(config.seed);
    const CommutativityResult c = check_commutativity(sn, witness);
    r.merge(c.report, "commutativity");
  }
  r.sort_items();
  return r;
}

}  // namespace anyon
