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

// anyon_qpg: seed generation, verification suites, magic <-> twisted
// transforms and report summaries.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 usage, parse or shape error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "anyon/json_io.hpp"
#include "anyon/suites.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw anyon::ParseError("cannot read \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const anyon::json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write \"" + out + "\"");
  f << text;
}

void summarize(const anyon::json& r, std::ostream& os) {
  const auto& items = r.at("items");
  os << r.value("subject", "?") << " [" << r.value("mode", "?") << ", seed "
     << r.value("seed", "?") << "]: " << items.size() - r.value("failures", 0) << "/"
     << items.size() << " pass\n";
  for (const auto& i : items) {
    if (!i.value("pass", false)) os << "  FAIL " << i.value("label", "?") << "\n";
  }
  for (const auto& n : r.value("notes", anyon::json::array())) {
    os << "  note: " << n.get<std::string>() << "\n";
  }
}

struct GenOptions {
  std::string kind;
  int n = 3;
  std::string perm;
  std::uint64_t rng = 0;
  std::string out;
};

int cmd_gen(const GenOptions& o) {
  std::string seed;
  if (o.kind == "identity" || o.kind == "shift" || o.kind == "paper-n4") {
    seed = o.kind;
  } else if (o.kind == "permutation") {
    if (o.perm.empty()) throw UsageError("permutation needs --perm");
    seed = "perm:" + o.perm;
  } else if (o.kind == "random-block") {
    seed = "random-block:" + std::to_string(o.rng);
  } else {
    throw UsageError("unknown seed kind \"" + o.kind + "\"");
  }
  const anyon::MagicUnitary u = anyon::resolve_seed(seed, o.n);
  if (!anyon::validate_magic(u).passed()) {
    std::cerr << "generated seed is not a magic unitary\n";
    return kMathFailure;
  }
  emit(anyon::to_json(u), o.out);
  return kPass;
}

struct VerifyOptions {
  int n = 3;
  std::string suite = "all";
  std::string seed = "identity";
  std::string mode = "exact";
  double eps = 1e-9;
  int word_length = 3;
  std::string out;
};

int cmd_verify(const VerifyOptions& o) {
  anyon::RunConfig config;
  config.n = o.n;
  config.suite = anyon::parse_suite(o.suite);
  config.seed = o.seed;
  config.word_length = o.word_length;
  if (o.mode == "approx") {
    if (!(o.eps > 0)) throw UsageError("--eps must be positive");
    config.mode = anyon::Mode::approx(o.eps);
  }
  const anyon::VerificationReport r = anyon::run_suite(config);
  const anyon::json j = anyon::to_json(r);
  emit(j, o.out);
  if (!o.out.empty() && o.out != "-") summarize(j, std::cout);
  return r.passed() ? kPass : kMathFailure;
}

int cmd_transform(const std::string& in, const std::string& out) {
  std::string kind;
  anyon::BlockMatrix b = anyon::blocks_from_json(anyon::parse_json(read_file(in)), &kind);
  if (kind == "twisted") {
    emit(anyon::to_json(anyon::twisted_to_magic(anyon::TwistedMatrix(std::move(b)))), out);
  } else {
    emit(anyon::to_json(anyon::magic_to_twisted(anyon::MagicUnitary(std::move(b)))), out);
  }
  return kPass;
}

int cmd_report(const std::string& in) {
  const anyon::json r = anyon::parse_json(read_file(in));
  if (!r.is_object() || !r.contains("items") || !r.at("items").is_array()) {
    throw anyon::ParseError("not a report");
  }
  summarize(r, std::cout);
  return r.value("passed", false) ? kPass : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of anyonic quantum permutation group representations"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Write a magic-unitary seed");
  g->add_option("kind", gen.kind, "identity | shift | permutation | paper-n4 | random-block")
      ->required();
  g->add_option("--N", gen.n, "Order N")->check(CLI::Range(anyon::kMinOrder, anyon::kMaxOrder));
  g->add_option("--perm", gen.perm, "Comma-separated images sigma(0),...,sigma(N-1)");
  g->add_option("--rng-seed", gen.rng, "Seed for random-block");
  g->add_option("--out", gen.out, "Output file (stdout if absent)");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--N", ver.n, "Order N")->check(CLI::Range(anyon::kMinOrder, anyon::kMaxOrder));
  v->add_option("--suite", ver.suite, "Suite name")->check(CLI::IsMember(anyon::suite_names()));
  v->add_option("--seed", ver.seed, "Builtin seed name or seed file");
  v->add_option("--mode", ver.mode, "exact | approx")->check(CLI::IsMember({"exact", "approx"}));
  v->add_option("--eps", ver.eps, "Tolerance in approx mode");
  v->add_option("--word-length", ver.word_length, "Word length for the density proxy")
      ->check(CLI::Range(1, 6));
  v->add_option("--out", ver.out, "Report file (stdout if absent)");

  std::string t_in, t_out;
  auto* t = app.add_subcommand("transform", "Convert magic <-> twisted");
  t->add_option("input", t_in, "Magic or twisted JSON file")->required();
  t->add_option("--out", t_out, "Output file (stdout if absent)");

  std::string r_in;
  auto* rep = app.add_subcommand("report", "Summarize a report file");
  rep->add_option("input", r_in, "Report JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*v) return cmd_verify(ver);
    if (*t) return cmd_transform(t_in, t_out);
    if (*rep) return cmd_report(r_in);
  } catch (const anyon::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const anyon::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
