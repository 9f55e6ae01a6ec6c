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

#include <cstdint>
#include <string>
#include <vector>

#include "anyon/magic.hpp"
#include "anyon/report.hpp"

namespace anyon {

enum class Suite { sn, un, boso_sn, boso_un, xn_action, magic_lemma, commutativity, all };

std::string suite_name(Suite s);
/// Throws std::invalid_argument on an unknown name.
Suite parse_suite(const std::string& name);
std::vector<std::string> suite_names();

inline constexpr int kMinOrder = 2;
inline constexpr int kMaxOrder = 12;

struct RunConfig {
  int n = 3;
  Suite suite = Suite::all;
  /// Builtin seed name or a path to a magic-unitary JSON file.
  std::string seed = "identity";
  Mode mode = Mode::exact();
  int word_length = 3;
};

/// Builtin seeds:
///   identity | shift | perm:a,b,...   permutation matrices
///   paper | paper-n4                  the p, q block seed (N >= 4)
///   random-block[:rng]                random_block_magic
/// Anything else is read as a JSON file. Throws ParseError for unreadable
/// or malformed files and std::invalid_argument for bad builtin names.
MagicUnitary resolve_seed(const std::string& seed, int n);

/// True for the seeds built from the p, q blocks.
bool is_paper_seed(const std::string& seed);

/// Runs the suite end to end. Mathematical failures land in the report;
/// malformed input throws.
VerificationReport run_suite(const RunConfig& config);

}  // namespace anyon
