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

#include <optional>
#include <string>
#include <vector>

#include "anyon/graded.hpp"

namespace anyon {

struct ReportItem {
  std::string label;
  /// nullopt means an exact-zero residual.
  std::optional<double> residual;
  bool pass = false;
  std::string note;
};

/// Per-identity outcome of a check. Mathematical failures are recorded
/// here, never thrown.
struct VerificationReport {
  std::string subject;
  Mode mode;
  std::string seed;
  std::vector<ReportItem> items;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t failures() const;
  /// Largest residual, 0 if every residual is an exact zero.
  double max_residual() const;
  const ReportItem* find(const std::string& label) const;

  /// Records an exact residual (is_zero) or an approximate one.
  void add_exact(std::string label, bool is_zero, double magnitude, std::string note = {});
  void add_approx(std::string label, double residual, std::string note = {});
  /// Pass/fail item with no residual semantics (structural facts).
  void add_flag(std::string label, bool pass, std::string note = {});

  /// Appends the items of other with labels prefixed by "prefix/" and its
  /// notes prefixed by "prefix: ".
  void merge(const VerificationReport& other, const std::string& prefix);
  /// Orders items by label so merged reports are deterministic.
  void sort_items();
};

}  // namespace anyon
