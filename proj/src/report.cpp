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

#include "anyon/report.hpp"

#include <algorithm>

namespace anyon {

bool VerificationReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return !i.pass; }));
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const auto& i : items) {
    if (i.residual) m = std::max(m, *i.residual);
  }
  return m;
}

const ReportItem* VerificationReport::find(const std::string& label) const {
  for (const auto& i : items) {
    if (i.label == label) return &i;
  }
  return nullptr;
}

void VerificationReport::add_exact(std::string label, bool is_zero, double magnitude,
                                   std::string note) {
  ReportItem item{std::move(label), std::nullopt, is_zero, std::move(note)};
  if (!is_zero) item.residual = magnitude;
  items.push_back(std::move(item));
}

void VerificationReport::add_approx(std::string label, double residual, std::string note) {
  items.push_back({std::move(label), residual, residual < mode.eps, std::move(note)});
}

void VerificationReport::add_flag(std::string label, bool pass, std::string note) {
  items.push_back({std::move(label), std::nullopt, pass, std::move(note)});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& i : other.items) {
    ReportItem copy = i;
    copy.label = prefix.empty() ? i.label : prefix + "/" + i.label;
    items.push_back(std::move(copy));
  }
  for (const auto& n : other.notes) {
    std::string tagged = prefix.empty() ? n : prefix + ": " + n;
    if (std::find(notes.begin(), notes.end(), tagged) == notes.end()) notes.push_back(std::move(tagged));
  }
}

void VerificationReport::sort_items() {
  std::stable_sort(items.begin(), items.end(),
                   [](const ReportItem& a, const ReportItem& b) { return a.label < b.label; });
}

}  // namespace anyon
