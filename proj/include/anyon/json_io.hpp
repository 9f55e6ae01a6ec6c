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

// JSON encodings. Rationals are "p/q" strings so round trips are bit-exact.

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "anyon/magic.hpp"
#include "anyon/presentation.hpp"
#include "anyon/report.hpp"

namespace anyon {

using json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const CycScalar& a);
CycScalar scalar_from_json(const json& j);

/// {"rows", "cols", "N", "entries": [[scalar...]...]}.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"N", "degrees"}.
json to_json(const GradedSpace& s);
GradedSpace space_from_json(const json& j);

json to_json(const Presentation& p);

/// {"kind": "magic" | "twisted", "N", "d", "blocks": [[Matrix...]...]}.
json to_json(const MagicUnitary& u);
json to_json(const TwistedMatrix& a);
/// Returns the blocks and the declared kind.
BlockMatrix blocks_from_json(const json& j, std::string* kind = nullptr);

/// {"subject", "mode", "eps", "seed", "passed", "items": [...], "notes"}.
/// Residuals are "0" for exact zeros, numbers otherwise.
json to_json(const VerificationReport& r);

/// Parses text, rethrowing syntax errors as ParseError.
json parse_json(const std::string& text);

}  // namespace anyon
