// Copyright 2026 The wtype Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON documents read and written by the command-line tool.
//
// Complex numbers are [re, im] arrays; a 2x2 operator is [[z00, z01], [z10, z11]].
// Input documents are flat objects tagged by "kind":
//   {"kind": "slocc",      "n": 3, "ops": [op, op, op]}
//   {"kind": "excitation", "n": 3, "amplitudes": [z, ... 2^n entries]}
//   {"kind": "canonical",  "n": 3, "u": 0.1, "c": [0.5, 0.3, 0.1]}
//   {"kind": "targets",    "n": 3, "scaled": true,  "x": [...]}
//   {"kind": "targets",    "n": 3, "scaled": false, "dets": [...]}
// A canonical document emitted by any command is itself a valid input.

#include <string>
#include <variant>

#include "json.hpp"
#include "wtype/oracle.hpp"
#include "wtype/qstate.hpp"
#include "wtype/reconstruct.hpp"
#include "wtype/wclass.hpp"

namespace wtype::cli {

using nlohmann::json;

enum class DocumentKind { Slocc, Excitation, Canonical, Targets };

std::string kind_name(DocumentKind kind);

struct InputDocument {
    DocumentKind kind;
    int parties;
    std::variant<SloccForm, PureState, WCanonical, ReconstructionTargets> payload;
};

/// Throws Error(InvalidInput) on shape problems; payload validation errors
/// (SingularOperator, InvalidCanonical, InvalidTargets, ...) propagate.
InputDocument parse_document(const json &doc);

json complex_to_json(complex z);
complex complex_from_json(const json &j);
json operator_to_json(const LocalOperator &op);
LocalOperator operator_from_json(const json &j);

json canonical_to_json(const WCanonical &w);
json witness_to_json(const WitnessLU &witness);
json report_to_json(const TrialReport &report);

}  // namespace wtype::cli
