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

// Command implementations behind the `wtype` executable. Each returns the
// JSON document for standard output (or the error document for standard
// error) together with the process exit code:
//   0  affirmative / success
//   1  negative but valid (not equivalent, no solution, failing self-test)
//   2  input or numerical error

#include <cstdint>
#include <optional>
#include <string>

#include "wtype/cli/document.hpp"

namespace wtype::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Largest party count for which canonicalize/equiv report a dense residual.
inline constexpr int kResidualDenseCap = 20;

struct CommandResult {
    int exit_code = kExitOk;
    json output;
    /// Set instead of `output` when exit_code == kExitError.
    std::optional<json> error;
    /// Human-readable one-liner for --pretty.
    std::string summary;
};

/// Error document {"error": <ErrorKind name>, "message": ...}.
CommandResult error_result(const std::string &name, const std::string &message);

CommandResult cmd_canonicalize(const json &input);
CommandResult cmd_invariants(const json &input);
CommandResult cmd_equiv(const json &a, const json &b, double equivalence_tol);
CommandResult cmd_reconstruct(const json &input);

struct SelftestOptions {
    int n_max = 6;
    int trials = 500;
    std::uint64_t seed = 42;
    int grid_points = 10000;
};

CommandResult cmd_selftest(const SelftestOptions &options);

}  // namespace wtype::cli
