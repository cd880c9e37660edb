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

// wtype: canonical forms, marginal invariants, LU equivalence and marginal
// reconstruction for W-class states, with JSON in and JSON out.

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wtype/cli/commands.hpp"
#include "wtype/tolerances.hpp"

namespace {

using wtype::cli::CommandResult;
using wtype::cli::json;

json read_document(const std::string &path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) {
            throw std::runtime_error("cannot open " + path);
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return json::parse(text);
}

int emit(const CommandResult &result, bool pretty) {
    if (result.error) {
        std::cerr << result.error->dump() << '\n';
    } else {
        std::cout << (pretty ? result.output.dump(2) : result.output.dump()) << '\n';
    }
    if (pretty) {
        std::cerr << result.summary << '\n';
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"W-class state canonical forms, invariants, LU equivalence and reconstruction"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    double tol = wtype::default_tolerances().equivalence;
    wtype::cli::SelftestOptions selftest;
    bool pretty = false;
    bool json_flag = false;

    auto add_common = [&](CLI::App *sub) {
        sub->add_flag("--json", json_flag, "Machine-readable JSON output (always on)");
        sub->add_flag("--pretty", pretty, "Indent JSON and print a summary on standard error");
    };

    auto *canonicalize = app.add_subcommand("canonicalize", "Canonical form and witness unitaries");
    canonicalize->add_option("--input", inputs, "Input document path, or - for standard input")->required()->expected(1);
    add_common(canonicalize);

    auto *invariants = app.add_subcommand("invariants", "Single-party marginal determinants and spectra");
    invariants->add_option("--input", inputs, "Input document path, or - for standard input")->required()->expected(1);
    add_common(invariants);

    auto *equiv = app.add_subcommand("equiv", "Decide LU equivalence of two documents");
    equiv->add_option("--input", inputs, "Two input documents (repeat the flag)")->required()->expected(2);
    equiv->add_option("--tol", tol, "Profile equivalence tolerance")->check(CLI::PositiveNumber);
    add_common(equiv);

    auto *reconstruct = app.add_subcommand("reconstruct", "Recover the canonical state from marginal targets");
    reconstruct->add_option("--input", inputs, "Input document path, or - for standard input")->required()->expected(1);
    add_common(reconstruct);

    auto *test = app.add_subcommand("selftest", "Randomized verification of the W-class results");
    test->add_option("--n-max", selftest.n_max, "Largest party count (3..12)");
    test->add_option("--trials", selftest.trials, "Trials per party count");
    test->add_option("--seed", selftest.seed, "Base seed");
    test->add_option("--grid", selftest.grid_points, "Grid points of the uniqueness scan");
    add_common(test);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : wtype::cli::kExitError;
    }

    try {
        if (*canonicalize) return emit(wtype::cli::cmd_canonicalize(read_document(inputs.at(0))), pretty);
        if (*invariants) return emit(wtype::cli::cmd_invariants(read_document(inputs.at(0))), pretty);
        if (*equiv) return emit(wtype::cli::cmd_equiv(read_document(inputs.at(0)), read_document(inputs.at(1)), tol), pretty);
        if (*reconstruct) return emit(wtype::cli::cmd_reconstruct(read_document(inputs.at(0))), pretty);
        if (*test) return emit(wtype::cli::cmd_selftest(selftest), pretty);
    } catch (const std::exception &e) {
        return emit(wtype::cli::error_result("InvalidInput", e.what()), pretty);
    }
    return wtype::cli::kExitError;
}
