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

#include "wtype/cli/commands.hpp"

#include <sstream>

#include "wtype/error.hpp"

namespace wtype::cli {

CommandResult error_result(const std::string &name, const std::string &message) {
    CommandResult result;
    result.exit_code = kExitError;
    result.error = json{{"error", name}, {"message", message}};
    result.summary = "error: " + name;
    return result;
}

namespace {

template <typename Body>
CommandResult guarded(Body &&body) {
    try {
        return body();
    } catch (const Error &e) {
        return error_result(std::string(e.name()), e.what());
    } catch (const json::exception &e) {
        return error_result("InvalidInput", e.what());
    }
}

struct Canonicalized {
    Canonicalization result;
    /// Dense normalized input state when small enough to materialize.
    std::optional<PureState> dense;
};

Canonicalized canonicalize_document(const InputDocument &doc) {
    switch (doc.kind) {
        case DocumentKind::Slocc: {
            const auto &form = std::get<SloccForm>(doc.payload);
            auto result = canonicalize_slocc(form);
            std::optional<PureState> dense;
            if (form.parties() <= kResidualDenseCap) {
                dense = form.to_state();
            }
            return {std::move(result), std::move(dense)};
        }
        case DocumentKind::Excitation: {
            const auto &state = std::get<PureState>(doc.payload);
            return {canonicalize_excitation(state), state};
        }
        case DocumentKind::Canonical: {
            const auto &w = std::get<WCanonical>(doc.payload);
            return {Canonicalization{w, WitnessLU::identity(w.parties())}, std::nullopt};
        }
        case DocumentKind::Targets: break;
    }
    throw Error(ErrorKind::InvalidInput, "targets documents cannot be canonicalized; use reconstruct");
}

std::string describe(const WCanonical &w) {
    std::ostringstream out;
    out.precision(12);
    out << "u=" << w.u() << " c=[";
    for (int k = 0; k < w.parties(); ++k) {
        out << (k ? ", " : "") << w.c(k);
    }
    out << "]";
    return out.str();
}

}  // namespace

CommandResult cmd_canonicalize(const json &input) {
    return guarded([&] {
        const auto doc = parse_document(input);
        if (doc.kind != DocumentKind::Slocc && doc.kind != DocumentKind::Excitation) {
            throw Error(ErrorKind::InvalidInput, "canonicalize takes slocc or excitation documents");
        }
        const auto canon = canonicalize_document(doc);
        const auto &[canonical, witness] = canon.result;
        CommandResult result;
        result.output = json{{"canonical", canonical_to_json(canonical)}, {"witness", witness_to_json(witness)}};
        if (canon.dense) {
            result.output["residual"] = witness_residual(witness, canonical.to_state(), *canon.dense);
        } else {
            result.output["residual"] = nullptr;
        }
        result.summary = "canonical form " + describe(canonical);
        return result;
    });
}

CommandResult cmd_invariants(const json &input) {
    return guarded([&] {
        const auto doc = parse_document(input);
        InvariantProfile profile;
        switch (doc.kind) {
            case DocumentKind::Canonical: profile = invariant_profile(std::get<WCanonical>(doc.payload)); break;
            case DocumentKind::Excitation:
                profile = invariant_profile_from_state(std::get<PureState>(doc.payload));
                break;
            case DocumentKind::Slocc:
                profile = invariant_profile(canonicalize_slocc(std::get<SloccForm>(doc.payload)).canonical);
                break;
            case DocumentKind::Targets:
                throw Error(ErrorKind::InvalidInput, "invariants takes canonical, excitation or slocc documents");
        }
        json x = json::array();
        json spectra = json::array();
        for (double det : profile.dets) {
            x.push_back(4.0 * det);
            const auto s = spectrum_from_det(det);
            spectra.push_back(json::array({s.lambda_min, s.lambda_max}));
        }
        CommandResult result;
        result.output = json{{"n", profile.parties()}, {"dets", profile.dets}, {"x", x}, {"spectra", spectra}};
        result.summary = "marginal determinants for " + std::to_string(profile.parties()) + " parties";
        return result;
    });
}

CommandResult cmd_equiv(const json &a, const json &b, double equivalence_tol) {
    return guarded([&] {
        const auto doc_a = parse_document(a);
        const auto doc_b = parse_document(b);
        if (doc_a.parties != doc_b.parties) {
            throw Error(ErrorKind::ArityMismatch, "documents have " + std::to_string(doc_a.parties) + " and " +
                                                      std::to_string(doc_b.parties) + " parties");
        }
        const auto ca = canonicalize_document(doc_a);
        const auto cb = canonicalize_document(doc_b);
        const auto decision = lu_equivalent(ca.result, cb.result, equivalence_tol);
        CommandResult result;
        result.exit_code = decision.equivalent ? kExitOk : kExitNegative;
        result.output = json{{"equivalent", decision.equivalent},
                             {"max_profile_gap", decision.max_profile_gap},
                             {"tol", equivalence_tol}};
        if (decision.witness) {
            result.output["witness"] = witness_to_json(*decision.witness);
        }
        result.summary = decision.equivalent ? "LU-equivalent" : "not LU-equivalent";
        return result;
    });
}

CommandResult cmd_reconstruct(const json &input) {
    return guarded([&] {
        const auto doc = parse_document(input);
        if (doc.kind != DocumentKind::Targets) {
            throw Error(ErrorKind::InvalidInput, "reconstruct takes a targets document");
        }
        const auto &targets = std::get<ReconstructionTargets>(doc.payload);
        const auto detailed = reconstruct_detailed(targets);
        CommandResult result;
        if (!detailed) {
            result.exit_code = kExitNegative;
            result.output = json{{"no_solution", true}};
            result.summary = "no W-class state has these marginals";
            return result;
        }
        const bool g_branch = detailed->solution.branch == Branch::G;
        result.output = json{{"canonical", canonical_to_json(detailed->canonical)},
                             {"branch", g_branch ? "G" : "F"},
                             {"A", detailed->solution.total},
                             {"residual", detailed->forward_residual}};
        if (g_branch) {
            // Parties are numbered from 1 in documents.
            result.output["pivot"] = *detailed->solution.pivot + 1;
        }
        result.summary = "reconstructed " + describe(detailed->canonical);
        return result;
    });
}

CommandResult cmd_selftest(const SelftestOptions &options) {
    return guarded([&] {
        if (options.n_max < kMinWParties || options.n_max > kDenseOracleMaxParties) {
            throw Error(ErrorKind::InvalidInput, "n_max must lie in [3, 12]");
        }
        if (options.trials < 0) {
            throw Error(ErrorKind::InvalidInput, "trials must be nonnegative");
        }
        CommandResult result;
        result.output = json::array();
        int failures = 0;
        if (options.trials > 0) {
            for (int n = kMinWParties; n <= options.n_max; ++n) {
                for (const auto &report : {verify_theorem1(n, options.trials, options.seed),
                                           verify_lemma2(n, options.trials, options.grid_points, options.seed)}) {
                    json j = report_to_json(report);
                    if (report.name == "lemma2") {
                        j["grid_points"] = options.grid_points;
                    }
                    result.output.push_back(std::move(j));
                    failures += report.failures;
                }
            }
        }
        result.exit_code = failures == 0 ? kExitOk : kExitNegative;
        result.summary = std::to_string(result.output.size()) + " reports, " + std::to_string(failures) + " failures";
        return result;
    });
}

}  // namespace wtype::cli
