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

#include "wtype/cli/document.hpp"

#include <cmath>

#include "wtype/error.hpp"

namespace wtype::cli {

namespace {

[[noreturn]] void invalid(const std::string &message) { throw Error(ErrorKind::InvalidInput, message); }

const json &field(const json &doc, const char *name) {
    const auto it = doc.find(name);
    if (it == doc.end()) {
        invalid(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

double finite_number(const json &j, const std::string &what) {
    if (!j.is_number()) {
        invalid(what + " must be a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        invalid(what + " must be finite");
    }
    return v;
}

std::vector<double> number_list(const json &j, const std::string &what, int expected) {
    if (!j.is_array() || static_cast<int>(j.size()) != expected) {
        invalid(what + " must be an array of " + std::to_string(expected) + " numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(finite_number(j[i], what + "[" + std::to_string(i) + "]"));
    }
    return out;
}

}  // namespace

std::string kind_name(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::Slocc: return "slocc";
        case DocumentKind::Excitation: return "excitation";
        case DocumentKind::Canonical: return "canonical";
        case DocumentKind::Targets: return "targets";
    }
    return "unknown";
}

json complex_to_json(complex z) { return json::array({z.real(), z.imag()}); }

complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        invalid("complex numbers are [re, im] arrays");
    }
    return {finite_number(j[0], "real part"), finite_number(j[1], "imaginary part")};
}

json operator_to_json(const LocalOperator &op) {
    return json::array({json::array({complex_to_json(op(0, 0)), complex_to_json(op(0, 1))}),
                        json::array({complex_to_json(op(1, 0)), complex_to_json(op(1, 1))})});
}

LocalOperator operator_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
        j[1].size() != 2) {
        invalid("operators are 2x2 nested arrays of [re, im]");
    }
    return {complex_from_json(j[0][0]), complex_from_json(j[0][1]), complex_from_json(j[1][0]),
            complex_from_json(j[1][1])};
}

InputDocument parse_document(const json &doc) {
    if (!doc.is_object()) {
        invalid("input document must be a JSON object");
    }
    const json &kind_field = field(doc, "kind");
    const json &n_field = field(doc, "n");
    if (!kind_field.is_string()) {
        invalid("\"kind\" must be a string");
    }
    if (!n_field.is_number_integer() || n_field.get<long long>() < 1 || n_field.get<long long>() > 4096) {
        invalid("\"n\" must be a positive integer");
    }
    const int n = n_field.get<int>();
    const std::string kind = kind_field.get<std::string>();

    if (kind == "slocc") {
        const json &ops = field(doc, "ops");
        if (!ops.is_array() || static_cast<int>(ops.size()) != n) {
            invalid("\"ops\" must hold n operators");
        }
        std::vector<LocalOperator> parsed;
        for (const auto &op : ops) {
            parsed.push_back(operator_from_json(op));
        }
        return {DocumentKind::Slocc, n, SloccForm::make(std::move(parsed))};
    }
    if (kind == "excitation") {
        const json &amps = field(doc, "amplitudes");
        if (n > default_tolerances().dense_party_cap) {
            invalid("excitation documents are dense and limited to " +
                    std::to_string(default_tolerances().dense_party_cap) + " parties");
        }
        if (!amps.is_array() || amps.size() != (std::size_t{1} << n)) {
            invalid("\"amplitudes\" must hold 2^n entries");
        }
        std::vector<complex> parsed;
        parsed.reserve(amps.size());
        for (const auto &a : amps) {
            parsed.push_back(complex_from_json(a));
        }
        return {DocumentKind::Excitation, n, PureState::from_amplitudes(std::move(parsed))};
    }
    if (kind == "canonical") {
        const double u = finite_number(field(doc, "u"), "u");
        auto c = number_list(field(doc, "c"), "c", n);
        return {DocumentKind::Canonical, n, WCanonical::make(u, std::move(c))};
    }
    if (kind == "targets") {
        const json &scaled = field(doc, "scaled");
        if (!scaled.is_boolean()) {
            invalid("\"scaled\" must be an explicit boolean");
        }
        if (scaled.get<bool>()) {
            if (doc.contains("dets")) {
                invalid("scaled targets take \"x\", not \"dets\"");
            }
            return {DocumentKind::Targets, n, ReconstructionTargets::from_scaled(number_list(field(doc, "x"), "x", n))};
        }
        if (doc.contains("x")) {
            invalid("unscaled targets take \"dets\", not \"x\"");
        }
        const auto dets = number_list(field(doc, "dets"), "dets", n);
        return {DocumentKind::Targets, n, ReconstructionTargets::from_determinants(dets)};
    }
    invalid("unknown kind \"" + kind + "\"");
}

json canonical_to_json(const WCanonical &w) {
    return json{{"kind", "canonical"},
                {"n", w.parties()},
                {"u", w.u()},
                {"c", std::vector<double>(w.c().begin(), w.c().end())}};
}

json witness_to_json(const WitnessLU &witness) {
    json out = json::array();
    for (const auto &op : witness.ops()) {
        out.push_back(operator_to_json(op));
    }
    return out;
}

json report_to_json(const TrialReport &report) {
    return json{{"name", report.name},       {"n", report.parties},
                {"trials", report.trials},   {"failures", report.failures},
                {"worst_error", report.worst_error}, {"seed", report.seed}};
}

}  // namespace wtype::cli
