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

namespace wtype {

/// Every numerical threshold the library uses. Operations take a
/// `const Tolerances &` defaulting to `default_tolerances()`, so property
/// tests can tighten or loosen all of them from one place.
struct Tolerances {
    /// Generic equality of reconstructed quantities.
    double equality = 1e-10;
    /// Slack allowed below zero for eigenvalues, determinants and discriminants.
    double psd_slack = 1e-12;
    /// Normalization and construction checks (trace, norm, simplex sum).
    double construction = 1e-12;
    /// Norms below this are treated as zero.
    double zero_norm = 1e-12;
    /// |det| at or below this makes a local operator singular.
    double singular_det = 1e-12;
    /// Degeneracy cutoff on |d_k| relative to sqrt of the squared image norm.
    double degeneracy = 1e-12;
    /// Marginal-profile equivalence threshold.
    double equivalence = 1e-9;
    /// Unitarity check on witness operators (entrywise).
    double unitary = 1e-10;
    /// Residual limit of a root refined to full double resolution; beyond
    /// it the root is a ToleranceFailure.
    double root_failure = 1e-8;
    /// Function values this close to zero at a bracket endpoint count as roots.
    double endpoint_zero = 1e-13;
    /// Forward-check tolerance of the reconstructed marginal profile.
    double forward_check = 1e-9;
    /// Solutions closer than this in max-norm are the same solution.
    double dedupe = 1e-6;
    /// Largest party count for which dense 2^n vectors are materialized.
    int dense_party_cap = 24;
};

inline const Tolerances &default_tolerances() {
    static const Tolerances tolerances{};
    return tolerances;
}

}  // namespace wtype
