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

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "wtype/qstate.hpp"
#include "wtype/tolerances.hpp"

namespace wtype {

/// A = unitary * upper, with `upper` upper triangular and its diagonal real
/// and nonnegative. The factorization is unique under that convention.
struct TriangularFactorization {
    LocalOperator unitary;
    LocalOperator upper;
};

TriangularFactorization qr_2x2(const LocalOperator &a, const Tolerances &tol = default_tolerances());

struct RootReport {
    std::optional<double> root;
    double lo = 0.0;
    double hi = 0.0;
    /// |fn(root)|, or |fn| at the best endpoint when no root was certified.
    double residual = 0.0;
    int iterations = 0;
    /// False when the iteration cap was hit before the bracket shrank below tol.
    bool converged = false;
};

using ScalarFunction = std::function<double(double)>;

inline constexpr int kMaxBisectionIterations = 200;

/// Bisection for a decreasing function with fn(lo) >= 0 >= fn(hi).
/// Shrinks the bracket until its width is at most `tol` or adjacent doubles
/// are reached; tol = 0 asks for full double resolution.
/// Throws NoBracket when lo >= hi or the endpoint signs are wrong.
RootReport bisect_decreasing(const ScalarFunction &fn, double lo, double hi, double tol,
                             int max_iterations = kMaxBisectionIterations);

/// Bisection on any sign change, either orientation. Endpoint values within
/// `zero_tol` of zero count as roots.
RootReport bisect_bracket(const ScalarFunction &fn, double lo, double hi, double tol,
                          double zero_tol = 0.0, int max_iterations = kMaxBisectionIterations);

using Bracket = std::pair<double, double>;

/// Evaluates fn once on each of `grid_points` equispaced points of [lo, hi]
/// and returns every consecutive pair whose values change sign; a grid value
/// within `zero_tol` of zero closes the bracket ending at that point.
std::vector<Bracket> scan_sign_changes(const ScalarFunction &fn, double lo, double hi, int grid_points,
                                       double zero_tol = 0.0);

}  // namespace wtype
