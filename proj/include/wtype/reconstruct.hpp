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

// Recovering the canonical coefficients of a W-class state from its
// single-party marginal determinants.
//
// With targets x_k = 4 det rho_k = 4 a_k (A - a_k) and total excitation
// weight A = sum_k a_k, each a_k is (A -/+ sqrt(A^2 - x_k)) / 2 and at most
// one party (the pivot, carrying the largest target) can take the plus
// sign. A is then the root of
//     f(y) = (n - 2) y - sum_k sqrt(y^2 - x_k)                 (all minus)
//     g(y) = sum_{k != p} sqrt(y^2 - x_k) - sqrt(y^2 - x_p) - (n - 2) y
// over the domain [sqrt(max x), 1]. f is strictly decreasing; g has at most
// one root but no known monotonicity, so it is located by a grid scan.

#include <optional>
#include <span>
#include <vector>

#include "wtype/tolerances.hpp"
#include "wtype/wclass.hpp"

namespace wtype {

inline constexpr int kDefaultScanPoints = 10000;

class ReconstructionTargets {
  public:
    /// From pre-scaled targets x_k = 4 det rho_k.
    static ReconstructionTargets from_scaled(std::vector<double> x, const Tolerances &tol = default_tolerances());
    /// From raw determinants det rho_k; multiplied by 4 here.
    static ReconstructionTargets from_determinants(std::span<const double> dets,
                                                   const Tolerances &tol = default_tolerances());
    static ReconstructionTargets from_profile(const InvariantProfile &profile,
                                              const Tolerances &tol = default_tolerances());

    int parties() const noexcept { return static_cast<int>(x_.size()); }
    std::span<const double> x() const noexcept { return x_; }
    double x(int k) const { return x_[static_cast<std::size_t>(k)]; }
    double max_target() const noexcept { return max_; }

    /// Lowest index carrying the maximal target.
    int default_pivot() const noexcept { return default_pivot_; }
    /// Every index whose target is within tol.psd_slack of the maximum.
    std::vector<int> maximal_pivots(const Tolerances &tol = default_tolerances()) const;

    /// [min(sqrt(max x), 1), 1].
    double domain_lo() const noexcept;
    double domain_hi() const noexcept { return 1.0; }

  private:
    explicit ReconstructionTargets(std::vector<double> x);
    std::vector<double> x_;
    double max_ = 0.0;
    int default_pivot_ = 0;
};

enum class Branch { F, G };

struct TotalWeightSolution {
    double total = 0.0;
    Branch branch = Branch::F;
    /// Party carrying the plus-sign root; G-branch only.
    std::optional<int> pivot;
    /// |f| or |g| at the returned total.
    double residual = 0.0;
};

double f_eval(double y, const ReconstructionTargets &t, const Tolerances &tol = default_tolerances());
double g_eval(double y, const ReconstructionTargets &t, int pivot, const Tolerances &tol = default_tolerances());

/// The unique total weight compatible with the targets, or nullopt when no
/// normalized W-canonical state realizes them. Throws ToleranceFailure when
/// a root is found but cannot be refined below tol.root_failure.
std::optional<TotalWeightSolution> solve_total_weight(const ReconstructionTargets &t,
                                                      const Tolerances &tol = default_tolerances());

/// Coefficients for a total-weight solution, validated by recomputing the
/// marginal profile. Throws ValidationFailure when positivity or the forward
/// check fails.
WCanonical coefficients_from_total(const TotalWeightSolution &s, const ReconstructionTargets &t,
                                   const Tolerances &tol = default_tolerances());

struct Reconstruction {
    WCanonical canonical;
    TotalWeightSolution solution;
    /// Max-norm gap between invariant_profile(canonical) and x / 4.
    double forward_residual = 0.0;
};

std::optional<Reconstruction> reconstruct_detailed(const ReconstructionTargets &t,
                                                   const Tolerances &tol = default_tolerances());

std::optional<WCanonical> reconstruct(const ReconstructionTargets &t, const Tolerances &tol = default_tolerances());

/// Roots of f and of g (for every maximal pivot) found by an exhaustive grid
/// scan of the domain, each refined by bisection.
struct BranchRoots {
    std::vector<double> f_roots;
    std::vector<TotalWeightSolution> g_roots;
};

BranchRoots scan_branch_roots(const ReconstructionTargets &t, int grid_points,
                              const Tolerances &tol = default_tolerances());

/// All distinct valid coefficient vectors compatible with the targets,
/// deduplicated at tol.dedupe in max-norm. Uniqueness predicts size <= 1.
std::vector<WCanonical> uniqueness_scan(const ReconstructionTargets &t, int grid_points,
                                        const Tolerances &tol = default_tolerances());

}  // namespace wtype
