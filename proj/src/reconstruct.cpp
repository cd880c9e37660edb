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

#include "wtype/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wtype/error.hpp"
#include "wtype/numerics.hpp"

namespace wtype {

ReconstructionTargets::ReconstructionTargets(std::vector<double> x) : x_(std::move(x)) {
    const auto it = std::max_element(x_.begin(), x_.end());
    max_ = *it;
    default_pivot_ = static_cast<int>(it - x_.begin());
}

ReconstructionTargets ReconstructionTargets::from_scaled(std::vector<double> x, const Tolerances &tol) {
    if (static_cast<int>(x.size()) < kMinWParties) {
        throw Error(ErrorKind::InvalidArity, "reconstruction needs at least 3 targets");
    }
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!std::isfinite(x[k]) || !(x[k] > 0.0) || x[k] > 1.0 + tol.construction) {
            throw Error(ErrorKind::InvalidTargets,
                        "x[" + std::to_string(k) + "] = " + std::to_string(x[k]) + " outside (0, 1]");
        }
    }
    return ReconstructionTargets(std::move(x));
}

ReconstructionTargets ReconstructionTargets::from_determinants(std::span<const double> dets,
                                                               const Tolerances &tol) {
    std::vector<double> x(dets.begin(), dets.end());
    for (auto &v : x) {
        v *= 4.0;
    }
    return from_scaled(std::move(x), tol);
}

ReconstructionTargets ReconstructionTargets::from_profile(const InvariantProfile &profile, const Tolerances &tol) {
    return from_determinants(profile.dets, tol);
}

std::vector<int> ReconstructionTargets::maximal_pivots(const Tolerances &tol) const {
    std::vector<int> pivots;
    for (int k = 0; k < parties(); ++k) {
        if (x(k) >= max_ - tol.psd_slack) {
            pivots.push_back(k);
        }
    }
    return pivots;
}

double ReconstructionTargets::domain_lo() const noexcept { return std::min(std::sqrt(max_), 1.0); }

namespace {

double root_of_gap(double y, double xk, const Tolerances &tol) {
    const double gap = y * y - xk;
    if (gap >= 0.0) {
        return std::sqrt(gap);
    }
    if (gap >= -tol.psd_slack) {
        return 0.0;
    }
    throw Error(ErrorKind::DomainError, "y = " + std::to_string(y) + " below sqrt(x) = " + std::to_string(std::sqrt(xk)));
}

bool near_zero_or(double value, bool sign_ok, const Tolerances &tol) {
    return sign_ok || std::abs(value) <= tol.endpoint_zero;
}

double refine_root(const ScalarFunction &fn, const Bracket &bracket, const Tolerances &tol) {
    const auto report = bisect_bracket(fn, bracket.first, bracket.second, 0.0, tol.endpoint_zero);
    if (!report.root || report.residual > tol.root_failure) {
        throw Error(ErrorKind::ToleranceFailure,
                    "root refinement stalled with residual " + std::to_string(report.residual));
    }
    return *report.root;
}

void push_distinct(std::vector<double> &roots, double root) {
    for (double r : roots) {
        if (std::abs(r - root) <= 1e-9) {
            return;
        }
    }
    roots.push_back(root);
}

std::vector<double> scan_roots(const ScalarFunction &fn, const ReconstructionTargets &t, int grid_points,
                               const Tolerances &tol) {
    std::vector<double> roots;
    for (const auto &bracket : scan_sign_changes(fn, t.domain_lo(), t.domain_hi(), grid_points, tol.endpoint_zero)) {
        push_distinct(roots, refine_root(fn, bracket, tol));
    }
    return roots;
}

}  // namespace

double f_eval(double y, const ReconstructionTargets &t, const Tolerances &tol) {
    double sum = 0.0;
    for (double xk : t.x()) {
        sum += root_of_gap(y, xk, tol);
    }
    return (t.parties() - 2) * y - sum;
}

double g_eval(double y, const ReconstructionTargets &t, int pivot, const Tolerances &tol) {
    if (pivot < 0 || pivot >= t.parties() || t.x(pivot) < t.max_target() - tol.psd_slack) {
        throw Error(ErrorKind::InvalidPivot, "party " + std::to_string(pivot) + " does not carry a maximal target");
    }
    double sum = 0.0;
    for (int k = 0; k < t.parties(); ++k) {
        if (k != pivot) {
            sum += root_of_gap(y, t.x(k), tol);
        }
    }
    return sum - root_of_gap(y, t.x(pivot), tol) - (t.parties() - 2) * y;
}

std::optional<TotalWeightSolution> solve_total_weight(const ReconstructionTargets &t, const Tolerances &tol) {
    const double lo = t.domain_lo();
    const double hi = t.domain_hi();

    // Strictly decreasing f: a single endpoint sign test decides the branch.
    const ScalarFunction f = [&](double y) { return f_eval(y, t, tol); };
    const double flo = f(lo);
    const double fhi = f(hi);
    if (near_zero_or(flo, flo >= 0.0, tol) && near_zero_or(fhi, fhi <= 0.0, tol)) {
        const double root = refine_root(f, {lo, hi}, tol);
        return TotalWeightSolution{root, Branch::F, std::nullopt, std::abs(f(root))};
    }

    const int pivot = t.default_pivot();
    const ScalarFunction g = [&](double y) { return g_eval(y, t, pivot, tol); };
    const auto roots = scan_roots(g, t, kDefaultScanPoints, tol);
    if (roots.empty()) {
        return std::nullopt;
    }
    if (roots.size() > 1) {
        throw Error(ErrorKind::ToleranceFailure, "g has " + std::to_string(roots.size()) + " distinct roots");
    }
    const double root = roots.front();
    const double residual = std::abs(g(root));
    // Tied maximal targets give the same equation for every choice of pivot.
    for (int other : t.maximal_pivots(tol)) {
        if (std::abs(g_eval(root, t, other, tol)) > tol.root_failure) {
            throw Error(ErrorKind::ToleranceFailure,
                        "root of g disagrees between tied pivots " + std::to_string(pivot) + " and " +
                            std::to_string(other));
        }
    }
    return TotalWeightSolution{root, Branch::G, pivot, residual};
}

WCanonical coefficients_from_total(const TotalWeightSolution &s, const ReconstructionTargets &t,
                                   const Tolerances &tol) {
    const int n = t.parties();
    const double total = s.total;
    if (s.branch == Branch::G && (!s.pivot || *s.pivot < 0 || *s.pivot >= n)) {
        throw Error(ErrorKind::ValidationFailure, "G-branch solution without a valid pivot");
    }
    std::vector<double> a(static_cast<std::size_t>(n));
    double others = 0.0;
    for (int k = 0; k < n; ++k) {
        if (s.branch == Branch::G && k == *s.pivot) {
            continue;
        }
        // (A - sqrt(A^2 - x)) / 2 rewritten without cancellation.
        const double xk = t.x(k);
        const double ak = xk / (2.0 * (total + root_of_gap(total, xk, tol)));
        a[static_cast<std::size_t>(k)] = ak;
        others += ak;
    }
    if (s.branch == Branch::G) {
        a[static_cast<std::size_t>(*s.pivot)] = total - others;
    }
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        if (!(a[static_cast<std::size_t>(k)] > 0.0)) {
            throw Error(ErrorKind::ValidationFailure, "coefficient " + std::to_string(k) + " is not positive");
        }
        sum += a[static_cast<std::size_t>(k)];
    }
    double u = 1.0 - sum;
    if (u < -tol.psd_slack) {
        throw Error(ErrorKind::ValidationFailure, "total weight exceeds 1");
    }
    u = std::max(u, 0.0);
    auto w = WCanonical::make(u, std::move(a), tol);
    const auto profile = invariant_profile(w);
    for (int k = 0; k < n; ++k) {
        if (std::abs(profile.dets[static_cast<std::size_t>(k)] - 0.25 * t.x(k)) > tol.forward_check) {
            throw Error(ErrorKind::ValidationFailure, "forward profile check failed at party " + std::to_string(k));
        }
    }
    return w;
}

std::optional<Reconstruction> reconstruct_detailed(const ReconstructionTargets &t, const Tolerances &tol) {
    const auto solution = solve_total_weight(t, tol);
    if (!solution) {
        return std::nullopt;
    }
    auto w = coefficients_from_total(*solution, t, tol);
    const auto profile = invariant_profile(w);
    double worst = 0.0;
    for (int k = 0; k < t.parties(); ++k) {
        worst = std::max(worst, std::abs(profile.dets[static_cast<std::size_t>(k)] - 0.25 * t.x(k)));
    }
    return Reconstruction{std::move(w), *solution, worst};
}

std::optional<WCanonical> reconstruct(const ReconstructionTargets &t, const Tolerances &tol) {
    auto detailed = reconstruct_detailed(t, tol);
    if (!detailed) {
        return std::nullopt;
    }
    return std::move(detailed->canonical);
}

BranchRoots scan_branch_roots(const ReconstructionTargets &t, int grid_points, const Tolerances &tol) {
    BranchRoots out;
    const ScalarFunction f = [&](double y) { return f_eval(y, t, tol); };
    out.f_roots = scan_roots(f, t, grid_points, tol);
    for (int pivot : t.maximal_pivots(tol)) {
        const ScalarFunction g = [&](double y) { return g_eval(y, t, pivot, tol); };
        for (double root : scan_roots(g, t, grid_points, tol)) {
            out.g_roots.push_back({root, Branch::G, pivot, std::abs(g(root))});
        }
    }
    return out;
}

std::vector<WCanonical> uniqueness_scan(const ReconstructionTargets &t, int grid_points, const Tolerances &tol) {
    if (grid_points < 100) {
        throw Error(ErrorKind::InvalidInput, "uniqueness scan needs at least 100 grid points");
    }
    const auto roots = scan_branch_roots(t, grid_points, tol);
    std::vector<TotalWeightSolution> candidates;
    for (double r : roots.f_roots) {
        candidates.push_back({r, Branch::F, std::nullopt, std::abs(f_eval(r, t, tol))});
    }
    candidates.insert(candidates.end(), roots.g_roots.begin(), roots.g_roots.end());

    std::vector<WCanonical> solutions;
    for (const auto &candidate : candidates) {
        std::optional<WCanonical> w;
        try {
            w = coefficients_from_total(candidate, t, tol);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::ValidationFailure && e.kind() != ErrorKind::InvalidCanonical) {
                throw;
            }
            continue;
        }
        const bool seen = std::any_of(solutions.begin(), solutions.end(),
                                      [&](const WCanonical &s) { return s.max_difference(*w) <= tol.dedupe; });
        if (!seen) {
            solutions.push_back(std::move(*w));
        }
    }
    return solutions;
}

}  // namespace wtype
