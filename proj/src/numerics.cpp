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

#include "wtype/numerics.hpp"

#include <cmath>
#include <string>

#include "wtype/error.hpp"

namespace wtype {

TriangularFactorization qr_2x2(const LocalOperator &a, const Tolerances &tol) {
    const complex det = a.determinant();
    const double det_abs = std::abs(det);
    if (!(det_abs > tol.singular_det)) {
        throw Error(ErrorKind::SingularOperator, "|det| = " + std::to_string(det_abs));
    }
    // First column of V is the normalized first column of A. The second is
    // the orthogonal complement (-conj(a10), conj(a00)) / p, rotated by the
    // phase of det so that the (1,1) entry of B comes out real positive.
    const double p = std::hypot(std::abs(a(0, 0)), std::abs(a(1, 0)));
    const complex v00 = a(0, 0) / p;
    const complex v10 = a(1, 0) / p;
    const complex phase = det / det_abs;
    const complex v01 = -phase * std::conj(v10);
    const complex v11 = phase * std::conj(v00);
    const complex q = std::conj(v00) * a(0, 1) + std::conj(v10) * a(1, 1);
    const double r = det_abs / p;
    return {LocalOperator(v00, v01, v10, v11), LocalOperator(p, q, 0.0, r)};
}

namespace {

bool adjacent(double lo, double hi) {
    const double mid = lo + 0.5 * (hi - lo);
    return !(mid > lo && mid < hi);
}

RootReport bisect_signed(const ScalarFunction &fn, double lo, double hi, double flo, double fhi, double tol,
                         double zero_tol, int max_iterations) {
    RootReport report;
    report.lo = lo;
    report.hi = hi;
    if (std::abs(flo) <= zero_tol) {
        report.root = lo;
        report.residual = std::abs(flo);
        report.converged = true;
        return report;
    }
    if (std::abs(fhi) <= zero_tol) {
        report.root = hi;
        report.residual = std::abs(fhi);
        report.converged = true;
        return report;
    }
    // Invariant: flo > 0 > fhi after orienting.
    const double orient = flo > 0.0 ? 1.0 : -1.0;
    flo *= orient;
    fhi *= orient;
    while (hi - lo > tol && !adjacent(lo, hi)) {
        if (report.iterations >= max_iterations) {
            report.lo = lo;
            report.hi = hi;
            report.residual = std::min(flo, -fhi);
            return report;
        }
        ++report.iterations;
        const double mid = lo + 0.5 * (hi - lo);
        const double fm = orient * fn(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            flo = fhi = 0.0;
            break;
        }
        if (fm > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    report.lo = lo;
    report.hi = hi;
    report.converged = true;
    if (flo <= -fhi) {
        report.root = lo;
        report.residual = flo;
    } else {
        report.root = hi;
        report.residual = -fhi;
    }
    return report;
}

}  // namespace

RootReport bisect_decreasing(const ScalarFunction &fn, double lo, double hi, double tol, int max_iterations) {
    if (!(lo < hi)) {
        throw Error(ErrorKind::NoBracket, "empty interval");
    }
    const double flo = fn(lo);
    const double fhi = fn(hi);
    if (!(flo >= 0.0 && fhi <= 0.0)) {
        throw Error(ErrorKind::NoBracket, "fn(lo) = " + std::to_string(flo) + ", fn(hi) = " + std::to_string(fhi));
    }
    return bisect_signed(fn, lo, hi, flo, fhi, tol, 0.0, max_iterations);
}

RootReport bisect_bracket(const ScalarFunction &fn, double lo, double hi, double tol, double zero_tol,
                          int max_iterations) {
    if (lo > hi) {
        throw Error(ErrorKind::NoBracket, "empty interval");
    }
    const double flo = fn(lo);
    const double fhi = lo == hi ? flo : fn(hi);
    const bool straddles = (flo >= 0.0 && fhi <= 0.0) || (flo <= 0.0 && fhi >= 0.0);
    if (!straddles && std::abs(flo) > zero_tol && std::abs(fhi) > zero_tol) {
        throw Error(ErrorKind::NoBracket, "no sign change on bracket");
    }
    return bisect_signed(fn, lo, hi, flo, fhi, tol, zero_tol, max_iterations);
}

std::vector<Bracket> scan_sign_changes(const ScalarFunction &fn, double lo, double hi, int grid_points,
                                       double zero_tol) {
    std::vector<Bracket> brackets;
    if (lo > hi) {
        throw Error(ErrorKind::NoBracket, "empty interval");
    }
    if (grid_points < 2) {
        throw Error(ErrorKind::InvalidInput, "grid needs at least 2 points");
    }
    if (lo == hi) {
        if (std::abs(fn(lo)) <= zero_tol) {
            brackets.emplace_back(lo, hi);
        }
        return brackets;
    }
    const double span = hi - lo;
    const double last = static_cast<double>(grid_points - 1);
    auto at = [&](int i) { return i == grid_points - 1 ? hi : lo + span * (static_cast<double>(i) / last); };

    double prev_y = lo;
    double prev_f = fn(lo);
    bool prev_zero = std::abs(prev_f) <= zero_tol;
    if (prev_zero) {
        brackets.emplace_back(lo, at(1));
    }
    for (int i = 1; i < grid_points; ++i) {
        const double y = at(i);
        const double fy = fn(y);
        const bool zero = std::abs(fy) <= zero_tol;
        if (zero) {
            // A zero at the left end already opened the bracket ending here.
            if (!(i == 1 && prev_zero)) {
                brackets.emplace_back(prev_y, y);
            }
        } else if (!prev_zero && ((prev_f < 0.0) != (fy < 0.0))) {
            brackets.emplace_back(prev_y, y);
        }
        prev_y = y;
        prev_f = fy;
        prev_zero = zero;
    }
    return brackets;
}

}  // namespace wtype
