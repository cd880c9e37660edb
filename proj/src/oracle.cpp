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

#include "wtype/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wtype/error.hpp"
#include "wtype/numerics.hpp"

namespace wtype {

std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (auto &word : s_) {
        word = splitmix64(state);
    }
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t state = seed;
    const std::uint64_t base = splitmix64(state);
    std::uint64_t mixed = base ^ (trial * 0xd1b54a32d192ed03ULL);
    return Rng(splitmix64(mixed));
}

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

WCanonical random_canonical(int parties, Rng &rng) {
    if (parties < kMinWParties) {
        throw Error(ErrorKind::InvalidArity, "random canonical states need at least 3 parties");
    }
    // Normalized exponential spacings are uniform on the simplex.
    std::vector<double> e(static_cast<std::size_t>(parties) + 1);
    for (;;) {
        double total = 0.0;
        for (auto &v : e) {
            v = -std::log(1.0 - rng.uniform());
            total += v;
        }
        std::vector<double> c(static_cast<std::size_t>(parties));
        bool above_floor = true;
        double csum = 0.0;
        for (int k = 0; k < parties; ++k) {
            c[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k) + 1] / total;
            csum += c[static_cast<std::size_t>(k)];
            above_floor = above_floor && c[static_cast<std::size_t>(k)] >= kCoefficientFloor;
        }
        if (above_floor) {
            return WCanonical::make(std::max(0.0, 1.0 - csum), std::move(c));
        }
    }
}

WCanonical random_canonical(int parties, std::uint64_t seed) {
    Rng rng(seed);
    return random_canonical(parties, rng);
}

namespace {

LocalOperator ginibre(Rng &rng) {
    const double s = std::numbers::sqrt2 / 2.0;
    auto entry = [&] {
        const double re = rng.normal();
        const double im = rng.normal();
        return complex(s * re, s * im);
    };
    const complex a00 = entry();
    const complex a01 = entry();
    const complex a10 = entry();
    const complex a11 = entry();
    return {a00, a01, a10, a11};
}

}  // namespace

LocalOperator random_unitary_2(Rng &rng) {
    for (;;) {
        const LocalOperator g = ginibre(rng);
        if (std::abs(g.determinant()) > default_tolerances().singular_det) {
            return qr_2x2(g).unitary;
        }
    }
}

LocalOperator random_unitary_2(std::uint64_t seed) {
    Rng rng(seed);
    return random_unitary_2(rng);
}

LocalOperator random_invertible_2(Rng &rng) {
    for (;;) {
        const LocalOperator g = ginibre(rng);
        if (std::abs(g.determinant()) >= kMinInvertibleDet) {
            return g;
        }
    }
}

LocalOperator random_invertible_2(std::uint64_t seed) {
    Rng rng(seed);
    return random_invertible_2(rng);
}

SloccForm slocc_form_of(const WCanonical &w) {
    const int n = w.parties();
    const double q = std::sqrt(w.u() / n);
    std::vector<LocalOperator> ops;
    ops.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        ops.emplace_back(1.0, q, 0.0, std::sqrt(n * w.c(k)));
    }
    return SloccForm::make(std::move(ops));
}

namespace {

constexpr double kCoefficientTol = 1e-9;
constexpr double kWitnessTol = 1e-9;
constexpr double kProfileTol = 1e-10;

double profile_distance(const InvariantProfile &a, const InvariantProfile &b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.dets.size(); ++k) {
        worst = std::max(worst, std::abs(a.dets[k] - b.dets[k]));
    }
    return worst;
}

}  // namespace

TrialReport verify_theorem1(int parties, int trials, std::uint64_t seed) {
    if (parties < kMinWParties || parties > kDenseOracleMaxParties) {
        throw Error(ErrorKind::InvalidArity, "dense oracle supports 3..12 parties");
    }
    TrialReport report{"theorem1", parties, trials, 0, 0.0, seed};
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(trial));
        bool ok = true;
        try {
            const WCanonical w = random_canonical(parties, rng);
            const SloccForm triangular = slocc_form_of(w);
            std::vector<LocalOperator> ops;
            for (const auto &b : triangular.ops()) {
                ops.push_back(random_unitary_2(rng) * b);
            }
            const SloccForm rotated = SloccForm::make(std::move(ops));

            // Route 1: closed-form canonicalization, no dense vectors.
            const Canonicalization result = canonicalize_slocc(rotated);
            const double coefficient_gap = result.canonical.max_difference(w);

            // Route 2: dense tensor algebra on the same state.
            const PureState dense = rotated.to_state();
            const double witness_gap = witness_residual(result.witness, w.to_state(), dense);
            const double profile_gap = profile_distance(invariant_profile_from_state(dense), invariant_profile(w));

            report.worst_error = std::max({report.worst_error, coefficient_gap, witness_gap, profile_gap});
            ok = coefficient_gap <= kCoefficientTol && witness_gap <= kWitnessTol && profile_gap <= kProfileTol;
        } catch (const Error &) {
            ok = false;
        }
        report.failures += ok ? 0 : 1;
    }
    return report;
}

TrialReport verify_lemma2(int parties, int trials, int grid_points, std::uint64_t seed) {
    if (parties < kMinWParties) {
        throw Error(ErrorKind::InvalidArity, "uniqueness checks need at least 3 parties");
    }
    TrialReport report{"lemma2", parties, trials, 0, 0.0, seed};
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(trial));
        bool ok = true;
        try {
            const WCanonical w = random_canonical(parties, rng);
            const auto targets = ReconstructionTargets::from_profile(invariant_profile(w));
            const auto solutions = uniqueness_scan(targets, grid_points);
            if (solutions.size() != 1) {
                ok = false;
            } else {
                const double gap = solutions.front().max_difference(w);
                report.worst_error = std::max(report.worst_error, gap);
                ok = gap <= kCoefficientTol;
            }
        } catch (const Error &) {
            ok = false;
        }
        report.failures += ok ? 0 : 1;
    }
    return report;
}

}  // namespace wtype
