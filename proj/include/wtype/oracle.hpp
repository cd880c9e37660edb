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

// Seeded generators and brute-force verifiers for the W-class results.
//
// Randomness comes from xoshiro256** seeded through SplitMix64. Trial t of
// a run seeded with s draws from its own stream Rng::for_trial(s, t), so
// reports are reproducible bit-for-bit and independent of trial order.

#include <array>
#include <cstdint>
#include <string>

#include "wtype/qstate.hpp"
#include "wtype/reconstruct.hpp"
#include "wtype/wclass.hpp"

namespace wtype {

class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();

  private:
    std::array<std::uint64_t, 4> s_{};
};

/// SplitMix64 finalizer; also used to derive per-trial seeds.
std::uint64_t splitmix64(std::uint64_t &state);

inline constexpr double kCoefficientFloor = 1e-3;
inline constexpr double kMinInvertibleDet = 0.05;
inline constexpr int kDenseOracleMaxParties = 12;

/// Uniform on the simplex {u + sum c = 1}, rejecting draws with some c_k below 1e-3.
WCanonical random_canonical(int parties, Rng &rng);
WCanonical random_canonical(int parties, std::uint64_t seed);

/// Haar 2x2 unitary: unitary factor of a Ginibre matrix under the
/// nonnegative-diagonal QR convention.
LocalOperator random_unitary_2(Rng &rng);
LocalOperator random_unitary_2(std::uint64_t seed);

/// Ginibre 2x2 matrix, resampled until |det| >= 0.05.
LocalOperator random_invertible_2(Rng &rng);
LocalOperator random_invertible_2(std::uint64_t seed);

/// Triangular SLOCC factors B_k = [[1, sqrt(u/n)], [0, sqrt(n c_k)]] with
/// (x) B_k |W>_n proportional to the canonical state of w.
SloccForm slocc_form_of(const WCanonical &w);

struct TrialReport {
    std::string name;
    int parties = 0;
    int trials = 0;
    int failures = 0;
    double worst_error = 0.0;
    std::uint64_t seed = 0;
};

/// Per trial: random w and unitaries U_k; recanonicalizes (x) U_k B_k |W>_n
/// through the SLOCC path and compares with w (<= 1e-9); checks the witness
/// reproduces the dense state (<= 1e-9) and the dense partial-trace profile
/// against the closed form (<= 1e-10). Requires 3 <= n <= 12.
TrialReport verify_theorem1(int parties, int trials, std::uint64_t seed);

/// Per trial: random w, targets 4 * profile(w), uniqueness scan; the trial
/// passes iff exactly one solution comes back and it matches w (<= 1e-9).
TrialReport verify_lemma2(int parties, int trials, int grid_points, std::uint64_t seed);

}  // namespace wtype
