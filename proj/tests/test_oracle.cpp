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

#include <cmath>

#include "doctest.h"
#include "wtype/error.hpp"
#include "wtype/oracle.hpp"

using namespace wtype;

TEST_SUITE("oracle") {

TEST_CASE("generator streams are deterministic") {
    Rng a(123), b(123), c(124);
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next_u64();
        CHECK(va == b.next_u64());
        CHECK(va != c.next_u64());
    }
    Rng t1 = Rng::for_trial(5, 0), t2 = Rng::for_trial(5, 1), t1b = Rng::for_trial(5, 0);
    const auto first = t1.next_u64();
    CHECK(first == t1b.next_u64());
    CHECK(first != t2.next_u64());
    Rng u(9);
    for (int i = 0; i < 10000; ++i) {
        const double x = u.uniform();
        CHECK((x >= 0.0 && x < 1.0));
    }
}

TEST_CASE("xoshiro256** reference sequence") {
    // First outputs for seed 0 through SplitMix64 seeding, frozen to catch
    // accidental algorithm changes that would break fixture reproducibility.
    Rng rng(0);
    const std::uint64_t first = rng.next_u64();
    Rng again(0);
    CHECK(again.next_u64() == first);
    std::uint64_t state = 0;
    CHECK(splitmix64(state) == 0xe220a8397b1dcdafULL);
    CHECK(splitmix64(state) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("random_canonical contract") {
    const auto a = random_canonical(5, std::uint64_t{77});
    const auto b = random_canonical(5, std::uint64_t{77});
    CHECK(a.max_difference(b) == 0.0);
    CHECK_THROWS_AS(random_canonical(2, std::uint64_t{1}), Error);
    for (int trial = 0; trial < 10000; ++trial) {
        Rng rng = Rng::for_trial(81, static_cast<std::uint64_t>(trial));
        const auto w = random_canonical(3, rng);
        double total = w.u();
        for (double c : w.c()) {
            CHECK(c >= kCoefficientFloor);
            total += c;
        }
        CHECK(std::abs(total - 1.0) <= 1e-12);
        for (double d : invariant_profile(w).dets) CHECK(d > 0.0);
    }
}

TEST_CASE("random_unitary_2 is unitary and Haar-like") {
    CHECK(max_abs_difference(random_unitary_2(std::uint64_t{3}), random_unitary_2(std::uint64_t{3})) == 0.0);
    Rng rng(91);
    double mean = 0.0;
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
        const auto u = random_unitary_2(rng);
        CHECK(u.unitarity_error() <= 1e-12);
        mean += std::norm(u(0, 0));
    }
    mean /= samples;
    CHECK(std::abs(mean - 0.5) <= 0.02);
}

TEST_CASE("random_invertible_2 feeds canonicalize_slocc") {
    CHECK(max_abs_difference(random_invertible_2(std::uint64_t{4}), random_invertible_2(std::uint64_t{4})) == 0.0);
    Rng rng(97);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<LocalOperator> ops;
        for (int k = 0; k < 4; ++k) {
            ops.push_back(random_invertible_2(rng));
            CHECK(std::abs(ops.back().determinant()) >= kMinInvertibleDet);
        }
        const auto form = SloccForm::make(ops);
        const auto r = canonicalize_slocc(form);
        CHECK(witness_residual(r.witness, r.canonical.to_state(), form.to_state()) <= 1e-9);
    }
}

TEST_CASE("slocc_form_of reproduces the canonical state") {
    const auto w = WCanonical::make(0.1, {0.5, 0.3, 0.1});
    const auto form = slocc_form_of(w);
    CHECK(state_distance(form.to_state(), w.to_state()) <= 1e-15);
    CHECK(canonicalize_slocc(form).canonical.max_difference(w) <= 1e-15);
}

TEST_CASE("verify_theorem1") {
    const auto r3 = verify_theorem1(3, 200, 1);
    CHECK(r3.failures == 0);
    CHECK(r3.trials == 200);
    CHECK(r3.worst_error <= 1e-9);
    CHECK(r3.worst_error > 0.0);
    const auto r12 = verify_theorem1(12, 5, 1);
    CHECK(r12.failures == 0);
    const auto again = verify_theorem1(3, 200, 1);
    CHECK(again.worst_error == r3.worst_error);
    CHECK_THROWS_AS(verify_theorem1(13, 1, 1), Error);
    CHECK_THROWS_AS(verify_theorem1(2, 1, 1), Error);
}

TEST_CASE("verify_lemma2") {
    const auto r = verify_lemma2(3, 100, 10000, 2);
    CHECK(r.failures == 0);
    CHECK(r.worst_error <= 1e-9);
    const auto r8 = verify_lemma2(8, 20, 10000, 2);
    CHECK(r8.failures == 0);
    CHECK(verify_lemma2(3, 0, 10000, 2).trials == 0);
}

}  // TEST_SUITE
