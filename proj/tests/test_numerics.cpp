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
#include <complex>

#include "doctest.h"
#include "support/oracles.hpp"
#include "wtype/error.hpp"
#include "wtype/numerics.hpp"
#include "wtype/oracle.hpp"

using namespace wtype;

namespace {

void check_factorization_contract(const LocalOperator &a, const TriangularFactorization &f, double tol) {
    CHECK(max_abs_difference(f.unitary * f.upper, a) <= tol);
    CHECK(f.unitary.is_unitary(1e-12));
    CHECK(f.upper(1, 0) == complex(0.0, 0.0));
    CHECK(f.upper(0, 0).imag() == 0.0);
    CHECK(f.upper(1, 1).imag() == 0.0);
    CHECK(f.upper(0, 0).real() >= 0.0);
    CHECK(f.upper(1, 1).real() >= 0.0);
}

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("qr_2x2 of the identity") {
    const auto f = qr_2x2(LocalOperator::identity());
    CHECK(max_abs_difference(f.unitary, LocalOperator::identity()) == 0.0);
    CHECK(max_abs_difference(f.upper, LocalOperator::identity()) == 0.0);
}

TEST_CASE("qr_2x2 of the shear [[1,0],[1,1]]") {
    const LocalOperator a(1.0, 0.0, 1.0, 1.0);
    const auto f = qr_2x2(a);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_difference(f.unitary, LocalOperator(s, -s, s, s)) < 1e-15);
    CHECK(max_abs_difference(f.upper, LocalOperator(std::sqrt(2.0), s, 0.0, s)) < 1e-15);
    check_factorization_contract(a, f, 1e-15);
}

TEST_CASE("qr_2x2 pulls a diagonal phase into the unitary") {
    const double theta = 0.7;
    const LocalOperator a = LocalOperator::diagonal(2.0, std::polar(3.0, theta));
    const auto f = qr_2x2(a);
    CHECK(max_abs_difference(f.unitary, LocalOperator::diagonal(1.0, std::polar(1.0, theta))) < 1e-15);
    CHECK(max_abs_difference(f.upper, LocalOperator::diagonal(2.0, 3.0)) < 1e-15);
}

TEST_CASE("qr_2x2 rejects singular input") {
    CHECK_THROWS_AS(qr_2x2(LocalOperator(1.0, 2.0, 2.0, 4.0)), Error);
    try {
        qr_2x2(LocalOperator(0.0, 0.0, 0.0, 1.0));
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::SingularOperator);
    }
}

TEST_CASE("qr_2x2 agrees with Gram-Schmidt and keeps its contract on random inputs") {
    Rng rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        const double scale = std::pow(10.0, 3.0 * rng.uniform());
        LocalOperator a;
        do {
            a = LocalOperator(complex(rng.normal(), rng.normal()) * scale, complex(rng.normal(), rng.normal()) * scale,
                              complex(rng.normal(), rng.normal()) * scale, complex(rng.normal(), rng.normal()) * scale);
        } while (std::abs(a.determinant()) < 1e-6 * scale * scale);
        const auto f = qr_2x2(a);
        check_factorization_contract(a, f, 1e-12 * std::max(1.0, scale));
        CHECK(std::abs(std::abs(f.upper.determinant()) - std::abs(a.determinant())) <=
              1e-10 * std::abs(a.determinant()));

        const auto [q, r] = testing::gram_schmidt_qr({{a(0, 0), a(0, 1)}, {a(1, 0), a(1, 1)}});
        CHECK(std::abs(f.unitary(0, 0) - q[0][0]) < 1e-9);
        CHECK(std::abs(f.upper(0, 1) - r[0][1]) < 1e-9 * scale);
        CHECK(std::abs(f.upper(1, 1) - r[1][1]) < 1e-9 * scale);
    }
}

TEST_CASE("qr_2x2 absolute error for entries up to 1e3") {
    Rng rng(99);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        LocalOperator a;
        do {
            auto e = [&] { return complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0) * 1e3; };
            a = LocalOperator(e(), e(), e(), e());
        } while (std::abs(a.determinant()) <= 1e-12);
        const auto f = qr_2x2(a);
        worst = std::max(worst, max_abs_difference(f.unitary * f.upper, a));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("bisect_decreasing: linear function") {
    const auto r = bisect_decreasing([](double y) { return 1.0 - y; }, 0.0, 2.0, 1e-12);
    REQUIRE(r.root);
    CHECK(std::abs(*r.root - 1.0) <= 1e-12);
    CHECK(r.converged);
    CHECK(r.lo <= *r.root);
    CHECK(*r.root <= r.hi);
}

TEST_CASE("bisect_decreasing: f for the symmetric W targets") {
    const std::vector<double> x(3, 8.0 / 9.0);
    const auto f = [&](double y) { return testing::f_quotient(y, x); };
    const auto r = bisect_decreasing(f, std::sqrt(8.0 / 9.0), 1.5, 1e-12);
    REQUIRE(r.root);
    CHECK(std::abs(*r.root - 1.0) <= 1e-12);
}

TEST_CASE("bisect_decreasing: missing bracket") {
    try {
        bisect_decreasing([](double) { return -1.0; }, 0.0, 1.0, 1e-12);
        FAIL("expected NoBracket");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NoBracket);
    }
    CHECK_THROWS_AS(bisect_decreasing([](double y) { return -y; }, 1.0, 0.0, 1e-12), Error);
}

TEST_CASE("bisect_decreasing reports a capped run as unconverged") {
    const auto r = bisect_decreasing([](double y) { return 0.3 - y; }, 0.0, 1.0, 0.0, 5);
    CHECK_FALSE(r.converged);
    CHECK_FALSE(r.root);
    CHECK(r.iterations == 5);
}

TEST_CASE("bisect_decreasing on random decreasing functions straddles zero") {
    Rng rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const double root = 0.1 + 0.8 * rng.uniform();
        const double slope = 0.1 + 10.0 * rng.uniform();
        const double curve = rng.uniform();
        const auto fn = [&](double y) { return -slope * (y - root) - curve * (y - root) * (y - root) * (y - root); };
        const auto r = bisect_decreasing(fn, 0.0, 1.0, 1e-12);
        REQUIRE(r.root);
        CHECK(fn(r.lo) >= 0.0);
        CHECK(fn(r.hi) <= 0.0);
        CHECK(std::abs(*r.root - root) <= 1e-11);
    }
}

TEST_CASE("scan_sign_changes: single crossing") {
    int calls = 0;
    const auto brackets = scan_sign_changes(
        [&](double y) {
            ++calls;
            return y * y - 1.0;
        },
        0.0, 2.0, 101);
    CHECK(calls == 101);
    REQUIRE(brackets.size() == 1);
    CHECK(brackets[0].first <= 1.0);
    CHECK(brackets[0].second >= 1.0);
}

TEST_CASE("scan_sign_changes locates the root of g") {
    const std::vector<double> x{0.8, 0.72, 0.32};
    CHECK(std::abs(testing::g_literal(0.9, x, 0)) < 1e-15);
    const auto brackets =
        scan_sign_changes([&](double y) { return testing::g_literal(y, x, 0); }, std::sqrt(0.8), 1.0, 10000);
    REQUIRE(brackets.size() == 1);
    CHECK(brackets[0].first <= 0.9);
    CHECK(brackets[0].second >= 0.9);
}

TEST_CASE("scan_sign_changes: g positive throughout") {
    const std::vector<double> x{0.9, 0.05, 0.05};
    const auto g = [&](double y) { return testing::g_literal(y, x, 0); };
    CHECK(g(std::sqrt(0.9)) == doctest::Approx(0.895).epsilon(1e-3));
    CHECK(g(1.0) == doctest::Approx(2.0 * std::sqrt(0.95) - std::sqrt(0.1) - 1.0).epsilon(1e-14));
    CHECK(scan_sign_changes(g, std::sqrt(0.9), 1.0, 10000).empty());
}

TEST_CASE("scan_sign_changes edge cases") {
    CHECK(scan_sign_changes([](double) { return 1.0; }, 0.0, 1.0, 2).empty());
    CHECK(scan_sign_changes([](double y) { return y; }, 0.0, 0.0, 10, 0.0).size() == 1);
    // A zero at the left endpoint opens exactly one bracket.
    CHECK(scan_sign_changes([](double y) { return -y; }, 0.0, 1.0, 5).size() == 1);
    CHECK_THROWS_AS(scan_sign_changes([](double y) { return y; }, 0.0, 1.0, 1), Error);
}

}  // TEST_SUITE
