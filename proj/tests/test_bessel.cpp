// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/bessel.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

using mox::Cx;

namespace {

// independent K oracle: adaptive Simpson on the cosh-integral, real order
double k_oracle_real_order(double nu, double x) {
    return mox_test::adaptive_simpson(
        [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); }, 0.0,
        std::acosh(745.0 / x) + 1.0, 1e-15);
}

// independent J oracle: trapezoid on (1/2pi) int_0^{2pi} cos(n t - x sin t) dt,
// geometrically convergent for this periodic analytic integrand
double j_oracle(int n, double x) {
    const int m = 2 * int(n + x) + 400;
    double s = 0.0;
    for (int k = 0; k < m; ++k) {
        const double t = mox::kTwoPi * k / m;
        s += std::cos(n * t - x * std::sin(t));
    }
    return s / m;
}

}  // namespace

TEST_CASE("bessel_k: half order closed form") {
    // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
    const double want = std::sqrt(mox::kPi / 2.0) * std::exp(-1.0);
    const Cx got = mox::bessel_k(Cx(0.5), 1.0);
    CHECK(std::abs(got - want) / want < 1e-12);
    CHECK(std::abs(got - k_oracle_real_order(0.5, 1.0)) / want < 1e-12);

    for (double x = 0.1; x <= 20.0; x *= 1.45) {
        const double cf = std::sqrt(mox::kPi / (2.0 * x)) * std::exp(-x);
        CHECK(std::abs(mox::bessel_k(Cx(0.5), x) - cf) / cf < 1e-10);
    }
}

TEST_CASE("bessel_k: even in the order, exactly") {
    for (Cx nu : {Cx(0.7, 0.0), Cx(0.3, 1.1), Cx(0.0, 2.0), Cx(1.5, -0.4)}) {
        for (double x : {0.2, 1.0, 5.0}) {
            const Cx a = mox::bessel_k(nu, x);
            const Cx b = mox::bessel_k(-nu, x);
            CHECK(a.real() == b.real());
            CHECK(a.imag() == b.imag());
        }
    }
}

TEST_CASE("bessel_k: zero order against tight quadrature oracle") {
    const double oracle = k_oracle_real_order(0.0, 1.0);
    const Cx got = mox::bessel_k(Cx(0.0), 1.0);
    CHECK(std::abs(got - oracle) / oracle < 1e-12);
    CHECK(std::abs(got.imag()) < 1e-15);
}

TEST_CASE("bessel_k: imaginary order is real and matches oracle") {
    // K_{i b}(x) real for real x > 0
    auto oracle = [](double b, double x) {
        return mox_test::adaptive_simpson(
            [&](double t) { return std::exp(-x * std::cosh(t)) * std::cos(b * t); }, 0.0,
            std::acosh(745.0 / x) + 1.0, 1e-15);
    };
    for (double b : {0.2, 1.0, 4.0}) {
        for (double x : {0.5, 2.0, 10.0}) {
            const Cx got = mox::bessel_k(Cx(0.0, b), x);
            CHECK(std::abs(got.imag()) < 1e-12 * std::abs(got.real()) + 1e-15);
            const double want = oracle(b, x);
            CHECK(std::abs(got.real() - want) < 1e-10 * std::abs(want) + 1e-14);
        }
    }
}

TEST_CASE("bessel_k: domain and failure contracts") {
    CHECK_THROWS_AS((void)mox::bessel_k(Cx(0.0), -1.0), mox::DomainError);
    CHECK_THROWS_AS((void)mox::bessel_k(Cx(0.0, 101.0), 1.0), mox::DomainError);
    // strong cancellation: imaginary order ~40 at small x needs ~e^{pi*40/2}
    // of cancellation, far beyond double; with a purely relative tolerance the
    // call must refuse rather than return noise
    CHECK_THROWS_AS((void)mox::bessel_k(Cx(0.0, 40.0), 1e-3,
                                        mox::QuadratureSpec{1e-10, 1e-300, 4000}),
                    mox::QuadratureError);
}

TEST_CASE("bessel_j: base cases and parity") {
    CHECK(mox::bessel_j(0, 0.0) == 1.0);
    CHECK(mox::bessel_j(3, 0.0) == 0.0);
    for (double x : {0.3, 2.0, 9.5, 40.0}) {
        CHECK(mox::bessel_j(-3, x) == -mox::bessel_j(3, x));
        CHECK(mox::bessel_j(-4, x) == mox::bessel_j(4, x));
    }
}

TEST_CASE("bessel_j: power-series oracle at small argument") {
    // independent series: J_1(1)
    double term = 0.5, sum = 0.5;  // (x/2)^1 / 1!
    for (int k = 1; k < 30; ++k) {
        term *= -0.25 / (double(k) * double(k + 1));
        sum += term;
    }
    CHECK(std::abs(mox::bessel_j(1, 1.0) - sum) < 1e-12);
}

TEST_CASE("bessel_j: matches trapezoid oracle across regimes") {
    struct Probe { int n; double x; };
    for (auto [n, x] : {Probe{0, 1.0}, Probe{0, 11.9}, Probe{0, 12.1}, Probe{2, 35.0},
                        Probe{7, 150.0}, Probe{40, 40.0}, Probe{500, 1000.0},
                        Probe{1000, 9000.0}}) {
        CHECK(std::abs(mox::bessel_j(n, x) - j_oracle(n, x)) < 1e-10);
    }
}

TEST_CASE("bessel_j: deep evanescent regime underflows to zero") {
    CHECK(std::abs(mox::bessel_j(1000, 10.0)) < 1e-300);
    CHECK(std::abs(mox::bessel_j(9000, 30.0)) == 0.0);
}
