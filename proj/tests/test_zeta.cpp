// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/zeta.hpp"

#include <cmath>

#include "doctest.h"
#include "mox/gamma.hpp"

using mox::Cx;

namespace {

double rel_err(Cx got, Cx want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Riemann-Siegel theta via the library log_gamma; Z(t) = e^{i theta} zeta is
// real on the critical line, so its sign changes bracket zeros.
double hardy_z(double t) {
    const Cx lg = mox::log_gamma(Cx(0.25, 0.5 * t));
    const double theta = lg.imag() - 0.5 * t * std::log(mox::kPi);
    const Cx z = std::exp(Cx(0.0, theta)) * mox::zeta(Cx(0.5, t));
    return z.real();
}

}  // namespace

TEST_CASE("zeta: even integer closed forms") {
    CHECK(rel_err(mox::zeta(Cx(2.0)), Cx(mox::kPi * mox::kPi / 6.0)) < 1e-12);
    CHECK(rel_err(mox::zeta(Cx(6.0)), Cx(std::pow(mox::kPi, 6) / 945.0)) < 1e-12);
}

TEST_CASE("zeta: independent Euler-Maclaurin-free partial-sum oracle at s=3") {
    // direct Dirichlet sum with integral tail bracket:
    // sum_{n<=N} n^-3 + 1/(2 N^2) lies within 1/N^3 of zeta(3)
    const int N = 4000;
    double s = 0.0;
    for (int n = N; n >= 1; --n) s += 1.0 / (double(n) * n * n);
    const double oracle = s + 0.5 / (double(N) * N);
    CHECK(std::abs(mox::zeta(Cx(3.0)).real() - oracle) < 2.0 / (double(N) * N * N));
}

TEST_CASE("zeta: first nontrivial zero located by sign-change bisection") {
    double lo = 14.0, hi = 14.3;
    REQUIRE(hardy_z(lo) * hardy_z(hi) < 0.0);
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (hardy_z(lo) * hardy_z(mid) <= 0.0 ? hi : lo) = mid;
    }
    const double t0 = 0.5 * (lo + hi);
    CHECK(std::abs(t0 - 14.134725) < 2e-6);
    CHECK(std::abs(mox::zeta(Cx(0.5, 14.134725))) < 1e-6);
}

TEST_CASE("zeta: functional equation across the critical strip") {
    for (double sigma : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double t : {0.4, 3.0, 14.2, 45.0, 300.0, 2500.0}) {
            const Cx s(sigma, t);
            const Cx lhs = mox::zeta(s);
            // prefactor assembled in log space (sin and Gamma overflow
            // separately for t in the thousands, their product does not)
            const Cx log_pref = s * std::log(2.0) + (s - 1.0) * std::log(mox::kPi) +
                                mox::log_sin_pi(0.5 * s) + mox::log_gamma(1.0 - s);
            const Cx rhs = std::exp(log_pref) * mox::zeta(1.0 - s);
            CHECK(rel_err(lhs, rhs) < 1e-8);
        }
    }
}

TEST_CASE("zeta: error contracts") {
    CHECK_THROWS_AS((void)mox::zeta(Cx(1.0)), mox::PoleError);
    CHECK_THROWS_AS((void)mox::zeta(Cx(0.5, 2.0e4)), mox::DomainError);
}
