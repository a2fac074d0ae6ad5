// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/padic.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

TEST_CASE("cell_index: closed form and coarse bound") {
    CHECK(mox::cell_index(7, 0) == 1);
    CHECK(mox::cell_index(2, 1) == 3);
    CHECK(mox::cell_index(3, 2) == 12);
    for (long long q : {2, 3, 5, 7})
        for (int ell = 1; ell <= 6; ++ell) {
            long long coarse = q * q;
            for (int i = 1; i < ell; ++i) coarse *= q;
            CHECK(mox::cell_index(q, ell) <= coarse);  // (q+1)q^{l-1} <= q^{l+1}
        }
}

TEST_CASE("cell_index equals the exhaustive subgroup enumeration") {
    for (long long p : {2, 3, 5})
        for (int ell = 1; ell <= 3; ++ell)
            CHECK(mox::brute_force_cell_count(p, ell) == mox::cell_index(p, ell));
}

TEST_CASE("local_norm_integral: closed forms and the Appendix bound") {
    const auto a = mox::local_norm_integral(2, 3.0);
    CHECK(a.exact == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(a.paper_bound == doctest::Approx(2.0).epsilon(1e-14));

    const auto b = mox::local_norm_integral(3, 2.0);
    CHECK(b.exact == doctest::Approx(1.0 + 4.0 / 9.0 / (2.0 / 3.0)).epsilon(1e-14));
    CHECK(b.paper_bound == doctest::Approx(3.0).epsilon(1e-14));

    // direct ell-summation oracle
    for (long long q : {2, 3, 5, 7}) {
        for (double sigma : {1.5, 2.0, 3.0, 5.0}) {
            double direct = 1.0;
            for (int ell = 1; ell < 4000; ++ell) {
                // (q+1) q^{ell-1} in floating form (the integer cell count
                // overflows long long far before the series tail vanishes)
                const double term =
                    (double(q) + 1.0) * std::pow(double(q), double(ell - 1) - sigma * ell);
                direct += term;
                if (term < 1e-17 * direct) break;
            }
            const auto ni = mox::local_norm_integral(q, sigma);
            CHECK(std::abs(ni.exact - direct) < 1e-12 * direct);
            CHECK(ni.exact <= ni.paper_bound);
        }
    }

    // monotone decreasing in sigma, tends to 1
    double prev = 1e300;
    for (double sigma : {1.2, 1.5, 2.0, 3.0, 6.0, 12.0}) {
        const double cur = mox::local_norm_integral(2, sigma).exact;
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(mox::local_norm_integral(2, 40.0).exact == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS((void)mox::local_norm_integral(2, 1.0), mox::DivergenceError);
}

TEST_CASE("global product vs zeta closed form") {
    const auto chk = mox::global_norm_product_check(3.0, 3.0, 100000);
    CHECK(std::abs(chk.zeta_form - 1.4203083035) < 1e-9);
    CHECK(chk.gap < 1e-6);

    // doubling the cutoff strictly shrinks the gap
    const auto lo = mox::global_norm_product_check(2.0, 2.5, 2000);
    const auto hi = mox::global_norm_product_check(2.0, 2.5, 4000);
    CHECK(hi.gap < lo.gap);

    // a = b telescopes per factor to zeta(a)^2/zeta(2a): same closed form
    const auto tele = mox::global_norm_product_check(2.0, 2.0, 50000);
    CHECK(tele.gap < 1e-4);
}

TEST_CASE("archimedean analog: closed form against quadrature") {
    for (int d : {1, 2}) {
        for (double sigma : {double(d) + 1.5, double(d) + 3.0, 9.0}) {
            const double cf = mox::arch_norm_integral_closed(d, sigma);
            const double quad = mox::arch_norm_integral_quadrature(d, sigma);
            CHECK(std::abs(cf - quad) < 1e-10 * cf);
        }
    }
    CHECK_THROWS_AS((void)mox::arch_norm_integral_closed(1, 2.0), mox::DivergenceError);
}

TEST_CASE("norm axioms on sampled matrices: submultiplicativity, symmetry") {
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<int> entry(-9, 9);
    int tested = 0;
    while (tested < 500) {
        double g[4], h[4], gh[4];
        for (double* mm : {g, h})
            for (int i = 0; i < 4; ++i) mm[i] = double(entry(rng));
        if (g[0] * g[3] - g[1] * g[2] == 0.0 || h[0] * h[3] - h[1] * h[2] == 0.0) continue;
        gh[0] = g[0] * h[0] + g[1] * h[2];
        gh[1] = g[0] * h[1] + g[1] * h[3];
        gh[2] = g[2] * h[0] + g[3] * h[2];
        gh[3] = g[2] * h[1] + g[3] * h[3];
        const double ng = mox::pgl2_norm(g), nh = mox::pgl2_norm(h), ngh = mox::pgl2_norm(gh);
        CHECK(ngh <= ng * nh * (1.0 + 1e-12));
        CHECK(ng >= 1.0 - 1e-13);
        // ||g^{-1}|| = ||g||: for det-normalized 2x2, the inverse swaps the
        // singular values
        double ginv[4] = {g[3], -g[1], -g[2], g[0]};
        CHECK(std::abs(mox::pgl2_norm(ginv) - ng) < 1e-10 * ng);
        ++tested;
    }
}
