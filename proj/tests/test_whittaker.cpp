// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/whittaker.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "mox/bessel.hpp"
#include "mox/gamma.hpp"

using mox::Cx;
using mox::DifferentalData;
using mox::LocalCharacter;
using mox::LocalSatakeData;
using mox::PlaceType;

namespace {

double rel_err(Cx got, Cx want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_CASE("local_l_factor: geometric-series values") {
    LocalCharacter triv;
    CHECK(rel_err(mox::local_l_factor(triv, 2, Cx(2.0)), Cx(4.0 / 3.0)) < 1e-15);
    CHECK(rel_err(mox::local_l_factor(triv, 3, Cx(1.0)), Cx(1.5)) < 1e-15);
    LocalCharacter ramified{Cx(0.0)};
    CHECK(mox::local_l_factor(ramified, 2, Cx(2.0)) == Cx(1.0));
    LocalCharacter at_pole{Cx(4.0)};
    CHECK_THROWS_AS((void)mox::local_l_factor(at_pole, 2, Cx(2.0)), mox::PoleError);
}

TEST_CASE("casselman_shalika: support, limit case, direct values") {
    LocalSatakeData triv{2, Cx(1.0), Cx(1.0)};
    CHECK(mox::casselman_shalika(triv, -1) == Cx(0.0));
    CHECK(rel_err(mox::casselman_shalika(triv, 1), Cx(std::sqrt(2.0))) < 1e-14);

    LocalSatakeData generic{4, Cx(2.0), Cx(0.5)};
    // q^{-1} (alpha^3 - beta^3)/(alpha - beta) = (8 - 1/8)/(4 * 1.5) = 1.3125
    CHECK(rel_err(mox::casselman_shalika(generic, 2), Cx(1.3125)) < 1e-14);
    // symmetric-polynomial oracle: alpha^2 + alpha beta + beta^2, scaled
    const Cx oracle = (Cx(4.0) + Cx(1.0) + Cx(0.25)) / 4.0;
    CHECK(rel_err(mox::casselman_shalika(generic, 2), oracle) < 1e-14);
}

TEST_CASE("casselman_shalika: degenerate limit consistent with perturbed parameters") {
    LocalSatakeData near_deg{3, Cx(0.8, 0.6), Cx(0.8, 0.6) + Cx(5e-9, 0.0)};
    LocalSatakeData perturbed{3, Cx(0.8, 0.6) * Cx(1.0 + 1e-6), Cx(0.8, 0.6) / Cx(1.0 + 1e-6)};
    for (long long m : {0LL, 1LL, 3LL, 7LL}) {
        const Cx lim = mox::casselman_shalika(near_deg, m);
        const Cx pert = mox::casselman_shalika(perturbed, m);
        CHECK(rel_err(lim, pert) < 1e-5);
    }
}

TEST_CASE("casselman_shalika: Hecke recursion holds to machine precision") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> mag(0.5, 1.8);
    std::uniform_real_distribution<double> arg(-3.1, 3.1);
    for (int trial = 0; trial < 100; ++trial) {
        const Cx a = std::polar(mag(rng), arg(rng));
        const Cx b = std::polar(mag(rng), arg(rng));
        const long long q = 2 + (rng() % 5);
        LocalSatakeData d{q, a, b};
        const double rq = 1.0 / std::sqrt(double(q));
        for (long long m = 1; m <= 6; ++m) {
            const Cx lhs = mox::casselman_shalika(d, m + 1);
            const Cx rhs = (a + b) * rq * mox::casselman_shalika(d, m) -
                           a * b / double(q) * mox::casselman_shalika(d, m - 1);
            CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
        }
    }
}

TEST_CASE("hecke_local_integral: closed forms and limits") {
    // alpha = beta = 1, q = 2, s = 2: sum (m+1) 4^{-m} = 16/9
    LocalSatakeData triv{2, Cx(1.0), Cx(1.0)};
    auto r = mox::hecke_local_integral(triv, Cx(2.0), 80);
    CHECK(rel_err(r.value, Cx(16.0 / 9.0)) < 1e-12);
    CHECK(r.tail_bound < 1e-12);

    LocalSatakeData alt{2, Cx(-1.0), Cx(-1.0)};
    auto r2 = mox::hecke_local_integral(alt, Cx(2.0), 80);
    CHECK(rel_err(r2.value, Cx(0.64)) < 1e-12);

    // s large: only m = 0 survives
    auto r3 = mox::hecke_local_integral(triv, Cx(30.0), 40);
    CHECK(rel_err(r3.value, Cx(1.0)) < 1e-8);

    CHECK_THROWS_AS((void)mox::hecke_local_integral(triv, Cx(-0.3), 40),
                    mox::DivergenceError);
}

TEST_CASE("hecke_local_integral: equals the product of two Euler factors") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> arg(-3.1, 3.1);
    std::uniform_real_distribution<double> sig(1.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const long long q = 2 + (rng() % 4);
        const Cx a = std::polar(1.0, arg(rng));  // unitary Satake
        const Cx b = std::polar(1.0, arg(rng));
        const Cx s(sig(rng), arg(rng));
        LocalSatakeData d{q, a, b};
        const Cx qs = std::exp(-s * std::log(double(q)));
        const Cx closed = 1.0 / ((1.0 - a * qs) * (1.0 - b * qs));
        auto got = mox::hecke_local_integral(d, s, 90);
        CHECK(std::abs(got.value - closed) < 1e-10 * std::abs(closed) + got.tail_bound);
        CHECK(rel_err(got.value, closed) < 1e-10 + got.tail_bound / std::abs(closed));
    }
}

TEST_CASE("local_moment_factor: double sum against the stated L-factor product") {
    // the worked case: trivial Satake, chi0 = |.|^v with q^{-v} = 1/4, chi trivial
    LocalSatakeData f{2, Cx(1.0), Cx(1.0)};
    LocalCharacter chi0{Cx(0.25)};
    LocalCharacter chi{Cx(1.0)};
    const Cx expect = 1.0 / ((1.0 - std::pow(2.0, -2.5)) * (1.0 - std::pow(2.0, -2.5))) /
                      ((1.0 - std::pow(2.0, -0.5)) * (1.0 - std::pow(2.0, -0.5)));
    auto got = mox::local_moment_factor(f, f, chi0, chi, 200);
    CHECK(rel_err(got.value, expect) < 1e-10);
    CHECK(rel_err(mox::local_moment_factor_closed(f, f, chi0, chi), expect) < 1e-14);

    // random unitary draws
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> arg(-3.1, 3.1);
    for (int trial = 0; trial < 30; ++trial) {
        const long long q = 2 + (rng() % 4);
        LocalSatakeData f1{q, std::polar(1.0, arg(rng)), std::polar(1.0, arg(rng))};
        LocalSatakeData f2{q, std::polar(1.0, arg(rng)), std::polar(1.0, arg(rng))};
        LocalCharacter c0{std::polar(0.4, arg(rng))};  // |.|^v twist folded in
        LocalCharacter c1{std::polar(1.0, arg(rng))};
        auto sum = mox::local_moment_factor(f1, f2, c0, c1, 220);
        const Cx closed = mox::local_moment_factor_closed(f1, f2, c0, c1);
        CHECK(std::abs(sum.value - closed) < 1e-10 * std::abs(closed) + sum.tail_bound);
    }

    // relabeling symmetry: swapping the roles of (f1, chi0 chi^{-1}) and
    // (f2, chi) leaves the product unchanged; with conj_fi = conjugate Satake
    // data, the swapped call is (conj f2, conj f1, chi0, chi0 chi^{-1})
    LocalSatakeData g1{3, std::polar(1.0, 0.4), std::polar(1.0, -1.1)};
    LocalSatakeData g2{3, std::polar(1.0, 2.0), std::polar(1.0, -2.0)};
    LocalCharacter cc0{std::polar(0.5, 0.7)};
    LocalCharacter cc{std::polar(1.0, -0.9)};
    LocalSatakeData g1bar{3, std::conj(g1.alpha), std::conj(g1.beta)};
    LocalSatakeData g2bar{3, std::conj(g2.alpha), std::conj(g2.beta)};
    LocalCharacter swapped_chi{cc0.value_at_uniformizer / cc.value_at_uniformizer};
    const Cx direct = mox::local_moment_factor_closed(g1, g2, cc0, cc);
    const Cx swapped = mox::local_moment_factor_closed(g2bar, g1bar, cc0, swapped_chi);
    CHECK(rel_err(direct, swapped) < 1e-13);

    // strong twist decay: with |chi0/chi| and |chi| both tiny the two
    // factors collapse to their m = 0 terms
    LocalCharacter tiny0{Cx(1e-12)};
    LocalCharacter tiny1{Cx(1e-6)};
    auto far = mox::local_moment_factor(g1, g2, tiny0, tiny1, 60);
    CHECK(std::abs(far.value - 1.0) < 1e-5);
}

TEST_CASE("finite_mellin_whittaker: closed form against the Tate double-sum oracle") {
    // spot values from the contract
    LocalCharacter triv;
    DifferentalData d0{0};
    CHECK(rel_err(mox::finite_mellin_whittaker(triv, 2, d0, Cx(1.0), Cx(1.0)), Cx(2.0)) <
          1e-14);
    auto oracle = mox::tate_brute_force_mellin(triv, 2, d0, Cx(1.0), Cx(1.0), 200);
    CHECK(rel_err(oracle.value, Cx(2.0)) < 1e-12);

    // delta = 1 at q = 3 scales the delta = 0 value by 3^{1/2} at s = v = 1
    DifferentalData d1{1};
    const Cx with_d = mox::finite_mellin_whittaker(triv, 3, d1, Cx(1.0), Cx(1.0));
    const Cx no_d = mox::finite_mellin_whittaker(triv, 3, d0, Cx(1.0), Cx(1.0));
    CHECK(rel_err(with_d, no_d * std::sqrt(3.0)) < 1e-14);
    auto oracle_d = mox::tate_brute_force_mellin(triv, 3, d1, Cx(1.0), Cx(1.0), 200);
    CHECK(rel_err(oracle_d.value, with_d) < 1e-12);

    // 20 random draws: chi(pi) on the unit circle, q in {2,3,5}, delta in {0,1}
    std::mt19937_64 rng(2027);
    std::uniform_real_distribution<double> arg(-3.1, 3.1);
    std::uniform_real_distribution<double> sre(0.6, 1.6);
    std::uniform_real_distribution<double> vre(0.8, 2.5);
    const long long qs[3] = {2, 3, 5};
    for (int trial = 0; trial < 20; ++trial) {
        LocalCharacter chi{std::polar(1.0, arg(rng))};
        const long long q = qs[rng() % 3];
        DifferentalData dd{int(rng() % 2)};
        const Cx s(sre(rng), 0.3 * arg(rng));
        const Cx v(vre(rng), 0.3 * arg(rng));
        Cx closed;
        try {
            closed = mox::finite_mellin_whittaker(chi, q, dd, s, v);
        } catch (const mox::PoleError&) {
            continue;  // random draw hit an L-factor pole; resampling is fine
        }
        auto oc = mox::tate_brute_force_mellin(chi, q, dd, s, v, 400);
        CHECK(std::abs(oc.value - closed) <=
              1e-12 * std::max(1.0, std::abs(closed)) + oc.tail_bound);
        CHECK(oc.tail_bound < 1e-12);
    }

    // chi^2 with chi(pi) = -1: the denominator L(2s, chi^2) sees +1
    LocalCharacter minus{Cx(-1.0)};
    const Cx fm = mox::finite_mellin_whittaker(minus, 2, d0, Cx(0.75), Cx(1.5));
    auto om = mox::tate_brute_force_mellin(minus, 2, d0, Cx(0.75), Cx(1.5), 300);
    CHECK(std::abs(om.value - fm) <= 1e-12 + om.tail_bound);

    // large Re v: the numerator factors tend to 1, leaving 1/L(2s, chi^2)
    const Cx far = mox::finite_mellin_whittaker(triv, 2, d0, Cx(1.0), Cx(40.0));
    CHECK(std::abs(far - 0.75) < 1e-10);
}

TEST_CASE("w_eis_arch: normalizer at s = 1/2 and evenness") {
    // real place, s = 1/2: pi^{-1/2} Gamma(1/2) = 1, so W = 2 sqrt|a| K_0(2 pi |a|)
    const double a = 0.7;
    const Cx w = mox::w_eis_arch(PlaceType::Real, Cx(0.5), a);
    const Cx direct = 2.0 * std::sqrt(a) * mox::bessel_k(Cx(0.0), mox::kTwoPi * a);
    CHECK(rel_err(w, direct) < 1e-12);
    CHECK(rel_err(mox::w_eis_arch(PlaceType::Real, Cx(0.5), -a), w) < 1e-15);

    // complex place, s = 1, a = 1: 2 K_1(4 pi) (2 pi)^2 / Gamma(2)
    const Cx wc = mox::w_eis_arch(PlaceType::Complex, Cx(1.0), 1.0);
    const Cx directc = 2.0 * mox::bessel_k(Cx(1.0), 2.0 * mox::kTwoPi) * mox::kTwoPi *
                       mox::kTwoPi / mox::gamma(Cx(2.0));
    CHECK(rel_err(wc, directc) < 1e-12);

    CHECK_THROWS_AS((void)mox::w_eis_arch(PlaceType::Real, Cx(0.5), 0.0), mox::DomainError);
}

TEST_CASE("w_eis_arch: exponential decay and positivity for s in (0,1)") {
    for (double s : {0.3, 0.5, 0.8}) {
        double prev = 1e300;
        for (double a : {0.5, 1.0, 2.0, 4.0}) {
            const Cx w = mox::w_eis_arch(PlaceType::Real, Cx(s), a);
            CHECK(w.real() > 0.0);
            CHECK(std::abs(w.imag()) < 1e-12 * w.real());
            CHECK(w.real() < prev);
            prev = w.real();
        }
        // K asymptotics sqrt(pi/2x) e^{-x} give W(a)/W(2a) = e^{2 pi a}(1 + O(1/a))
        const double r1x = mox::w_eis_arch(PlaceType::Real, Cx(s), 1.0).real() /
                           mox::w_eis_arch(PlaceType::Real, Cx(s), 2.0).real() /
                           std::exp(mox::kTwoPi);
        const double r2x = mox::w_eis_arch(PlaceType::Real, Cx(s), 2.0).real() /
                           mox::w_eis_arch(PlaceType::Real, Cx(s), 4.0).real() /
                           std::exp(2.0 * mox::kTwoPi);
        CHECK(std::abs(r1x - 1.0) < 0.05);
        CHECK(std::abs(r2x - 1.0) < 0.02);
        CHECK(std::abs(r2x - 1.0) < std::abs(r1x - 1.0));
    }
}

TEST_CASE("arch_mellin_whittaker: quadrature vs gamma closed form") {
    auto real_case = mox::arch_mellin_whittaker(PlaceType::Real, Cx(0.5), Cx(1.0));
    CHECK(real_case.relative_gap < 1e-8);

    // s <-> 1-s symmetry of the closed form at the real place
    auto left = mox::arch_mellin_whittaker(PlaceType::Real, Cx(0.35, 0.2), Cx(1.3));
    auto right = mox::arch_mellin_whittaker(PlaceType::Real, Cx(0.65, -0.2), Cx(1.3));
    CHECK_MESSAGE(rel_err(left.closed_form * std::exp(-Cx(0.35, 0.2) * std::log(mox::kPi)) *
                              mox::gamma(Cx(0.35, 0.2)),
                          right.closed_form * std::exp(-Cx(0.65, -0.2) * std::log(mox::kPi)) *
                              mox::gamma(Cx(0.65, -0.2))) < 1e-11,
                  "completed-object symmetry");

    auto complex_case = mox::arch_mellin_whittaker(PlaceType::Complex, Cx(0.8), Cx(1.5));
    CHECK(complex_case.relative_gap < 1e-8);

    // self-consistency at two tolerances for a larger v
    mox::QuadratureSpec loose{1e-8, 1e-10, 4000};
    mox::QuadratureSpec tight{1e-11, 1e-13, 8000};
    auto a1 = mox::arch_mellin_whittaker(PlaceType::Real, Cx(0.5), Cx(4.0), loose);
    auto a2 = mox::arch_mellin_whittaker(PlaceType::Real, Cx(0.5), Cx(4.0), tight);
    CHECK(rel_err(a1.quadrature, a2.quadrature) < 1e-8);
}
