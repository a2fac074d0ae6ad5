// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "mox/bessel.hpp"
#include "mox/fields.hpp"
#include "mox/gamma.hpp"
#include "mox/kernels.hpp"
#include "mox/moments.hpp"
#include "mox/padic.hpp"
#include "mox/poincare.hpp"
#include "mox/whittaker.hpp"
#include "mox/zeta.hpp"

namespace mox::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        ok = ok && cond;
        notes.push_back((cond ? "ok: " : "FAIL: ") + what);
    }
    void note(const std::string& what) { notes.push_back(what); }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

double rel_gap(Cx a, Cx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// 1. gamma recurrence/reflection and K/J closed-form identities, 1e-10
Check special_functions() {
    Check c;
    std::mt19937_64 rng(20260808);
    std::uniform_real_distribution<double> re(-49.0, 49.0);
    std::uniform_real_distribution<double> im(-200.0, 200.0);

    double worst_rec = 0.0, worst_ref = 0.0;
    int done = 0;
    while (done < 1000) {
        Cx z(re(rng), im(rng));
        if (std::abs(z) > 50.0) continue;
        if (std::abs(z.imag()) < 0.5 && z.real() < 1.5 &&
            std::abs(z.real() - std::round(z.real())) < 1e-2)
            continue;
        try {
            worst_rec = std::max(worst_rec, rel_gap(mox::gamma(z + 1.0), z * mox::gamma(z)));
            const Cx refl =
                mox::gamma(z) * mox::gamma(1.0 - z) * std::exp(mox::log_sin_pi(z)) / kPi;
            worst_ref = std::max(worst_ref, std::abs(refl - 1.0));
        } catch (const OverflowError&) {
            continue;
        }
        ++done;
    }
    c.require(worst_rec < 1e-10, "gamma recurrence worst rel err = " + fmt(worst_rec));
    c.require(worst_ref < 1e-10, "gamma reflection worst err = " + fmt(worst_ref));

    double worst_k = 0.0;
    for (double x = 0.1; x <= 20.0; x *= 1.31) {
        const double cf = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
        worst_k = std::max(worst_k, std::abs(mox::bessel_k(Cx(0.5), x).real() - cf) / cf);
    }
    c.require(worst_k < 1e-10, "K_{1/2} closed form worst rel err = " + fmt(worst_k));

    double worst_j = 0.0;
    for (double x : {0.4, 3.0, 17.0, 140.0})
        worst_j = std::max(worst_j,
                           std::abs(mox::bessel_j(-3, x) + mox::bessel_j(3, x)));
    // power-series oracle for J_1(1)
    double term = 0.5, series = 0.5;
    for (int k = 1; k < 30; ++k) {
        term *= -0.25 / (double(k) * double(k + 1));
        series += term;
    }
    worst_j = std::max(worst_j, std::abs(mox::bessel_j(1, 1.0) - series));
    c.require(worst_j < 1e-10, "J identities worst abs err = " + fmt(worst_j));
    return c;
}

// 2. g_real / g_complex invariance under s -> 1-s at 500 random points each
Check kernel_symmetry() {
    Check c;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> sre(0.1, 2.5);
    std::uniform_real_distribution<double> sim(-8.0, 8.0);
    std::uniform_real_distribution<double> vre(0.4, 3.0);
    std::uniform_real_distribution<double> wre(1.2, 4.0);

    double worst_r = 0.0, worst_c = 0.0;
    for (int i = 0; i < 500; ++i) {
        const Cx s(sre(rng), sim(rng));
        const Cx v(vre(rng), 0.25 * sim(rng));
        const Cx w(wre(rng), 0.25 * sim(rng));
        worst_r = std::max(worst_r, rel_gap(mox::g_real(s, v, w), mox::g_real(1.0 - s, v, w)));
        worst_c = std::max(worst_c,
                           rel_gap(mox::g_complex(s, v, w), mox::g_complex(1.0 - s, v, w)));
    }
    c.require(worst_r < 1e-10, "g_real s->1-s worst rel gap = " + fmt(worst_r));
    c.require(worst_c < 1e-10, "g_complex s->1-s worst rel gap = " + fmt(worst_c));
    return c;
}

// 3. Mellin identity at the real place on a 3x3x3 grid, gap < 1e-6
Check mellin_identity() {
    Check c;
    double worst = 0.0;
    for (double s : {0.4, 0.6, 0.8})
        for (double v : {1.0, 1.3, 1.6})
            for (double w : {1.8, 2.3, 2.8}) {
                const auto rep = mox::mellin_identity_check(PlaceType::Real, Cx(s), Cx(v),
                                                            Cx(w), {1e-9, 1e-13, 6000});
                worst = std::max(worst, rep.relative_gap);
            }
    c.require(worst < 1e-6, "3x3x3 grid worst relative gap = " + fmt(worst));
    return c;
}

// 4. exact vs asymptotic complex kernel
Check exact_vs_asym() {
    Check c;
    SpectralParams mu{Cx(0.1), Cx(0.1)};
    LocalCharacterParams chi;
    const QuadratureSpec spec{1e-7, 1e-12, 4000};
    double prev = 1e300;
    bool decreasing = true;
    for (double t : {5.0, 10.0, 20.0, 40.0}) {
        const auto ex = mox::k_exact_complex(t, Cx(2.0), chi, Cx(0.1), spec);
        const auto as = mox::k_asym_main(PlaceType::Complex, t, Cx(0.0), Cx(2.0), chi, mu);
        const double dev = std::abs(ex.value.real() / as.value.real() - 1.0);
        c.note("t=" + fmt(t) + " |exact/main - 1| = " + fmt(dev));
        if (t == 10.0) c.require(dev <= 0.15, "deviation at t=10 <= 0.15");
        if (t == 20.0) c.require(dev <= 0.10, "deviation at t=20 <= 0.10");
        decreasing = decreasing && dev < prev;
        prev = dev;
    }
    c.require(decreasing, "deviation decreasing over t in {5,10,20,40}");
    return c;
}

// 5. Landau positivity of the exact kernel on the probe grid
Check landau_positivity() {
    Check c;
    const QuadratureSpec spec{1e-7, 1e-12, 4000};
    for (long long ell : {0LL, 4LL}) {
        LocalCharacterParams chi{0.0, ell};
        const auto rep =
            mox::landau_positivity_probe(2.0, Cx(0.1), chi, {0.0, 1.0, 5.0, 10.0}, spec);
        c.require(rep.all_nonnegative,
                  "w=2, ell=" + std::to_string(ell) + " grid nonnegative (worst rel = " +
                      fmt(rep.worst) + ")");
    }
    LocalCharacterParams chi0;
    const auto near = mox::landau_positivity_probe(1.1, Cx(0.1), chi0, {0.0, 2.0}, spec);
    c.require(near.all_nonnegative, "w=1.1 boundary nonnegative");
    return c;
}

// 6. Whittaker closed forms vs oracles
Check whittaker_closed_forms() {
    Check c;
    std::mt19937_64 rng(2027);
    std::uniform_real_distribution<double> arg(-3.1, 3.1);
    std::uniform_real_distribution<double> sre(0.6, 1.6);
    std::uniform_real_distribution<double> vre(0.8, 2.5);
    const long long qs[3] = {2, 3, 5};

    double worst_tate = 0.0;
    int draws = 0;
    while (draws < 20) {
        LocalCharacter chi{std::polar(1.0, arg(rng))};
        const long long q = qs[rng() % 3];
        DifferentalData dd{int(rng() % 2)};
        const Cx s(sre(rng), 0.3 * arg(rng));
        const Cx v(vre(rng), 0.3 * arg(rng));
        Cx closed;
        try {
            closed = mox::finite_mellin_whittaker(chi, q, dd, s, v);
        } catch (const PoleError&) {
            continue;
        }
        const auto oracle = mox::tate_brute_force_mellin(chi, q, dd, s, v, 400);
        worst_tate = std::max(worst_tate, std::abs(oracle.value - closed) -
                                              oracle.tail_bound);
        ++draws;
    }
    c.require(worst_tate < 1e-12,
              "finite Mellin vs Tate double sum, worst gap-over-tail = " + fmt(worst_tate));

    double worst_hecke = 0.0, worst_moment = 0.0;
    for (int i = 0; i < 30; ++i) {
        const long long q = qs[rng() % 3];
        LocalSatakeData f1{q, std::polar(1.0, arg(rng)), std::polar(1.0, arg(rng))};
        LocalSatakeData f2{q, std::polar(1.0, arg(rng)), std::polar(1.0, arg(rng))};
        const Cx s(1.0 + 0.8 * sre(rng), 0.4 * arg(rng));
        const Cx qs_pow = std::exp(-s * std::log(double(q)));
        const Cx closed = 1.0 / ((1.0 - f1.alpha * qs_pow) * (1.0 - f1.beta * qs_pow));
        const auto hl = mox::hecke_local_integral(f1, s, 150);
        worst_hecke =
            std::max(worst_hecke, rel_gap(hl.value, closed) - hl.tail_bound / std::abs(closed));

        LocalCharacter c0{std::polar(0.4, arg(rng))};
        LocalCharacter c1{std::polar(1.0, arg(rng))};
        const auto lm = mox::local_moment_factor(f1, f2, c0, c1, 260);
        const Cx prod = mox::local_moment_factor_closed(f1, f2, c0, c1);
        worst_moment =
            std::max(worst_moment, (std::abs(lm.value - prod) - lm.tail_bound) / std::abs(prod));
    }
    c.require(worst_hecke < 1e-10, "Hecke integral vs Euler product, worst = " + fmt(worst_hecke));
    c.require(worst_moment < 1e-10,
              "local moment factor vs L-factor product, worst = " + fmt(worst_moment));
    return c;
}

// 7. p-adic cell counts, norm-integral bound, global Euler product
Check padic_appendix() {
    Check c;
    bool cells = true;
    for (long long p : {2, 3, 5})
        for (int ell = 1; ell <= 3; ++ell)
            cells = cells && (mox::brute_force_cell_count(p, ell) == mox::cell_index(p, ell));
    c.require(cells, "cell_index == exhaustive subgroup count, p in {2,3,5}, ell <= 3");

    bool bounded = true;
    for (long long q : {2, 3, 5, 7})
        for (double sigma : {1.5, 2.0, 3.0, 5.0}) {
            const auto ni = mox::local_norm_integral(q, sigma);
            bounded = bounded && ni.exact <= ni.paper_bound;
        }
    c.require(bounded, "exact norm integral <= (1+q^{2-s})/(1-q^{1-s}) on the grid");

    const auto glob = mox::global_norm_product_check(3.0, 3.0, 100000);
    c.require(std::abs(glob.zeta_form - 1.42030810) < 1e-6,
              "zeta(3)^2/zeta(6) = " + fmt(glob.zeta_form) + " within 1e-6 of 1.42030810");
    c.require(glob.gap < 1e-6, "truncated Euler product gap = " + fmt(glob.gap));
    return c;
}

// 8. Poincare series: Cauchy, domination, exact periodicity, divergence
Check poincare_convergence() {
    Check c;
    const auto probe =
        mox::cauchy_convergence_probe({0.2, 1.3}, 2.5, 2.5, {50, 100, 200, 400});
    c.require(probe.increments_decreasing, "partial-sum increments decrease at (2.5, 2.5)");
    c.require(probe.final_relative_increment < 1e-6,
              "final relative increment = " + fmt(probe.final_relative_increment));

    std::vector<UpperHalfPoint> grid;
    for (double x : {0.0, 0.3, 0.5})
        for (double y : {0.5, 1.0, 2.0, 10.0, 100.0}) grid.push_back({x, y});
    const auto dom = mox::domination_check(grid, 3.0, 3.0, 0.25, {120, 200});
    c.require(dom.bounded && dom.max_ratio < 50.0,
              "domination ratio bounded, C = " + fmt(dom.max_ratio));

    const auto za = mox::eval_poincare_Q({0.3, 1.7}, Cx(3.0), Cx(3.0), {100, 100});
    const auto zb = mox::eval_poincare_Q({1.3, 1.7}, Cx(3.0), Cx(3.0), {100, 100});
    const auto zc = mox::eval_poincare_Q({-1.7, 1.7}, Cx(3.0), Cx(3.0), {100, 100});
    c.require(za.value == zb.value && za.value == zc.value,
              "translation invariance exact (bit-identical partial sums)");

    // genuine divergence at v = 1/2 requires w <= 1 (see decisions ledger)
    const auto div = mox::cauchy_convergence_probe({0.2, 1.3}, 0.5, 0.9, {50, 100, 200, 400});
    c.require(!div.converged && !div.increments_decreasing,
              "divergence detected at v = 0.5 (w = 0.9): increments grow");
    return c;
}

// 9. Eisenstein leading-term pole order
Check eisenstein_pole() {
    Check c;
    for (auto which : {BuiltinField::Q, BuiltinField::Q_i, BuiltinField::Q_sqrt2}) {
        const NumberField f = mox::builtin_field(which);
        const int order = f.r1 + f.r2;
        const Cx w(1.0 + 1e-8, 0.0);
        const Cx lim = std::pow(w - 1.0, Cx(double(order))) * mox::r_eisenstein(f, w);
        const bool finite_nonzero = std::isfinite(std::abs(lim)) && std::abs(lim) > 1e-3 &&
                                    std::abs(lim) < 1e3;
        c.require(finite_nonzero, f.name + ": (w-1)^" + std::to_string(order) +
                                      " R(w) -> " + fmt(std::abs(lim)));
        if (which == BuiltinField::Q)
            c.require(std::abs(lim - 2.0) < 1e-6,
                      "Q limit = " + fmt(lim.real()) + " within 1e-6 of 2");
    }
    return c;
}

// 10. second moment slope
Check second_moment(const Options& opts) {
    Check c;
    StepControl sc;
    sc.threads = opts.threads;
    const auto rep = mox::second_moment_slope_report({500.0, 1000.0, 2000.0, 4000.0}, sc);
    const double slope = rep.fitted_coefficients.at(0);
    c.require(std::abs(slope - 1.0) <= 0.1,
              "I2(T)/T vs log T slope = " + fmt(slope) + " within 1.0 +- 0.1");
    c.require(rep.runtime_seconds <= 900.0,
              "runtime " + fmt(rep.runtime_seconds) + " s within the single-thread budget");
    return c;
}

// 11. fourth moment leading-coefficient probe (see the decisions ledger: the
// plain degree-4 fit on [500, 4000] is noise-dominated by the fourth-moment
// error term; the criterion is asserted exactly as stated)
Check fourth_moment(const Options& opts) {
    Check c;
    StepControl sc;
    sc.threads = opts.threads;
    const double target = 1.0 / (2.0 * kPi * kPi);
    const auto fit_half = mox::fourth_moment_fit_report(500.0, 2000.0, 9, sc);
    const auto fit_full = mox::fourth_moment_fit_report(500.0, 4000.0, 10, sc);
    const double r_half = fit_half.fitted_coefficients.at(4) / target;
    const double r_full = fit_full.fitted_coefficients.at(4) / target;
    c.note("fitted c4 ratio to 1/(2 pi^2): Tmax=2000 -> " + fmt(r_half) +
           ", Tmax=4000 -> " + fmt(r_full));
    c.require(r_full >= 0.5 && r_full <= 1.6,
              "leading coefficient within factor [0.5, 1.6] at Tmax=4000");
    c.require(std::abs(r_full - 1.0) < std::abs(r_half - 1.0),
              "window tightens when T_max doubles");
    return c;
}

// 12. character machinery and budget growth
Check character_machinery() {
    Check c;
    double worst_unit = 0.0;
    bool trace_exact = true;
    for (auto which : {BuiltinField::Q, BuiltinField::Q_i, BuiltinField::Q_sqrt2}) {
        const NumberField f = mox::builtin_field(which);
        for (const auto& chi : mox::character_lattice(f, 12.0)) {
            double trace = 0.0;
            for (int nu = 0; nu < f.arch_places(); ++nu)
                trace += f.place_degree(nu) * chi.t_values[nu];
            trace_exact = trace_exact && trace == 0.0;
            for (const auto& unit : f.unit_logs) {
                double phase = 0.0;
                for (int nu = 0; nu < f.arch_places(); ++nu)
                    phase += chi.t_values[nu] * unit[nu];
                worst_unit = std::max(worst_unit, std::abs(std::exp(Cx(0.0, phase)) - 1.0));
            }
        }
    }
    c.require(worst_unit < 1e-10, "unit triviality worst |chi(eps)-1| = " + fmt(worst_unit));
    c.require(trace_exact, "sum d_nu t_nu = 0 exactly for every generated character");

    const NumberField qi = mox::builtin_field(BuiltinField::Q_i);
    double xs[3], ys[3];
    int i = 0;
    for (double T : {1e2, 1e3, 1e4}) {
        const auto b = mox::moment_budget(qi, T);
        xs[i] = std::log(T);
        ys[i] = std::log(b.total_measure);
        ++i;
    }
    const double mx = (xs[0] + xs[1] + xs[2]) / 3.0, my = (ys[0] + ys[1] + ys[2]) / 3.0;
    double num = 0.0, den = 0.0;
    for (int k = 0; k < 3; ++k) {
        num += (xs[k] - mx) * (ys[k] - my);
        den += (xs[k] - mx) * (xs[k] - mx);
    }
    const double expo = num / den;
    c.require(expo > 0.9 && expo < 1.1,
              "Q(i) budget growth exponent = " + fmt(expo) + " in [0.9, 1.1]");
    return c;
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& opts, std::ostream* live) {
    struct Item {
        const char* name;
        double budget_seconds;
        std::function<Check()> fn;
    };
    const Item items[] = {
        {"special-functions", 10.0, special_functions},
        {"kernel-symmetry", 5.0, kernel_symmetry},
        {"mellin-identity", 120.0, mellin_identity},
        {"exact-vs-asymptotic-kernel", 300.0, exact_vs_asym},
        {"landau-positivity", 120.0, landau_positivity},
        {"whittaker-closed-forms", 10.0, whittaker_closed_forms},
        {"padic-norms", 30.0, padic_appendix},
        {"poincare-convergence", 120.0, poincare_convergence},
        {"eisenstein-pole", 1.0, eisenstein_pole},
        {"second-moment", 900.0, [&] { return second_moment(opts); }},
        {"fourth-moment", 900.0, [&] { return fourth_moment(opts); }},
        {"character-machinery", 30.0, character_machinery},
    };

    std::vector<CriterionResult> out;
    int idx = 0;
    for (const auto& item : items) {
        ++idx;
        const auto t0 = Clock::now();
        CriterionResult res;
        res.index = idx;
        res.name = item.name;
        try {
            Check c = item.fn();
            res.passed = c.ok;
            res.details = std::move(c.notes);
        } catch (const std::exception& e) {
            res.passed = false;
            res.details.push_back(std::string("exception: ") + e.what());
        }
        res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (res.seconds > item.budget_seconds) {
            res.passed = false;
            res.details.push_back("runtime " + fmt(res.seconds) + " s exceeded the " +
                                  fmt(item.budget_seconds) + " s budget");
        }
        if (live) {
            *live << (res.passed ? "PASS" : "FAIL") << " " << res.index << " " << res.name
                  << " (" << fmt(res.seconds) << " s)\n";
            for (const auto& d : res.details) *live << "     " << d << "\n";
            live->flush();
        }
        out.push_back(std::move(res));
    }
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace mox::acceptance
