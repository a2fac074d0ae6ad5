// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "mox/types.hpp"

namespace mox {

struct IntegralResult {
    Cx value{0.0, 0.0};
    double error = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Caller-declared tail behaviour of a halfline/vertical-line integrand:
// exp(-rate*t), exp(-rate*t^2), or t^{-rate}.
enum class DecayKind { Exponential, Gaussian, PowerLaw };

struct DecayHint {
    DecayKind kind = DecayKind::Exponential;
    double rate = 1.0;
};

namespace quad_detail {

// Gauss-Kronrod 7-15 nodes and weights (QUADPACK dqk15).
inline constexpr double kXgk[8] = {
    0.99145537112081263920685469752633, 0.94910791234275852452618968404785,
    0.86486442335976907278971278864093, 0.74153118559939443986386477328079,
    0.58608723546769113029414483825873, 0.40584515137739716690660641207696,
    0.20778495500789846760068940377324, 0.0};
inline constexpr double kWgk[8] = {
    0.02293532201052922496373200805897, 0.06309209262997855329070066318921,
    0.10479001032225018383987632254152, 0.14065325971552591874518959051024,
    0.16900472663926790282658342659855, 0.19035057806478540991325640242101,
    0.20443294007529889241416199923465, 0.20948214108472782801299917489171};
inline constexpr double kWg[4] = {
    0.12948496616886969327061143267908, 0.27970539148927666790146777142378,
    0.38183005050511894495036977548898, 0.41795918367346938775510204081633};

struct Segment {
    double a, b;
    Cx value;
    double err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

template <class F>
Segment gk15(F& f, double a, double b, long* evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    Cx fv[15];
    fv[14] = f(c);
    Cx resk = kWgk[7] * fv[14];
    Cx resg = kWg[3] * fv[14];
    double resabs = kWgk[7] * std::abs(fv[14]);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const Cx f1 = f(c - dx);
        const Cx f2 = f(c + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * (f1 + f2);
    }
    *evals += 15;

    const Cx reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fv[14] - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[2 * j] - reskh) + std::abs(fv[2 * j + 1] - reskh));

    const double ah = std::abs(h);
    double err = std::abs(resk - resg) * ah;
    resasc *= ah;
    resabs *= ah;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round_floor = 50.0 * 2.2e-16 * resabs;
    err = std::max(err, round_floor);
    return Segment{a, b, resk * h, err};
}

}  // namespace quad_detail

// Adaptive Gauss-Kronrod on [a, b]. Never evaluates the endpoints, so
// integrable endpoint singularities are fine.
template <class F>
IntegralResult integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    IntegralResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }

    std::priority_queue<quad_detail::Segment> heap;
    heap.push(quad_detail::gk15(f, a, b, &res.evaluations));
    Cx total = heap.top().value;
    double total_err = heap.top().err;

    int splits = 0;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) &&
           splits < spec.max_subdivisions) {
        quad_detail::Segment worst = heap.top();
        heap.pop();
        total -= worst.value;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval exhausted by rounding
            total += worst.value;
            total_err += worst.err;
            break;
        }
        auto left = quad_detail::gk15(f, worst.a, mid, &res.evaluations);
        auto right = quad_detail::gk15(f, mid, worst.b, &res.evaluations);
        total += left.value + right.value;
        total_err += left.err + right.err;
        heap.push(left);
        heap.push(right);
        ++splits;
    }

    res.value = total;
    res.error = total_err;
    res.converged = total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    return res;
}

namespace quad_detail {

inline double tail_bound(double f_at_T, double T, DecayHint hint) {
    switch (hint.kind) {
        case DecayKind::Exponential:
            return 2.0 * f_at_T / std::max(hint.rate, 1e-300);
        case DecayKind::Gaussian:
            return 2.0 * f_at_T / std::max(2.0 * hint.rate * T, 1e-300);
        case DecayKind::PowerLaw:
            if (hint.rate <= 1.0) return 1e300;
            return 2.0 * f_at_T * T / (hint.rate - 1.0);
    }
    return 1e300;
}

}  // namespace quad_detail

// Integral over [0, inf) with dyadically growing panels; the caller-declared
// decay hint supplies the truncation bound.
template <class F>
IntegralResult integrate_halfline(F&& f, const QuadratureSpec& spec, DecayHint hint) {
    spec.validate();
    IntegralResult res;
    QuadratureSpec panel_spec = spec;

    double lo = 0.0, hi = 1.0;
    int quiet_panels = 0;
    // 100 dyadic panels reach ~1e30, enough for slow power-law tails
    for (int panel = 0; panel < 100; ++panel) {
        panel_spec.abs_tol = std::max(spec.abs_tol,
                                      spec.rel_tol * std::abs(res.value)) / 8.0;
        panel_spec.rel_tol = spec.rel_tol;
        IntegralResult part = integrate_finite(f, lo, hi, panel_spec);
        res.value += part.value;
        res.error += part.error;
        res.evaluations += part.evaluations;

        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value));
        quiet_panels = (std::abs(part.value) <= 0.25 * tol) ? quiet_panels + 1 : 0;
        if (quiet_panels >= 2) {
            const double ftail = std::abs(f(hi));
            res.evaluations += 1;
            const double tail = quad_detail::tail_bound(ftail, hi, hint);
            if (tail <= 0.5 * tol) {
                res.error += tail;
                res.converged = true;
                return res;
            }
        }
        lo = hi;
        hi *= 2.0;
    }
    res.converged = false;
    return res;
}

// (1/(2 pi i)) Integral over the vertical line Re w = re_part of f(w) dw.
template <class F>
IntegralResult integrate_vertical_line(F&& f, double re_part, const QuadratureSpec& spec,
                                       DecayHint hint) {
    auto g = [&](double tau) { return f(Cx(re_part, tau)) + f(Cx(re_part, -tau)); };
    IntegralResult res = integrate_halfline(g, spec, hint);
    res.value /= kTwoPi;
    res.error /= kTwoPi;
    return res;
}

// Euler-transformed sum of a (near-)alternating series of segment integrals;
// term(k) returns the k-th tail piece. Converges geometrically for decaying
// oscillatory tails where absolute bounds are useless.
template <class TermFn>
Cx euler_alternating_sum(TermFn&& term, int max_terms, double tol, double* err_out) {
    std::vector<Cx> row;
    row.reserve(max_terms);
    Cx partial = 0.0;
    std::vector<Cx> partials;
    for (int k = 0; k < max_terms; ++k) {
        partial += term(k);
        partials.push_back(partial);
    }
    // repeated averaging of the partial-sum sequence
    Cx prev_est = partials.back();
    double err = std::abs(prev_est);
    std::vector<Cx> cur = partials;
    for (std::size_t level = 0; cur.size() > 1; ++level) {
        for (std::size_t i = 0; i + 1 < cur.size(); ++i)
            cur[i] = 0.5 * (cur[i] + cur[i + 1]);
        cur.pop_back();
        const double step = std::abs(cur.back() - prev_est);
        prev_est = cur.back();
        err = step;
        if (step < tol) break;
    }
    if (err_out) *err_out = err;
    return prev_est;
}

// Throwing wrappers used where the spec demands a hard failure.
template <class F>
Cx integrate_halfline_or_throw(F&& f, const QuadratureSpec& spec, DecayHint hint) {
    IntegralResult r = integrate_halfline(f, spec, hint);
    if (!r.converged)
        throw QuadratureError("integrate_halfline: tolerance not met", r.value, r.error);
    return r.value;
}

template <class F>
Cx integrate_vertical_line_or_throw(F&& f, double re_part, const QuadratureSpec& spec,
                                    DecayHint hint) {
    IntegralResult r = integrate_vertical_line(f, re_part, spec, hint);
    if (!r.converged)
        throw QuadratureError("integrate_vertical_line: tolerance not met", r.value, r.error);
    return r.value;
}

}  // namespace mox
