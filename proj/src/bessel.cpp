// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/bessel.hpp"

#include <cmath>
#include <utility>

namespace mox {
namespace {

inline Cx cosh_cx(Cx z) { return 0.5 * (std::exp(z) + std::exp(-z)); }

}  // namespace

Cx bessel_k(Cx order, double x, const QuadratureSpec& spec) {
    spec.validate();
    if (!(x > 0.0)) throw DomainError("bessel_k: requires x > 0");
    if (std::abs(order.imag()) > 100.0)
        throw DomainError("bessel_k: |Im order| beyond validated range");
    if (x > 740.0) return Cx(0.0, 0.0);  // below double range

    const double are = std::abs(order.real());
    auto g = [&](double t) { return std::exp(-x * std::cosh(t)) * cosh_cx(order * t); };

    // truncation point: exp(-x cosh T + |Re order| T) below the noise floor
    double T = 1.0;
    while (x * std::cosh(T) - are * T - std::log1p(1.0 / x) < 745.0 && T < 60.0) T += 0.5;

    const double tol = std::max(spec.rel_tol, 1e-14);
    double h = std::min(0.5, 2.0 / (1.0 + std::abs(order.imag())));

    // trapezoid on [0, T], refined by interleaving; geometric convergence in
    // the step for this analytic, doubly-exponentially decaying integrand
    auto coarse_sum = [&](double step) {
        Cx s = 0.5 * g(0.0);
        double habs = 0.5 * std::abs(s);
        for (double t = step; t <= T; t += step) {
            const Cx v = g(t);
            s += v;
            habs += std::abs(v);
            if (x * std::cosh(t) > 745.0) break;
        }
        return std::pair<Cx, double>(step * s, step * habs);
    };

    auto [val, mag] = coarse_sum(h);
    double err = std::abs(val);
    for (int iter = 0; iter < 12; ++iter) {
        Cx mid = 0.0;
        double midabs = 0.0;
        for (double t = 0.5 * h; t <= T; t += h) {
            const Cx v = g(t);
            mid += v;
            midabs += std::abs(v);
            if (x * std::cosh(t) > 745.0) break;
        }
        const Cx next = 0.5 * val + 0.5 * h * mid;
        const double next_mag = 0.5 * mag + 0.5 * h * midabs;
        err = std::abs(next - val);
        val = next;
        mag = next_mag;
        h *= 0.5;
        if (err <= 0.25 * tol * std::abs(val) && iter >= 1) break;
    }

    const double cancellation_floor = mag * 2.0e-16;
    const double bound = err + cancellation_floor;
    if (bound > tol * std::abs(val) + spec.abs_tol)
        throw QuadratureError("bessel_k: tolerance not met (cancellation or refinement limit)",
                              val, bound);
    return val;
}

double bessel_j(int order, double x) {
    if (!(x >= 0.0)) throw DomainError("bessel_j: requires x >= 0");
    if (std::abs(order) > 10000 || x > 11000.0)
        throw DomainError("bessel_j: order/argument beyond validated range");

    if (order < 0) {
        const double v = bessel_j(-order, x);
        return (order % 2 == 0) ? v : -v;
    }
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;

    const int n = order;
    if (x <= 12.0) {
        // ascending series; leading term via logs to dodge overflow in n!
        const double log_t0 = n * std::log(0.5 * x) - std::lgamma(double(n) + 1.0);
        if (log_t0 < -745.0) return 0.0;
        double term = std::exp(log_t0);
        double sum = term;
        const double q = 0.25 * x * x;
        for (int k = 1; k < 200; ++k) {
            term *= -q / (double(k) * double(n + k));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
        }
        return sum;
    }

    // Miller backward recurrence, normalized by J_0 + 2 sum J_{2k} = 1
    const int start = (int(std::max(double(n), x) + 15.0 * std::cbrt(x) + 25.0)) | 1;
    double jp = 0.0, jc = 1e-30;
    double norm = 0.0, jn = 0.0;
    for (int k = start; k >= 1; --k) {
        const double jm = (2.0 * k / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (k - 1 == n) jn = jc;
        if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? jc : 2.0 * jc;
        if (std::abs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            jn *= 1e-250;
        }
    }
    return jn / norm;
}

}  // namespace mox
