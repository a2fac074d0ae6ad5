// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace mox_test {

using mox::Cx;

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

Cx lgamma_stirling_oracle(Cx z) {
    if (!(z.real() > 0.0)) throw std::invalid_argument("oracle: Re z > 0 required");
    // asymptotic series with 8 terms after shifting to |z| >= 40; the first
    // omitted term bounds the series error well below 1e-12 there
    Cx shift = 0.0;
    while (std::abs(z) < 40.0) {
        shift += std::log(z);
        z += 1.0;
    }
    static const double bern_over[8] = {
        1.0 / 12.0,      -1.0 / 360.0,     1.0 / 1260.0,   -1.0 / 1680.0,
        1.0 / 1188.0,    -691.0 / 360360.0, 1.0 / 156.0,   -3617.0 / 122400.0};
    Cx sum = 0.0;
    Cx zp = 1.0 / z;
    for (double c : bern_over) {
        sum += c * zp;
        zp /= z * z;
    }
    const double half_log_two_pi = 0.91893853320467274178032973640562;
    return (z - 0.5) * std::log(z) - z + half_log_two_pi + sum - shift;
}

Cx hyp2f1(Cx a, Cx b, Cx c, double z) {
    if (z > 0.0) throw std::invalid_argument("oracle hyp2f1: z <= 0 only");
    if (z > -0.5) {
        Cx term = 1.0, sum = 1.0;
        for (int n = 0; n < 4000; ++n) {
            term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
            sum += term;
            if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
        }
        throw std::runtime_error("oracle hyp2f1: series did not converge");
    }
    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
    const double zp = z / (z - 1.0);  // in (0, 1)
    Cx term = 1.0, sum = 1.0;
    for (int n = 0; n < 200000; ++n) {
        term *= (a + double(n)) * (c - b + double(n)) / ((c + double(n)) * double(n + 1)) * zp;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum))
            return std::pow(Cx(1.0 - z), -a) * sum;
    }
    throw std::runtime_error("oracle hyp2f1: Pfaff series did not converge");
}

}  // namespace mox_test
