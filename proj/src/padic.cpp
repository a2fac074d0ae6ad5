// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/padic.hpp"

#include <cmath>
#include <set>
#include <vector>

#include "mox/quadrature.hpp"
#include "mox/zeta.hpp"

namespace mox {

long long cell_index(long long q, int ell) {
    if (q < 2) throw DomainError("cell_index: q >= 2 required");
    if (ell < 0 || ell > 60) throw DomainError("cell_index: 0 <= ell <= 60 (integer range)");
    if (ell == 0) return 1;
    long long r = q + 1;
    for (int i = 1; i < ell; ++i) r *= q;
    return r;
}

long long brute_force_cell_count(long long p, int ell) {
    if (!(p == 2 || p == 3 || p == 5)) throw DomainError("brute_force: p in {2,3,5}");
    if (ell < 1 || ell > 3) throw DomainError("brute_force: 1 <= ell <= 3");

    long long m = 1;  // p^ell
    for (int i = 0; i < ell; ++i) m *= p;
    const long long n2 = m * m;  // |(Z/m)^2|

    auto idx = [m](long long x, long long y) { return x * m + y; };

    // every index-m subgroup with cyclic quotient is the kernel of a
    // surjection (x,y) -> a x + b y onto Z/m; enumerate all (a,b), keep the
    // surjective ones, and record each kernel as a canonical membership bitmap
    std::set<std::vector<std::uint64_t>> kernels;
    const std::size_t words = std::size_t(n2 + 63) / 64;
    for (long long a = 0; a < m; ++a) {
        for (long long b = 0; b < m; ++b) {
            if (a % p == 0 && b % p == 0) continue;  // not surjective
            std::vector<std::uint64_t> bits(words, 0);
            for (long long x = 0; x < m; ++x)
                for (long long y = 0; y < m; ++y)
                    if ((a * x + b * y) % m == 0) {
                        const long long i = idx(x, y);
                        bits[std::size_t(i >> 6)] |= std::uint64_t(1) << (i & 63);
                    }
            kernels.insert(std::move(bits));
        }
    }

    // verify each candidate independently: |H| = m and the quotient contains
    // a coset of full order m (hence is cyclic)
    long long verified = 0;
    for (const auto& bits : kernels) {
        auto in_h = [&](long long x, long long y) {
            const long long i = idx(((x % m) + m) % m, ((y % m) + m) % m);
            return (bits[std::size_t(i >> 6)] >> (i & 63)) & 1;
        };
        long long card = 0;
        for (long long x = 0; x < m; ++x)
            for (long long y = 0; y < m; ++y)
                if (in_h(x, y)) ++card;
        if (card != m) continue;

        bool full_order = false;
        for (long long x = 0; x < m && !full_order; ++x)
            for (long long y = 0; y < m && !full_order; ++y) {
                // order of (x,y)+H divides m = p^ell; full order means
                // (m/p)*(x,y) is not in H
                if (!in_h(x * (m / p), y * (m / p))) full_order = true;
            }
        if (full_order) ++verified;
    }
    return verified;
}

NormIntegral local_norm_integral(long long q, double sigma) {
    if (q < 2) throw DomainError("local_norm_integral: q >= 2 required");
    if (!(sigma > 1.0))
        throw DivergenceError("local_norm_integral: diverges for sigma <= 1");
    const double qd = double(q);
    const double r = std::pow(qd, 1.0 - sigma);
    NormIntegral out;
    out.exact = 1.0 + (qd + 1.0) * std::pow(qd, -sigma) / (1.0 - r);
    out.paper_bound = (1.0 + std::pow(qd, 2.0 - sigma)) / (1.0 - r);
    return out;
}

GlobalProductCheck global_norm_product_check(double a, double b, long long prime_bound) {
    if (!(a > 1.0) || !(b > 1.0))
        throw DomainError("global_norm_product_check: a, b > 1 required");
    if (prime_bound < 2) throw DomainError("global_norm_product_check: bound >= 2");

    std::vector<bool> composite(std::size_t(prime_bound) + 1, false);
    double log_product = 0.0;
    for (long long n = 2; n <= prime_bound; ++n) {
        if (composite[std::size_t(n)]) continue;
        for (long long k = n * n; k <= prime_bound; k += n) composite[std::size_t(k)] = true;
        log_product += std::log1p(std::pow(double(n), -a)) -
                       std::log1p(-std::pow(double(n), -b));
    }

    GlobalProductCheck out;
    out.product = std::exp(log_product);
    out.zeta_form =
        (zeta(Cx(a)) * zeta(Cx(b)) / zeta(Cx(2.0 * a))).real();
    out.gap = std::abs(out.product - out.zeta_form);
    return out;
}

double arch_norm_integral_closed(int d, double sigma) {
    if (!(sigma > double(d) + 1.0))
        throw DivergenceError("arch_norm_integral: finite only for sigma > d + 1");
    return 2.0 * (1.0 / (sigma - double(d) - 1.0) + 1.0 / (sigma - double(d) + 1.0));
}

double arch_norm_integral_quadrature(int d, double sigma, const QuadratureSpec& spec) {
    if (!(sigma > double(d) + 1.0))
        throw DivergenceError("arch_norm_integral: finite only for sigma > d + 1");
    const double beta = sigma - double(d);
    // 2 [ int_0^1 x^{beta} dx + int_1^inf x^{-beta} dx ], split explicitly
    auto inner = integrate_finite([&](double x) { return Cx(std::pow(x, beta)); }, 0.0,
                                  1.0, spec);
    auto outer = integrate_halfline(
        [&](double t) { return Cx(std::pow(1.0 + t, -beta)); }, spec,
        {DecayKind::PowerLaw, beta});
    if (!inner.converged || !outer.converged)
        throw QuadratureError("arch_norm_integral_quadrature: tolerance not met",
                              inner.value + outer.value, inner.error + outer.error);
    return 2.0 * (inner.value.real() + outer.value.real());
}

double pgl2_norm(const double m[4]) {
    const double det = m[0] * m[3] - m[1] * m[2];
    if (det == 0.0) throw DomainError("pgl2_norm: singular matrix");
    const double s = 1.0 / std::sqrt(std::abs(det));
    const double a = m[0] * s, b = m[1] * s, c = m[2] * s, d = m[3] * s;
    // largest singular value of [[a,b],[c,d]]: sqrt of the larger eigenvalue
    // of M^T M; the inverse (det +-1) has the same frobenius data mirrored
    const double f = a * a + b * b + c * c + d * d;
    const double g = a * d - b * c;  // +-1
    const double disc = std::sqrt(std::max(0.0, f * f - 4.0 * g * g));
    const double smax = std::sqrt(0.5 * (f + disc));
    const double smin = std::sqrt(std::max(0.0, 0.5 * (f - disc)));
    return std::max(smax, smin > 0.0 ? 1.0 / smin : 1e300);
}

}  // namespace mox
