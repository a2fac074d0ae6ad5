// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/poincare.hpp"

#include <cmath>
#include <numeric>

#include "mox/simd.hpp"

namespace mox {
namespace {

// smallest eigenvalue of the binary form |cz+d|^2 = (c,d) Q (c,d)^T,
// Q = [[x^2+y^2, x], [x, 1]]; lower bound for |cz+d|^2 / (c^2+d^2)
double form_lambda_min(double x, double y) {
    const double tr = x * x + y * y + 1.0;
    const double det = y * y;
    return 0.5 * (tr - std::sqrt(tr * tr - 4.0 * det));
}

// extended gcd completion: for coprime (c,d) returns (a,b) with ad - bc = 1
void complete_unimodular(long long c, long long d, long long* a, long long* b) {
    long long r0 = c, r1 = d, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const long long q = r0 / r1;
        long long tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    // r0 = gcd = +-1 = s0 c + t0 d; want a d - b c = 1
    const long long sign = r0 > 0 ? 1 : -1;
    *a = sign * t0;
    *b = -sign * s0;
}

// int_{u0}^inf (1+u^2)^{-W/2} du upper bound, valid for all u0 >= 0;
// divergent for W <= 1
double phi_tail_integral(double u0, double W) {
    if (W <= 1.0) return 1e300;
    if (u0 < 1.0) return (1.0 - u0) + 1.0 / (W - 1.0);
    return std::pow(u0, 1.0 - W) / (W - 1.0);
}

struct TermSum {
    Cx value{0.0, 0.0};
    double tail = 0.0;
};

// Translation sum of one gamma-term, extended blockwise until the analytic
// remaining tail drops below max(abs_floor, 1e-9 relative) or the hard cap
// n_bound is reached. The absolute floor, supplied from the caller's running
// total, keeps negligible cosets from over-resolving. Deterministic.
TermSum translation_sum(double xg, double yg, Cx v, Cx w, long long n_bound,
                        double abs_floor) {
    TermSum out;
    const double rv = v.real(), rw = w.real();
    const bool real_params = v.imag() == 0.0 && w.imag() == 0.0;
    const double y2 = yg * yg;

    auto block = [&](long long lo, long long hi) -> Cx {
        if (real_params)
            return simd::active_ops().shifted_power_sum(xg, y2, -0.5 * rw, lo, hi);
        Cx acc = 0.0;
        for (long long n = lo; n <= hi; ++n) {
            const double u = xg + double(n);
            acc += std::exp(-0.5 * w * std::log(u * u + y2));
        }
        return acc;
    };
    auto tail_at = [&](long long s) {
        const double u0 = std::max(0.0, (double(s) - std::abs(xg)) / yg);
        return std::pow(yg, rv) * 2.0 *
               (yg * phi_tail_integral(u0, rw) + std::pow(1.0 + u0 * u0, -0.5 * rw));
    };

    long long stop = std::min<long long>(64, n_bound);
    Cx acc = block(-stop, stop);
    const double scale = real_params ? std::pow(yg, rv + rw)
                                     : std::abs(std::exp((v + w) * std::log(yg)));
    double tail = tail_at(stop);
    while (stop < n_bound &&
           tail > std::max(abs_floor, 1e-9 * scale * std::abs(acc))) {
        const long long next = std::min(n_bound, stop + 128);
        acc += block(stop + 1, next) + block(-next, -stop - 1);
        stop = next;
        tail = tail_at(stop);
    }

    out.value = (real_params ? Cx(std::pow(yg, rv + rw))
                             : std::exp((v + w) * std::log(yg))) *
                acc;
    out.tail = tail;
    return out;
}

}  // namespace

PoincareValue eval_poincare_Q(UpperHalfPoint z, Cx v, Cx w, const SeriesTruncation& trunc) {
    z.validate();
    trunc.validate();
    if (!(v.real() > 1.0) || !(w.real() > 1.0))
        throw DomainError("eval_poincare_Q: requires Re v > 1 and Re w > 1");

    // the series is exactly 1-periodic in x; canonicalize so the periodicity
    // holds verbatim at finite truncation
    const double x = z.x - std::round(z.x);
    const double y = z.y;
    const Cx zc(x, y);

    const long long N = trunc.coprime_bound;
    PoincareValue out;

    // identity coset (c,d) = (0,1)
    {
        const TermSum id = translation_sum(x, y, v, w, trunc.translation_bound, 0.0);
        out.value += id.value;
        out.tail_estimate += id.tail;
    }

    for (long long c = 1; c <= N; ++c) {
        for (long long d = -N; d <= N; ++d) {
            if (std::gcd(c, std::llabs(d)) != 1) continue;
            long long a, b;
            complete_unimodular(c, d, &a, &b);
            const Cx denom = double(c) * zc + double(d);
            const double q = std::norm(denom);
            const double yg = y / q;
            const Cx num = double(a) * zc + double(b);
            const double xg = (num * std::conj(denom)).real() / q;
            const TermSum t = translation_sum(xg, yg, v, w, trunc.translation_bound,
                                              1e-13 * std::abs(out.value));
            out.value += t.value;
            out.tail_estimate += t.tail;
        }
    }

    // coprime-pair tail: term(gamma) <= y_g^{Re v}(y_g I_w + 1), and shells of
    // radius R carry <= 8R pairs with |cz+d|^2 >= lambda_min R^2
    const double rv = v.real(), rw = w.real();
    const double lam = form_lambda_min(x, y);
    const double iw = 2.0 * phi_tail_integral(0.0, rw);
    const double base = y / lam;
    const double shell1 =
        8.0 * std::pow(base, rv + 1.0) * iw * std::pow(double(N), -2.0 * rv) / (2.0 * rv);
    const double shell2 =
        8.0 * std::pow(base, rv) * std::pow(double(N), 2.0 - 2.0 * rv) / (2.0 * rv - 2.0);
    out.tail_estimate += 2.0 * (shell1 + shell2);

    out.truncation_warning = out.tail_estimate > 1e-3 * std::abs(out.value);
    return out;
}

EisensteinValue eval_eisenstein_Q(UpperHalfPoint z, Cx s, const SeriesTruncation& trunc) {
    z.validate();
    trunc.validate();
    if (!(s.real() > 1.0)) throw DomainError("eval_eisenstein_Q: requires Re s > 1");

    const double x = z.x - std::round(z.x);
    const double y = z.y;
    const long long N = trunc.coprime_bound;

    EisensteinValue out;
    const bool real_s = s.imag() == 0.0;
    const double rs = s.real();

    Cx acc = real_s ? Cx(std::pow(y, rs)) : std::exp(s * std::log(y));  // (c,d) = (0,1)

    for (long long c = 1; c <= N; ++c) {
        const double X = double(c) * x;
        const double Y = double(c) * y;
        // d-sum restricted to gcd(d,c)=1 via Moebius over squarefree e | c:
        //   sum_{e|c} mu(e) sum_{d = e m} ((X+d)^2+Y^2)^{-s}
        long long cc = c;
        std::vector<long long> primes;
        for (long long p = 2; p * p <= cc; ++p)
            if (cc % p == 0) {
                primes.push_back(p);
                while (cc % p == 0) cc /= p;
            }
        if (cc > 1) primes.push_back(cc);

        const std::size_t npr = primes.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << npr); ++mask) {
            long long e = 1;
            int mu = 1;
            for (std::size_t i = 0; i < npr; ++i)
                if (mask & (std::size_t(1) << i)) {
                    e *= primes[i];
                    mu = -mu;
                }
            const long long mbound = N / e;
            const double Xe = X / double(e), Ye = Y / double(e);
            if (real_s) {
                const double inner = simd::active_ops().shifted_power_sum(
                    Xe, Ye * Ye, -rs, -mbound, mbound);
                acc += double(mu) * std::pow(double(e), -2.0 * rs) * std::pow(y, rs) * inner;
            } else {
                Cx inner = 0.0;
                for (long long m = -mbound; m <= mbound; ++m) {
                    const double u = Xe + double(m);
                    inner += std::exp(-s * std::log(u * u + Ye * Ye));
                }
                acc += double(mu) * std::exp(-2.0 * s * std::log(double(e))) *
                       std::exp(s * std::log(y)) * inner;
            }
        }
    }
    out.value = acc;

    const double lam = form_lambda_min(x, y);
    out.tail_bound = 16.0 * std::pow(y / lam, rs) *
                     std::pow(double(N), 2.0 - 2.0 * rs) / (2.0 * rs - 2.0);
    return out;
}

DominationReport domination_check(const std::vector<UpperHalfPoint>& grid, double v,
                                  double w, double epsilon, const SeriesTruncation& trunc) {
    if (!(epsilon > 0.0)) throw DomainError("domination_check: epsilon > 0 required");
    if (!(v > 1.0 + 2.0 * epsilon) || !(w > 1.0 + epsilon))
        throw DomainError("domination_check: requires v > 1 + 2 eps and w > 1 + eps");

    DominationReport rep;
    for (const auto& z : grid) {
        const PoincareValue p = eval_poincare_Q(z, Cx(v), Cx(w), trunc);
        const EisensteinValue e1 = eval_eisenstein_Q(z, Cx(v), trunc);
        const EisensteinValue e2 = eval_eisenstein_Q(z, Cx(v + 1.0 + 2.0 * epsilon), trunc);
        DominationRow row;
        row.z = z;
        row.poincare = p.value.real();
        row.eisenstein_pair = e1.value.real() + e2.value.real();
        row.ratio = row.poincare / row.eisenstein_pair;
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
        rep.rows.push_back(row);
    }
    rep.bounded = std::isfinite(rep.max_ratio) && rep.max_ratio > 0.0;
    return rep;
}

CauchyProbe cauchy_convergence_probe(UpperHalfPoint z, double v, double w,
                                     const std::vector<long long>& ladder) {
    if (ladder.size() < 3) throw DomainError("cauchy_convergence_probe: ladder too short");
    CauchyProbe probe;
    probe.ladder = ladder;
    // for convergent translation sums (w > 1) the cap is fixed across the
    // ladder so increments measure the coprime-pair tail; for w <= 1 the
    // translation sum itself diverges and must follow the ladder to show it
    const long long n_cap = w > 1.0 ? (w >= 2.0 ? 200000 : 20000) : 0;
    for (long long N : ladder) {
        SeriesTruncation tr{N, n_cap > 0 ? n_cap : N};
        double val;
        if (v > 1.0 && w > 1.0) {
            val = eval_poincare_Q(z, Cx(v), Cx(w), tr).value.real();
        } else {
            // outside the convergence region: literal partial sum, so the
            // probe can witness divergence without tripping domain checks
            const double x = z.x - std::round(z.x);
            const Cx zc(x, z.y);
            double acc =
                translation_sum(x, z.y, Cx(v), Cx(w), tr.translation_bound, 0.0)
                    .value.real();
            for (long long c = 1; c <= N; ++c)
                for (long long d = -N; d <= N; ++d) {
                    if (std::gcd(c, std::llabs(d)) != 1) continue;
                    const Cx denom = double(c) * zc + double(d);
                    const double q = std::norm(denom);
                    const double yg = z.y / q;
                    long long a, b;
                    complete_unimodular(c, d, &a, &b);
                    const double xg =
                        ((double(a) * zc + double(b)) * std::conj(denom)).real() / q;
                    acc += translation_sum(xg, yg, Cx(v), Cx(w), tr.translation_bound,
                                           1e-13 * std::abs(acc))
                               .value.real();
                }
            val = acc;
        }
        probe.partials.push_back(val);
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < probe.partials.size(); ++i)
        probe.increments.push_back(std::abs(probe.partials[i] - probe.partials[i - 1]));
    for (std::size_t i = 1; i < probe.increments.size(); ++i)
        if (probe.increments[i] >= probe.increments[i - 1]) decreasing = false;
    probe.increments_decreasing = decreasing;
    probe.final_relative_increment =
        probe.increments.back() / std::abs(probe.partials.back());
    probe.converged = decreasing && probe.final_relative_increment < 1e-6;
    return probe;
}

}  // namespace mox
