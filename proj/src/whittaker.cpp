// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/whittaker.hpp"

#include <cmath>

#include "mox/bessel.hpp"
#include "mox/gamma.hpp"
#include "mox/quadrature.hpp"

namespace mox {

LocalCharacter LocalCharacter::inverse() const {
    if (ramified_placeholder()) return *this;
    return {1.0 / value_at_uniformizer};
}

Cx local_l_factor(const LocalCharacter& chi, long long q, Cx s) {
    if (q < 2) throw DomainError("local_l_factor: q >= 2 required");
    if (chi.ramified_placeholder()) return Cx(1.0);
    const Cx denom = 1.0 - chi.value_at_uniformizer * std::exp(-s * std::log(double(q)));
    if (std::abs(denom) < 1e-14)
        throw PoleError("local_l_factor: pole (chi(pi) q^{-s} = 1)");
    return 1.0 / denom;
}

Cx casselman_shalika(const LocalSatakeData& data, long long m) {
    data.validate();
    if (m < 0) return Cx(0.0);
    const double qm = std::pow(double(data.q), -0.5 * double(m));
    const Cx diff = data.alpha - data.beta;
    if (std::abs(diff) < 1e-8) {
        const Cx mid = 0.5 * (data.alpha + data.beta);
        return double(m + 1) * std::pow(mid, Cx(double(m))) * qm;
    }
    const Cx num = std::pow(data.alpha, Cx(double(m + 1))) -
                   std::pow(data.beta, Cx(double(m + 1)));
    return qm * num / diff;
}

TruncatedValue hecke_local_integral(const LocalSatakeData& data, Cx s, int truncation) {
    data.validate();
    if (truncation < 0) throw DomainError("hecke_local_integral: truncation >= 0");
    const Cx qs = std::exp(-s * std::log(double(data.q)));
    const double r = std::max(std::abs(data.alpha * qs), std::abs(data.beta * qs));
    if (r >= 1.0)
        throw DivergenceError("hecke_local_integral: |alpha q^{-s}| and |beta q^{-s}| must be < 1");

    // X = q^{-(s-1/2)}; terms W(m) X^m
    const Cx X = std::exp(-(s - 0.5) * std::log(double(data.q)));
    TruncatedValue out;
    Cx xpow = 1.0;
    for (long long m = 0; m <= truncation; ++m) {
        out.value += casselman_shalika(data, m) * xpow;
        xpow *= X;
    }
    // |W(m) X^m| <= (m+1) r^m
    const double M = double(truncation);
    out.tail_bound = std::pow(r, M + 1.0) * ((M + 2.0) - (M + 1.0) * r) /
                     ((1.0 - r) * (1.0 - r));
    return out;
}

namespace {

// L(u; f) = [(1 - alpha q^{-1/2} u)(1 - beta q^{-1/2} u)]^{-1}, the local
// factor at character value u with the |.|^{1/2} shift
Cx twisted_factor(const LocalSatakeData& f, long long q, Cx u) {
    const double rq = 1.0 / std::sqrt(double(q));
    const Cx d1 = 1.0 - f.alpha * rq * u;
    const Cx d2 = 1.0 - f.beta * rq * u;
    if (std::abs(d1) < 1e-14 || std::abs(d2) < 1e-14)
        throw PoleError("local factor pole");
    return 1.0 / (d1 * d2);
}

}  // namespace

Cx local_moment_factor_closed(const LocalSatakeData& f1, const LocalSatakeData& f2,
                              const LocalCharacter& chi0, const LocalCharacter& chi) {
    if (chi.ramified_placeholder() || chi0.ramified_placeholder())
        throw DomainError("local_moment_factor: unramified characters only");
    if (f1.q != f2.q) throw DomainError("local_moment_factor: f1, f2 at different places");
    const Cx u1 = chi0.value_at_uniformizer / chi.value_at_uniformizer;
    const Cx u2 = chi.value_at_uniformizer;
    LocalSatakeData f2bar{f2.q, std::conj(f2.alpha), std::conj(f2.beta)};
    return twisted_factor(f1, f1.q, u1) * twisted_factor(f2bar, f2.q, u2);
}

TruncatedValue local_moment_factor(const LocalSatakeData& f1, const LocalSatakeData& f2,
                                   const LocalCharacter& chi0, const LocalCharacter& chi,
                                   int truncation) {
    f1.validate();
    f2.validate();
    if (f1.q != f2.q) throw DomainError("local_moment_factor: f1, f2 at different places");
    if (chi.ramified_placeholder() || chi0.ramified_placeholder())
        throw DomainError("local_moment_factor: unramified characters only");
    const long long q = f1.q;
    const Cx u1 = chi0.value_at_uniformizer / chi.value_at_uniformizer;
    const Cx u2 = chi.value_at_uniformizer;

    const double rq = 1.0 / std::sqrt(double(q));
    const double r1 = std::max(std::abs(f1.alpha), std::abs(f1.beta)) * rq * std::abs(u1);
    const double r2 = std::max(std::abs(f2.alpha), std::abs(f2.beta)) * rq * std::abs(u2);
    if (r1 >= 1.0 || r2 >= 1.0)
        throw DivergenceError("local_moment_factor: double sum outside convergence region");

    LocalSatakeData f2bar{q, std::conj(f2.alpha), std::conj(f2.beta)};

    TruncatedValue out;
    Cx u1pow = 1.0;
    for (long long m = 0; m <= truncation; ++m) {
        Cx u2pow = 1.0;
        Cx inner = 0.0;
        for (long long mp = 0; mp <= truncation; ++mp) {
            inner += casselman_shalika(f2bar, mp) * u2pow;
            u2pow *= u2;
        }
        out.value += casselman_shalika(f1, m) * u1pow * inner;
        u1pow *= u1;
    }
    const double M = double(truncation);
    auto tail1 = [M](double r) {
        return std::pow(r, M + 1.0) * ((M + 2.0) - (M + 1.0) * r) / ((1.0 - r) * (1.0 - r));
    };
    // |sum1| <= 1/(1-r1)^2 etc.; cross terms bounded by tail * full
    out.tail_bound = tail1(r1) / ((1.0 - r2) * (1.0 - r2)) +
                     tail1(r2) / ((1.0 - r1) * (1.0 - r1));
    return out;
}

Cx finite_mellin_whittaker(const LocalCharacter& chi, long long q, const DifferentalData& d,
                           Cx s, Cx v) {
    d.validate();
    const double dn = d.d_norm(q);  // |d| = q^{-delta}
    const Cx chi_at_d = chi.ramified_placeholder()
                            ? Cx(1.0)
                            : std::pow(chi.value_at_uniformizer, Cx(double(d.delta)));
    const Cx num = local_l_factor(chi, q, v + s) * local_l_factor(chi.inverse(), q, v + 1.0 - s);
    const Cx den = local_l_factor(chi.squared(), q, 2.0 * s);
    return std::sqrt(dn) * num / den * std::pow(dn, -(v + 1.0 - s)) * chi_at_d;
}

TruncatedValue tate_brute_force_mellin(const LocalCharacter& chi, long long q,
                                       const DifferentalData& d, Cx s, Cx v,
                                       int truncation) {
    d.validate();
    if (chi.ramified_placeholder())
        throw DomainError("tate_brute_force_mellin: unramified characters only");
    const double lq = std::log(double(q));
    const Cx c = chi.value_at_uniformizer;
    const double r1 = std::abs(c) * std::pow(double(q), -(v + s).real());
    const double r2 = std::pow(double(q), -(v + 1.0 - s).real()) / std::abs(c);
    const double r_eff = std::max(r1, r2);
    if (r_eff >= 1.0)
        throw DivergenceError("tate_brute_force_mellin: outside the convergence region");
    // a-shells n >= -delta; t-shells j in [-n, delta]:
    //   q^{-n v} chi(pi)^n q^{-n s} meas(o) sum_j chi(pi)^{2j} q^{-j(2s-1)}
    // Reindexing with i = j + n turns shell n into A^n sum_{i=0}^{n+delta} B^i
    // with A = chi(pi)^{-1} q^{-(v+1-s)} and B = chi(pi)^2 q^{-(2s-1)}. The
    // running forms below keep every intermediate bounded (|A| < 1 and
    // |A B| < 1 in the convergence region) even when |B| > 1, where the
    // literal inner sum would overflow long before its tiny prefactor lands.
    const Cx A = std::exp(-(v + 1.0 - s) * lq) / c;
    const Cx B = c * c * std::exp(-(2.0 * s - 1.0) * lq);
    const double meas = std::sqrt(d.d_norm(q));  // meas(o) = |d|^{1/2}

    Cx shell = std::pow(A, Cx(-double(d.delta)));  // shell value at n = -delta
    Cx cross = shell;                              // (A B)^n B^delta
    Cx sum = shell;
    for (long long n = -d.delta + 1; n <= truncation; ++n) {
        cross *= A * B;
        shell = A * shell + cross;
        sum += shell;
    }
    sum *= meas;
    // divide by eta'(1) = L(2s, chi^2)
    sum /= local_l_factor(chi.squared(), q, 2.0 * s);

    // shell n is bounded by meas * (n + delta + 1) * (r1^n + r2^n)
    const double T = double(truncation);
    const double last = meas * (T + double(d.delta) + 2.0) *
                        (std::pow(r1, T) + std::pow(r2, T));
    return {sum, 4.0 * last * r_eff / (1.0 - r_eff)};
}

Cx w_eis_arch(PlaceType place, Cx s, double a, const QuadratureSpec& spec) {
    if (a == 0.0) throw DomainError("w_eis_arch: a != 0 required");
    const double aa = std::abs(a);
    if (place == PlaceType::Real) {
        const Cx normalizer = std::exp(-s * std::log(kPi)) * gamma(s);
        return 2.0 * std::sqrt(aa) * bessel_k(s - 0.5, kTwoPi * aa, spec) / normalizer;
    }
    const Cx normalizer = std::exp(-2.0 * s * std::log(kTwoPi)) * gamma(2.0 * s);
    return 2.0 * aa * bessel_k(2.0 * s - 1.0, 2.0 * kTwoPi * aa, spec) / normalizer;
}

MellinCompare arch_mellin_whittaker(PlaceType place, Cx s, Cx v, const QuadratureSpec& spec) {
    QuadratureSpec inner = spec;
    inner.rel_tol = std::max(spec.rel_tol * 0.01, 1e-13);

    MellinCompare out;
    if (place == PlaceType::Real) {
        // closed form: (1/2) pi^{s-v-1/2} Gamma((v+s)/2) Gamma((v+1-s)/2) / Gamma(s)
        out.closed_form = 0.5 * std::exp((s - v - 0.5) * std::log(kPi)) *
                          gamma(0.5 * (v + s)) * gamma(0.5 * (v + 1.0 - s)) / gamma(s);
        auto f = [&](double a) {
            return std::exp((v - 1.0) * std::log(a)) * w_eis_arch(PlaceType::Real, s, a, inner);
        };
        out.quadrature =
            integrate_halfline_or_throw(f, spec, {DecayKind::Exponential, kTwoPi});
    } else {
        // closed form: 2 (2 pi)^{2s} (4 pi)^{-(v+1)} 2^{v-1}
        //              Gamma((v+2s)/2) Gamma((v+2-2s)/2) / Gamma(2s)
        out.closed_form = 2.0 * std::exp(2.0 * s * std::log(kTwoPi)) *
                          std::exp(-(v + 1.0) * std::log(2.0 * kTwoPi)) *
                          std::exp((v - 1.0) * std::log(2.0)) * gamma(0.5 * (v + 2.0 * s)) *
                          gamma(0.5 * (v + 2.0 - 2.0 * s)) / gamma(2.0 * s);
        auto f = [&](double a) {
            return std::exp((v - 1.0) * std::log(a)) *
                   w_eis_arch(PlaceType::Complex, s, a, inner);
        };
        out.quadrature =
            integrate_halfline_or_throw(f, spec, {DecayKind::Exponential, 2.0 * kTwoPi});
    }
    out.relative_gap =
        std::abs(out.quadrature - out.closed_form) / std::abs(out.closed_form);
    return out;
}

}  // namespace mox
