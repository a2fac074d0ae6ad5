// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mox/bessel.hpp"
#include "mox/gamma.hpp"
#include "mox/quadrature.hpp"

namespace mox {
namespace {

Cx gamma_named(Cx z, const char* factor) {
    try {
        return gamma(z);
    } catch (const PoleError&) {
        throw PoleError(std::string("gamma pole in factor ") + factor);
    }
}

}  // namespace

Cx g_real(Cx s, Cx v, Cx w) {
    const Cx num = gamma_named(0.5 * (v + 1.0 - s), "G((v+1-s)/2)") *
                   gamma_named(0.5 * (v + w - s), "G((v+w-s)/2)") *
                   gamma_named(0.5 * (v + s), "G((v+s)/2)") *
                   gamma_named(0.5 * (v + w + s - 1.0), "G((v+w+s-1)/2)");
    const Cx den = gamma_named(0.5 * w, "G(w/2)") * gamma_named(v + 0.5 * w, "G(v+w/2)");
    return std::exp(-v * std::log(kPi)) * num / den;
}

Cx g_complex(Cx s, Cx v, Cx w) {
    const Cx num = gamma_named(v + 1.0 - s, "G(v+1-s)") *
                   gamma_named(v + w - s, "G(v+w-s)") * gamma_named(v + s, "G(v+s)") *
                   gamma_named(v + w + s - 1.0, "G(v+w+s-1)");
    const Cx den = gamma_named(w, "G(w)") * gamma_named(2.0 * v + w, "G(2v+w)");
    return std::exp(-2.0 * v * std::log(kTwoPi)) * num / den;
}

Cx a_complex(Cx v, Cx w, const SpectralParams& mu) {
    const Cx i(0.0, 1.0);
    const Cx im1 = i * mu.mu1;
    const Cx im2 = i * std::conj(mu.mu2);
    const Cx num = gamma_named(w + v + im1 + im2, "G(w+v+i mu1+i mu2~)") *
                   gamma_named(w + v - im1 + im2, "G(w+v-i mu1+i mu2~)") *
                   gamma_named(w + v + im1 - im2, "G(w+v+i mu1-i mu2~)") *
                   gamma_named(w + v - im1 - im2, "G(w+v-i mu1-i mu2~)");
    const Cx den = gamma_named(2.0 * (w + v), "G(2w+2v)");
    // exponent 2w - 4v - 4: fixed empirically against the exact kernel
    // (5.11)-route, which pins the w-scaling of the constant to 4^{-w}
    // relative to the printed 4w - 4v - 4 form
    return std::exp((2.0 * w - 4.0 * v - 4.0) * std::log(2.0)) * num / den;
}

KAsymResult k_asym_main(PlaceType place, double t, Cx v, Cx w,
                        const LocalCharacterParams& chi, const SpectralParams& mu) {
    const double shifted = t + chi.t_nu;
    if (place == PlaceType::Complex) {
        const double ell = double(chi.ell_nu);
        const double budget = 1.0 + ell * ell + 4.0 * shifted * shifted;
        const Cx main = std::exp((1.0 - 2.0 * v) * std::log(kPi)) * a_complex(v, w, mu) *
                        std::exp(-w * std::log(budget));
        return {main, false};
    }
    const double budget = 1.0 + std::abs(shifted);
    return {std::exp(-w * std::log(budget)), true};
}

// ---------------------------------------------------------------------------
// exact complex-place kernel
// ---------------------------------------------------------------------------

namespace {

// natural cubic spline on a uniform grid
class UniformSpline {
  public:
    UniformSpline() = default;
    UniformSpline(double x0, double h, std::vector<double> y) : x0_(x0), h_(h), y_(std::move(y)) {
        const std::size_t n = y_.size();
        m_.assign(n, 0.0);
        if (n < 3) return;
        // natural-spline tridiagonal system m_{i-1} + 4 m_i + m_{i+1} = rhs_i
        std::vector<double> cp(n, 0.0), dp(n, 0.0);
        auto rhs = [&](std::size_t i) {
            return 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (h_ * h_);
        };
        cp[1] = 0.25;
        dp[1] = rhs(1) * 0.25;
        for (std::size_t i = 2; i + 1 < n; ++i) {
            const double denom = 4.0 - cp[i - 1];
            cp[i] = 1.0 / denom;
            dp[i] = (rhs(i) - dp[i - 1]) / denom;
        }
        m_[n - 2] = dp[n - 2];
        for (std::size_t i = n - 3; i >= 1; --i) {
            m_[i] = dp[i] - cp[i] * m_[i + 1];
            if (i == 1) break;
        }
    }

    double operator()(double x) const {
        const std::size_t n = y_.size();
        double u = (x - x0_) / h_;
        if (u <= 0.0) return y_.front();
        if (u >= double(n - 1)) return y_.back();
        const std::size_t k = std::size_t(u);
        const double a = u - double(k);
        const double b = 1.0 - a;
        return b * y_[k] + a * y_[k + 1] +
               ((b * b * b - b) * m_[k] + (a * a * a - a) * m_[k + 1]) * (h_ * h_) / 6.0;
    }

  private:
    double x0_ = 0.0, h_ = 1.0;
    std::vector<double> y_, m_;
};

// K_{2 i mu}(x), real-valued for mu real or purely imaginary. Spline of
// K(x) e^x on a log grid over [1e-5, 42]; ascending series below, zero above.
class BesselKTable {
  public:
    BesselKTable(Cx order, const QuadratureSpec& spec) : order_(order) {
        const int n = 3400;
        const double y0 = std::log(1e-5), y1 = std::log(42.0);
        const double h = (y1 - y0) / (n - 1);
        std::vector<double> vals(n);
        QuadratureSpec kspec = spec;
        kspec.rel_tol = std::max(1e-12, spec.rel_tol * 1e-2);
        for (int i = 0; i < n; ++i) {
            const double x = std::exp(y0 + i * h);
            vals[i] = bessel_k(order_, x, kspec).real() * std::exp(x);
        }
        spline_ = UniformSpline(y0, h, std::move(vals));
    }

    double operator()(double x) const {
        if (x >= 42.0) return 0.0;
        if (x < 1e-5) return small_x(x);
        return spline_(std::log(x)) * std::exp(-x);
    }

  private:
    double small_x(double x) const {
        // two-term ascending series; relative error O(x^2 log x) below 1e-5
        const Cx nu = order_;
        if (std::abs(nu) < 1e-6) {
            const double l = std::log(0.5 * x);
            return -(l + kEulerGamma) * (1.0 + 0.25 * x * x) + 0.25 * x * x;
        }
        const Cx half_pow = std::exp(nu * std::log(0.5 * x));
        const Cx i_plus = half_pow / gamma(1.0 + nu) * (1.0 + 0.25 * x * x / (1.0 + nu));
        const Cx i_minus = (1.0 / half_pow) / gamma(1.0 - nu) * (1.0 + 0.25 * x * x / (1.0 - nu));
        const Cx val = kPi * (i_minus - i_plus) / (2.0 * std::exp(log_sin_pi(nu)));
        return val.real();
    }

    Cx order_;
    UniformSpline spline_;
};

// J_{ell}(x) spline on [0, 420]; exact bessel_j beyond.
class BesselJTable {
  public:
    explicit BesselJTable(int ell) : ell_(ell) {
        const int n = 42001;
        const double h = 0.01;
        std::vector<double> vals(n);
        for (int i = 0; i < n; ++i) vals[i] = bessel_j(ell_, i * h);
        spline_ = UniformSpline(0.0, h, std::move(vals));
    }

    double operator()(double x) const {
        if (x > 420.0) {
            // large-argument asymptotic, O(x^{-3/2}) absolute error; only
            // reached deep in the exponentially damped tail of the kernel
            return std::sqrt(2.0 / (kPi * x)) *
                   std::cos(x - 0.5 * double(ell_) * kPi - 0.25 * kPi);
        }
        return spline_(x);
    }

  private:
    int ell_;
    UniformSpline spline_;
};

struct InnerIntegral {
    Cx value{0.0, 0.0};
    double error = 0.0;
};

// V(c) = int_0^inf u^{2 i tau} K(4 pi u c) J(4 pi u sqrt(1-c^2)) du via
// u = e^x on a frequency-adapted segmentation.
InnerIntegral v_integral(double c, double tau, int ell, const BesselKTable& ktab,
                         const BesselJTable& jtab, const QuadratureSpec& spec) {
    const double sbar = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double kc = 2.0 * kTwoPi * c;     // K argument scale
    const double js = 2.0 * kTwoPi * sbar;  // J argument scale

    auto f = [&](double x) {
        const double u = std::exp(x);
        const double amp = u * ktab(kc * u) * jtab(js * u);
        const double phase = 2.0 * tau * x;
        return Cx(amp * std::cos(phase), amp * std::sin(phase));
    };

    const double x_hi = std::log(38.0 / kc);
    const double x_lo = (-40.0 - std::log1p(1.0 / kc)) / (1.0 + double(ell));

    QuadratureSpec seg_spec = spec;
    seg_spec.max_subdivisions = 24;

    InnerIntegral out;
    double x1 = x_hi;
    while (x1 > x_lo) {
        const double freq = 2.0 * std::abs(tau) + (js + kc) * std::exp(x1) + 1.0;
        const double x0 = std::max(x_lo, x1 - std::min(0.7, 8.0 / freq));
        seg_spec.abs_tol = std::max(spec.abs_tol * 0.25,
                                    0.05 * spec.rel_tol * std::abs(out.value) + 1e-300);
        auto part = integrate_finite(f, x0, x1, seg_spec);
        out.value += part.value;
        out.error += part.error;
        x1 = x0;
    }
    return out;
}

}  // namespace

KExactResult k_exact_complex(double t, Cx w, const LocalCharacterParams& chi, Cx mu,
                             const QuadratureSpec& spec) {
    spec.validate();
    if (!(w.real() > 0.75))
        throw DomainError("k_exact_complex: requires Re w > 3/4");
    const bool mu_ok = (mu.imag() == 0.0) ||
                       (mu.real() == 0.0 && std::abs(mu.imag()) <= 0.45);
    if (!mu_ok)
        throw DomainError("k_exact_complex: mu must be real or small purely imaginary");

    const double tau = t + chi.t_nu;
    const int ell = int(std::llabs(chi.ell_nu));
    const Cx order = Cx(0.0, 2.0) * mu;  // 2 i mu

    QuadratureSpec inner_spec;
    inner_spec.rel_tol = std::max(1e-9, spec.rel_tol * 0.1);
    inner_spec.abs_tol = 1e-13;
    inner_spec.max_subdivisions = spec.max_subdivisions;

    const BesselKTable ktab(order, inner_spec);
    const BesselJTable jtab(ell);

    double inner_err_sup = 0.0;  // sup over c of the weighted error density
    auto integrand = [&](double c) -> Cx {
        const InnerIntegral V = v_integral(c, tau, ell, ktab, jtab, inner_spec);
        const double v2 = std::norm(V.value);
        const double weight = std::exp((2.0 * w.real() - 1.0) * std::log(c));
        inner_err_sup = std::max(
            inner_err_sup,
            weight * (2.0 * std::abs(V.value) * V.error + V.error * V.error));
        return std::exp((2.0 * w - 1.0) * std::log(c)) * v2;
    };

    QuadratureSpec outer = spec;
    outer.rel_tol = std::max(spec.rel_tol, 1e-8);
    IntegralResult total;
    // the c-mass migrates toward c ~ 1/tau for large |tau| (the stationary
    // point of the J phase meets the K decay there), so panel edges and the
    // lower cutoff follow tau
    const double tau_scale = std::max(1.0, std::abs(tau));
    const double c_floor = std::clamp(0.02 / tau_scale, 2.5e-4, 0.004);
    std::vector<double> edges{0.02, 0.1, 0.3, 0.6, 0.85, 1.0};
    for (double f : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double e = f / tau_scale;
        if (e > c_floor * 1.5 && e < 0.9) edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    double prev_edge = c_floor;
    for (double edge : edges) {
        if (edge <= prev_edge) continue;
        auto part = integrate_finite(integrand, prev_edge, edge, outer);
        total.value += part.value;
        total.error += part.error;
        total.evaluations += part.evaluations;
        prev_edge = edge;
    }
    if (!is_finite(total.value))
        throw QuadratureError("k_exact_complex: non-finite integral", total.value,
                              total.error);

    // remainder over (0, c_floor]: |V(c)|^2 scales like 1/c there (stationary
    // phase in the J factor), so the sliver is bounded by
    // |V(c_floor)|^2 c_floor^{2 Re w} / (2 Re w - 1), booked as error
    const InnerIntegral vf = v_integral(c_floor, tau, ell, ktab, jtab, inner_spec);
    const double sliver = 3.0 * std::norm(vf.value) *
                          std::pow(c_floor, 2.0 * w.real()) /
                          std::max(2.0 * w.real() - 1.0, 0.25);

    const double cube = kTwoPi * kTwoPi * kTwoPi;  // (2 pi)^3
    KExactResult res;
    res.value = cube * total.value;
    res.error_bound = cube * (total.error + inner_err_sup + sliver);
    res.slow_decay_warning = w.real() <= 0.85;
    return res;
}

Cx r_eisenstein(const NumberField& field, Cx w) {
    if (std::abs(w - Cx(1.0)) < 1e-14)
        throw PoleError("r_eisenstein: pole at w = 1");
    Cx real_factor(1.0, 0.0);
    if (field.r1 > 0) {
        const Cx one = kSqrtPi * gamma_named(0.5 * (w - 1.0), "G((w-1)/2)") /
                       gamma_named(0.5 * w, "G(w/2)");
        real_factor = std::pow(one, Cx(double(field.r1)));
    }
    Cx complex_factor(1.0, 0.0);
    if (field.r2 > 0) complex_factor = std::pow(kTwoPi / (w - 1.0), Cx(double(field.r2)));
    return real_factor * complex_factor;
}

Cx q_scalar(const NumberField& field, Cx s, Cx v, Cx w) {
    Cx prod(1.0, 0.0);
    if (field.r1 > 0) {
        const Cx norm = std::exp(-s * std::log(kPi)) * gamma_named(s, "G(s)");
        prod *= std::pow(g_real(s, v, w) / norm, Cx(double(field.r1)));
    }
    if (field.r2 > 0) {
        const Cx norm = std::exp(-(2.0 * s + 1.0) * std::log(kTwoPi)) *
                        gamma_named(2.0 * s, "G(2s)");
        prod *= std::pow(g_complex(s, v, w) / norm, Cx(double(field.r2)));
    }
    return prod;
}

MellinIdentityReport mellin_identity_check(PlaceType place, Cx s, Cx v, Cx w,
                                           const QuadratureSpec& spec) {
    spec.validate();
    QuadratureSpec inner = spec;
    inner.rel_tol = std::max(1e-11, spec.rel_tol * 0.01);
    inner.abs_tol = spec.abs_tol * 0.01 + 1e-15;

    MellinIdentityReport rep;
    if (place == PlaceType::Real) {
        if (!(w.real() > 1.0))
            throw DomainError("mellin_identity_check: Re w > 1 required");
        // FT of (1+x^2)^{-w/2} against e^{2 pi i a x}: adaptive head plus an
        // Euler-accelerated half-period tail (the absolute tail decays too
        // slowly near the Re w = 1 boundary, the oscillation does the work)
        auto phi_hat = [&](double a) {
            auto g = [&](double x) {
                return std::cos(kTwoPi * a * x) *
                       std::exp(-0.5 * w * std::log1p(x * x));
            };
            const double head_end = 8.0;
            Cx head = integrate_finite(g, 0.0, head_end, inner).value;
            const double half = 0.5 / std::max(a, 1e-8);
            auto piece = [&](int k) {
                return integrate_finite(g, head_end + k * half,
                                        head_end + (k + 1) * half, inner)
                    .value;
            };
            double tail_err = 0.0;
            const Cx tail = euler_alternating_sum(piece, 40, inner.abs_tol, &tail_err);
            return 2.0 * (head + tail);
        };
        auto f = [&](double a) {
            return std::exp((v - 1.0) * std::log(a)) * phi_hat(a) *
                   w_eis_arch(PlaceType::Real, s, a, inner);
        };
        // both signs of a contribute equally (everything is even in a)
        rep.lhs = 2.0 * integrate_halfline_or_throw(f, spec, {DecayKind::Exponential, kTwoPi});
        rep.rhs = g_real(s, v, w) / (std::exp(-s * std::log(kPi)) * gamma(s));
    } else {
        if (!(w.real() > 1.0))
            throw DomainError("mellin_identity_check: Re w > 1 required");
        // 2D self-dual FT of (1+|x|^2)^{-w} under e^{2 pi i Tr(a x)}: radial,
        // doubled Lebesgue measure; same head-plus-oscillatory-tail scheme
        // with half-periods of J_0
        auto phi_hat = [&](double rho) {
            auto g = [&](double r) {
                return r * bessel_j(0, 2.0 * kTwoPi * rho * r) *
                       std::exp(-w * std::log1p(r * r));
            };
            const double head_end = 8.0;
            Cx head = integrate_finite(g, 0.0, head_end, inner).value;
            const double half = 0.25 / std::max(rho, 1e-8);  // J_0 zero spacing
            auto piece = [&](int k) {
                return integrate_finite(g, head_end + k * half,
                                        head_end + (k + 1) * half, inner)
                    .value;
            };
            double tail_err = 0.0;
            const Cx tail = euler_alternating_sum(piece, 40, inner.abs_tol, &tail_err);
            return 2.0 * kTwoPi * (head + tail);
        };
        auto f = [&](double rho) {
            return std::exp((2.0 * v - 1.0) * std::log(rho)) * phi_hat(rho) *
                   w_eis_arch(PlaceType::Complex, s, rho, inner);
        };
        rep.lhs = 2.0 * kTwoPi *
                  integrate_halfline_or_throw(f, spec, {DecayKind::Exponential, 2.0 * kTwoPi});
        rep.rhs = g_complex(s, v, w) /
                  (std::exp(-(2.0 * s + 1.0) * std::log(kTwoPi)) * gamma(2.0 * s));
    }
    rep.relative_gap = std::abs(rep.lhs - rep.rhs) / std::abs(rep.rhs);
    return rep;
}

}  // namespace mox
