// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/moments.hpp"

#include <chrono>
#include <cmath>

#include "mox/parallel.hpp"
#include "mox/quadrature.hpp"
#include "mox/zeta.hpp"

namespace mox {
namespace {

// Gauss-Legendre 8-point rule on [-1, 1]
constexpr double kGlx[4] = {0.18343464249564980494, 0.52553240991632898582,
                            0.79666647741362673959, 0.96028985649753623168};
constexpr double kGlw[4] = {0.36268378337836198297, 0.31370664587788728734,
                            0.22238103445337447054, 0.10122853629037625915};

template <class F>
double composite_gl(F&& f, double a, double b, long long panels, int threads) {
    const double h = (b - a) / double(panels);
    auto one_panel = [&](std::size_t k) {
        const double c = a + (double(k) + 0.5) * h;
        double s = 0.0;
        for (int j = 0; j < 4; ++j)
            s += kGlw[j] * (f(c - 0.5 * h * kGlx[j]) + f(c + 0.5 * h * kGlx[j]));
        return 0.5 * h * s;
    };
    const std::vector<double> parts = parallel_map(std::size_t(panels), threads, one_panel);
    double total = 0.0;
    for (double p : parts) total += p;  // fixed order: deterministic
    return total;
}

double zeta_moment(double T, int power, const StepControl& sc) {
    if (T < 0.0) throw DomainError("zeta moment: T >= 0 required");
    if (T == 0.0) return 0.0;
    if (T > 5000.0) throw DomainError("zeta moment: T beyond the validated zeta band");

    auto f = [power](double t) {
        const double a2 = std::norm(zeta(Cx(0.5, t)));
        return power == 2 ? a2 : a2 * a2;
    };
    long long panels = std::llround(std::ceil(T / sc.initial_panel));
    double prev = composite_gl(f, 0.0, T, panels, sc.threads);
    for (int r = 0; r < sc.max_refine; ++r) {
        panels *= 2;
        const double cur = composite_gl(f, 0.0, T, panels, sc.threads);
        const double gap = std::abs(cur - prev);
        prev = cur;
        if (gap <= sc.rel_agree * std::abs(cur)) return cur;
    }
    throw QuadratureError("zeta moment: refinement limit reached", Cx(prev), 0.0);
}

// least squares for y ~ X beta with a small column count
std::vector<double> lsq_fit(const std::vector<std::vector<double>>& rows,
                            const std::vector<double>& y, double* residual) {
    const std::size_t n = rows.size(), m = rows.front().size();
    std::vector<std::vector<double>> ata(m, std::vector<double>(m, 0.0));
    std::vector<double> aty(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < m; ++a) {
            aty[a] += rows[i][a] * y[i];
            for (std::size_t b = 0; b < m; ++b) ata[a][b] += rows[i][a] * rows[i][b];
        }
    }
    // Gaussian elimination with partial pivoting
    std::vector<double> beta = aty;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::abs(ata[r][col]) > std::abs(ata[piv][col])) piv = r;
        std::swap(ata[piv], ata[col]);
        std::swap(beta[piv], beta[col]);
        for (std::size_t r = col + 1; r < m; ++r) {
            const double f = ata[r][col] / ata[col][col];
            for (std::size_t c2 = col; c2 < m; ++c2) ata[r][c2] -= f * ata[col][c2];
            beta[r] -= f * beta[col];
        }
    }
    for (std::size_t r = m; r-- > 0;) {
        for (std::size_t c2 = r + 1; c2 < m; ++c2) beta[r] -= ata[r][c2] * beta[c2];
        beta[r] /= ata[r][r];
    }
    if (residual) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double fit = 0.0;
            for (std::size_t a = 0; a < m; ++a) fit += rows[i][a] * beta[a];
            worst = std::max(worst, std::abs(fit - y[i]) / std::max(1.0, std::abs(y[i])));
        }
        *residual = worst;
    }
    return beta;
}

}  // namespace

double second_moment_zeta(double T, const StepControl& sc) { return zeta_moment(T, 2, sc); }

double fourth_moment_zeta(double T, const StepControl& sc) { return zeta_moment(T, 4, sc); }

MomentReport second_moment_slope_report(const std::vector<double>& T_grid,
                                        const StepControl& sc) {
    const auto start = std::chrono::steady_clock::now();
    MomentReport rep;
    rep.T_grid = T_grid;
    std::vector<std::vector<double>> rows;
    std::vector<double> y;
    double prev_integral = 0.0;
    for (double T : T_grid) {
        const double I = second_moment_zeta(T, sc);
        if (I < prev_integral)
            throw DomainError("second moment: integrals must be nondecreasing in T");
        prev_integral = I;
        rep.integrals.push_back(I);
        rows.push_back({std::log(T), 1.0});
        y.push_back(I / T);
    }
    rep.fitted_coefficients = lsq_fit(rows, y, &rep.residual);  // {slope, intercept}
    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

MomentReport fourth_moment_fit_report(double t_min, double t_max, int points,
                                      const StepControl& sc) {
    if (points < 6) throw DomainError("fourth moment fit: need at least 6 grid points");
    const auto start = std::chrono::steady_clock::now();
    MomentReport rep;
    const double ratio = std::pow(t_max / t_min, 1.0 / double(points - 1));
    double T = t_min;
    std::vector<std::vector<double>> rows;
    std::vector<double> y;
    double x_mean = 0.0;
    std::vector<double> xs;
    for (int i = 0; i < points; ++i) {
        rep.T_grid.push_back(T);
        const double I = fourth_moment_zeta(T, sc);
        rep.integrals.push_back(I);
        xs.push_back(std::log(T));
        x_mean += std::log(T);
        y.push_back(I / T);
        T *= ratio;
    }
    x_mean /= double(points);
    // shifted power basis for conditioning; the leading coefficient is
    // invariant under the shift
    for (double x : xs) {
        const double u = x - x_mean;
        rows.push_back({1.0, u, u * u, u * u * u, u * u * u * u});
    }
    std::vector<double> shifted = lsq_fit(rows, y, &rep.residual);
    // unshift: c_k = sum_{j>=k} binom(j,k) shifted_j (-x_mean)^{j-k}
    std::vector<double> coeff(5, 0.0);
    const double a = -x_mean;
    const double binom[5][5] = {{1, 1, 1, 1, 1},
                                {0, 1, 2, 3, 4},
                                {0, 0, 1, 3, 6},
                                {0, 0, 0, 1, 4},
                                {0, 0, 0, 0, 1}};
    for (int k = 0; k < 5; ++k)
        for (int j = k; j < 5; ++j)
            coeff[std::size_t(k)] += binom[k][j] * shifted[std::size_t(j)] *
                                     std::pow(a, double(j - k));
    rep.fitted_coefficients = coeff;
    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

double smoothing_weight(const NumberField& field, const HeckeCharacter& chi,
                        const SpectralParams& mu, double t, const WeightSpec& spec) {
    spec.validate();
    field.validate();
    const double logT = std::log(spec.T);

    auto kernel_product = [&](Cx w) {
        Cx prod(1.0, 0.0);
        for (int nu = 0; nu < field.arch_places(); ++nu) {
            LocalCharacterParams lp;
            lp.t_nu = chi.t_values.at(nu);
            lp.ell_nu = nu >= field.r1 ? chi.ell_values.at(nu - field.r1) : 0;
            const PlaceType place = nu < field.r1 ? PlaceType::Real : PlaceType::Complex;
            prod *= k_asym_main(place, t, Cx(0.0), w, lp, mu).value;
        }
        return prod;
    };

    auto integrand = [&](Cx w) {
        return kernel_product(w) * std::exp((w - 1.0) * (w - 1.0)) * std::exp(w * logT);
    };
    const Cx val = integrate_vertical_line_or_throw(integrand, spec.contour_re, spec.quad,
                                                    {DecayKind::Gaussian, 1.0});
    if (std::abs(val.imag()) > 1e-8 * std::abs(val) + 1e-280)
        throw QuadratureError("smoothing_weight: nonreal output beyond tolerance", val,
                              std::abs(val.imag()));
    return val.real();
}

PositivityReport landau_positivity_probe(double w, Cx mu, const LocalCharacterParams& chi,
                                         const std::vector<double>& t_grid,
                                         const QuadratureSpec& spec) {
    PositivityReport rep;
    rep.all_nonnegative = true;
    for (double t : t_grid) {
        const KExactResult k = k_exact_complex(t, Cx(w), chi, mu, spec);
        PositivityRow row{t, k.value.real(), k.error_bound, k.slow_decay_warning};
        const double mag = std::max(std::abs(k.value.real()), 1e-300);
        if (std::abs(k.value.imag()) > 1e-8 * mag) rep.all_nonnegative = false;
        if (k.value.real() < -1e-8 * mag) rep.all_nonnegative = false;
        rep.worst = std::min(rep.worst, k.value.real() / mag);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace mox
