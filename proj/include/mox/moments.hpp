// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "mox/fields.hpp"
#include "mox/kernels.hpp"
#include "mox/types.hpp"

namespace mox {

struct StepControl {
    double initial_panel = 0.5;  // panel width for the composite rule
    double rel_agree = 1e-4;     // successive-refinement agreement target
    int max_refine = 8;
    int threads = 1;
};

// int_0^T |zeta(1/2+it)|^p dt for p = 2, 4 by composite Gauss-Legendre with
// step refinement until two successive refinements agree to rel_agree.
double second_moment_zeta(double T, const StepControl& sc = {});
double fourth_moment_zeta(double T, const StepControl& sc = {});

struct MomentReport {
    std::vector<double> T_grid;
    std::vector<double> integrals;
    std::vector<double> fitted_coefficients;
    double residual = 0.0;
    double runtime_seconds = 0.0;
};

// I2(T)/T regressed against log T; fitted_coefficients = {slope, intercept}.
MomentReport second_moment_slope_report(const std::vector<double>& T_grid,
                                        const StepControl& sc = {});

// I4(T)/T fitted by a degree-4 polynomial in log T over a geometric grid of
// `points` values in [t_min, t_max]; fitted_coefficients = {c0..c4}.
MomentReport fourth_moment_fit_report(double t_min, double t_max, int points,
                                      const StepControl& sc = {});

// Contour data for the smoothing weight: h(w) = exp((w-1)^2), h(1) = 1.
struct WeightSpec {
    double contour_re = 3.0;
    double T = 100.0;
    QuadratureSpec quad{1e-8, 1e-12, 4000};

    void validate() const {
        if (!(contour_re > 1.0)) throw DomainError("WeightSpec: contour_re > 1 required");
        if (!(T > 1.0)) throw DomainError("WeightSpec: T > 1 required");
    }
};

// M_{chi,T}(t): the contour integral of the product of archimedean main-term
// kernels against h(w) T^w over Re w = contour_re. Real by contour symmetry;
// the imaginary residue is checked against 1e-8 relative.
double smoothing_weight(const NumberField& field, const HeckeCharacter& chi,
                        const SpectralParams& mu, double t, const WeightSpec& spec);

struct PositivityRow {
    double t = 0.0;
    double value = 0.0;
    double error_bound = 0.0;
    bool slow_decay = false;
};

struct PositivityReport {
    std::vector<PositivityRow> rows;
    bool all_nonnegative = false;
    double worst = 0.0;  // most negative value / magnitude seen
};

// Evaluates the exact complex-place kernel on a t-grid and checks the
// structural nonnegativity that powers the Landau-lemma argument.
PositivityReport landau_positivity_probe(double w, Cx mu, const LocalCharacterParams& chi,
                                         const std::vector<double>& t_grid,
                                         const QuadratureSpec& spec = {});

}  // namespace mox
