// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace mox {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Tolerances and subdivision budget for the adaptive integrators.
// Defaults: rel 1e-10 / abs 1e-12.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 4000;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
        if (max_subdivisions < 1)
            throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
    }
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an adaptive integrator cannot meet the requested tolerance.
// Carries the partial estimate and the achieved error bound.
struct QuadratureError : std::runtime_error {
    Cx partial;
    double error_bound;
    QuadratureError(const std::string& what, Cx part, double err)
        : std::runtime_error(what), partial(part), error_bound(err) {}
};

struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace mox
