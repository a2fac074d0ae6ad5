// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mox/types.hpp"

namespace mox {

// Modified Bessel K of complex order, x > 0, from the integral
// representation int_0^inf exp(-x cosh t) cosh(order t) dt by trapezoidal
// refinement (geometric convergence; the integrand is analytic with
// double-exponential decay). Even in the order by construction.
// Throws QuadratureError when the tolerance cannot be met (e.g. catastrophic
// cancellation for strongly imaginary orders at small x).
Cx bessel_k(Cx order, double x, const QuadratureSpec& spec = {});

// Bessel J of integer order: power series for small argument, Miller
// backward recurrence beyond. Absolute accuracy ~1e-12 for x <= 1e4,
// |order| <= 1e4.
double bessel_j(int order, double x);

}  // namespace mox
