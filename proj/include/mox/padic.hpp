// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "mox/types.hpp"

namespace mox {

// Exact cardinality of the Cartan cell K \ K delta K at ||delta|| = q^ell:
// 1 for ell = 0, else (q+1) q^{ell-1}. Always below the coarse bound q^{ell+1}.
long long cell_index(long long q, int ell);

// Independent oracle: counts subgroups H of (Z/p^ell)^2 with cyclic quotient
// of order p^ell by exhaustive kernel enumeration and explicit verification
// of each candidate (cardinality and the existence of a full-order coset).
// Intended for p in {2,3,5}, ell <= 3.
long long brute_force_cell_count(long long p, int ell);

struct NormIntegral {
    double exact = 0.0;        // 1 + (q+1) q^{-sigma} / (1 - q^{1-sigma})
    double paper_bound = 0.0;  // (1 + q^{2-sigma}) / (1 - q^{1-sigma})
};

// Local norm integral over PGL2 of a p-adic field with meas(K) = 1.
// Throws DivergenceError for sigma <= 1.
NormIntegral local_norm_integral(long long q, double sigma);

struct GlobalProductCheck {
    double product = 0.0;    // truncated Euler product over p <= prime_bound
    double zeta_form = 0.0;  // zeta(a) zeta(b) / zeta(2a)
    double gap = 0.0;
};

GlobalProductCheck global_norm_product_check(double a, double b, long long prime_bound);

// Archimedean analog int_R max(|x|, 1/|x|)^{d - sigma} dx, finite for
// sigma > d + 1, in closed form 2 (1/(sigma - d - 1) + 1/(sigma - d + 1)).
double arch_norm_integral_closed(int d, double sigma);
double arch_norm_integral_quadrature(int d, double sigma, const QuadratureSpec& spec = {});

// Operator-norm based group norm on normalized 2x2 matrices:
// ||g|| = max(|g|_op, |g^{-1}|_op) after scaling det to +-1.
double pgl2_norm(const double m[4]);

}  // namespace mox
