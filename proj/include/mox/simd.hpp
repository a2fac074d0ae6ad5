// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

namespace mox::simd {

// Hot inner loops of the library, as runtime-dispatched kernels.
// Every kernel has a scalar reference implementation and (on x86-64 with
// AVX2+FMA) a vectorized variant; the two are equivalence-tested against
// each other in tests/test_simd.cpp.
struct Ops {
    const char* name;

    // Accumulates sum_i exp(a*logs[i]) * (cos(b*logs[i]), sin(b*logs[i])).
    // This is the Dirichlet-series block sum_n n^a * n^{ib} when logs[i] = ln n.
    void (*exp_cis_sum)(const double* logs, std::size_t count, double a, double b,
                        double* out_re, double* out_im);

    // sum_{n=n0}^{n1} ((x + n)^2 + y2)^p, with y2 > 0 or x non-integral.
    double (*shifted_power_sum)(double x, double y2, double p,
                                std::int64_t n0, std::int64_t n1);
};

const Ops& scalar_ops();

// AVX2+FMA variant, or nullptr when the CPU lacks support.
const Ops* avx2_ops();

// Best available backend. Set MOX_SIMD=scalar in the environment to force
// the reference kernels.
const Ops& active_ops();

}  // namespace mox::simd
