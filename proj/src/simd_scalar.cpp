// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/simd.hpp"

#include <cmath>

namespace mox::simd {
namespace {

void exp_cis_sum_scalar(const double* logs, std::size_t count, double a, double b,
                        double* out_re, double* out_im) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double L = logs[i];
        const double r = std::exp(a * L);
        const double phase = b * L;
        re += r * std::cos(phase);
        im += r * std::sin(phase);
    }
    *out_re += re;
    *out_im += im;
}

double shifted_power_sum_scalar(double x, double y2, double p,
                                std::int64_t n0, std::int64_t n1) {
    double acc = 0.0;
    for (std::int64_t n = n0; n <= n1; ++n) {
        const double u = x + static_cast<double>(n);
        acc += std::exp(p * std::log(u * u + y2));
    }
    return acc;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", exp_cis_sum_scalar, shifted_power_sum_scalar};
    return ops;
}

}  // namespace mox::simd
