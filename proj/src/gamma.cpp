// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/gamma.hpp"

#include <cmath>

namespace mox {
namespace {

// Lanczos, g = 7, 9 terms. Good to ~1e-13 relative on Re z >= 1/2 at
// moderate |z|.
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} / (2k (2k-1)), the Stirling-series coefficients of 1/z^{2k-1}.
constexpr double kStirling[12] = {
    8.3333333333333333e-2,  -2.7777777777777778e-3, 7.9365079365079365e-4,
    -5.9523809523809524e-4, 8.4175084175084175e-4,  -1.9175269175269175e-3,
    6.4102564102564103e-3,  -2.9551372549019608e-2, 1.7964437236883057e-1,
    -1.3924322169059011e0,  1.3402864044168392e1,   -1.5684828462600202e2};

constexpr double kLogTwoPi = 1.83787706640934548356065947281123527;

bool near_nonpositive_integer(Cx z) {
    if (z.imag() != 0.0) return false;
    const double x = z.real();
    return x <= 0.5 && std::abs(x - std::round(x)) < 1e-13;
}

Cx lanczos_gamma(Cx z) {  // Re z >= 0.5
    Cx acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z + double(k - 1));
    const Cx t = z + 6.5;
    return std::sqrt(kTwoPi) * std::exp((z - 0.5) * std::log(t) - t) * acc;
}

// Stirling series; requires |z| >= 16 and Re z > 0.
Cx stirling_log_gamma(Cx z) {
    const Cx zinv = 1.0 / z;
    const Cx zinv2 = zinv * zinv;
    Cx corr = 0.0;
    Cx zpow = zinv;
    for (double c : kStirling) {
        corr += c * zpow;
        zpow *= zinv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * kLogTwoPi + corr;
}

Cx log_gamma_right_half(Cx z) {  // Re z > 0
    Cx shift = 0.0;
    while (std::abs(z) < 16.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling_log_gamma(z) - shift;
}

}  // namespace

Cx log_sin_pi(Cx z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}); |e^{2 i pi z}| <= 1 here
    const Cx i(0.0, 1.0);
    return Cx(-std::log(2.0), kPi / 2.0) - i * kPi * z +
           std::log(1.0 - std::exp(2.0 * i * kPi * z));
}

Cx log_gamma(Cx z) {
    if (!(z.real() > 0.0))
        throw DomainError("log_gamma: requires Re z > 0");
    return log_gamma_right_half(z);
}

Cx gamma(Cx z) {
    if (near_nonpositive_integer(z))
        throw PoleError("gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) {
        if (std::abs(z.imag()) <= 32.0 && std::abs(z) <= 40.0)
            return lanczos_gamma(z);
        const Cx lg = log_gamma_right_half(z);
        if (lg.real() > 709.0)
            throw OverflowError("gamma: result exceeds double range");
        return std::exp(lg);
    }
    // reflection
    const Cx w = 1.0 - z;
    if (z.imag() == 0.0) {
        const double s = std::sin(kPi * z.real());
        return kPi / (s * gamma(w));
    }
    const Cx lg = std::log(Cx(kPi)) - log_sin_pi(z) - log_gamma_right_half(w);
    if (lg.real() > 709.0)
        throw OverflowError("gamma: result exceeds double range");
    return std::exp(lg);
}

}  // namespace mox
