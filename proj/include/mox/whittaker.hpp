// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mox/types.hpp"

namespace mox {

// Unramified local data at a finite place: residue cardinality and Satake
// parameters.
struct LocalSatakeData {
    long long q = 2;
    Cx alpha{1.0, 0.0};
    Cx beta{1.0, 0.0};

    void validate() const {
        if (q < 2) throw DomainError("LocalSatakeData: q >= 2 required");
        if (alpha == Cx(0.0) || beta == Cx(0.0))
            throw DomainError("LocalSatakeData: Satake parameters must be nonzero");
    }
    bool unitary_central() const { return std::abs(std::abs(alpha * beta) - 1.0) < 1e-12; }
};

// Unramified local character, described by its value at a uniformizer.
// value 0 encodes the ramified placeholder (empty Euler factor).
struct LocalCharacter {
    Cx value_at_uniformizer{1.0, 0.0};

    LocalCharacter inverse() const;
    LocalCharacter squared() const { return {value_at_uniformizer * value_at_uniformizer}; }
    bool ramified_placeholder() const { return value_at_uniformizer == Cx(0.0); }
};

// |d|_nu = q^{-delta} for local different exponent delta >= 0.
struct DifferentalData {
    int delta = 0;

    void validate() const {
        if (delta < 0) throw DomainError("DifferentalData: delta >= 0 required");
    }
    double d_norm(long long q) const { return std::pow(double(q), -double(delta)); }
};

// Truncated-series value with its geometric tail bound.
struct TruncatedValue {
    Cx value{0.0, 0.0};
    double tail_bound = 0.0;
};

// (1 - chi(pi) q^{-s})^{-1}; 1 for the ramified placeholder.
Cx local_l_factor(const LocalCharacter& chi, long long q, Cx s);

// Spherical Whittaker value at valuation m: 0 for m < 0, else
// q^{-m/2} (alpha^{m+1} - beta^{m+1}) / (alpha - beta), with the analytic
// limit (m+1) ((alpha+beta)/2)^m q^{-m/2} when |alpha - beta| < 1e-8.
Cx casselman_shalika(const LocalSatakeData& data, long long m);

// sum_{m=0}^{truncation} W(m) q^{-m(s-1/2)}; equals the product of the two
// Euler factors in the limit. Throws DivergenceError outside |alpha q^-s|,
// |beta q^-s| < 1.
TruncatedValue hecke_local_integral(const LocalSatakeData& data, Cx s, int truncation);

// The symmetrized local double sum
//   sum_{m, m' >= 0} (chi0/chi)(pi^m) W_1(m) conj(W_2)(m') chi(pi^{m'})
// equal (within the tail bound) to
//   L(chi0 chi^{-1}|.|^{1/2}, f1) * L(chi|.|^{1/2}, conj f2).
// f1 and f2 must sit at the same place (equal q).
TruncatedValue local_moment_factor(const LocalSatakeData& f1, const LocalSatakeData& f2,
                                   const LocalCharacter& chi0, const LocalCharacter& chi,
                                   int truncation);

// closed form of the two factors above, for cross-checks
Cx local_moment_factor_closed(const LocalSatakeData& f1, const LocalSatakeData& f2,
                              const LocalCharacter& chi0, const LocalCharacter& chi);

// Mellin transform of the normalized Eisenstein Whittaker function at one
// finite place:
//   |d|^{1/2} L(v+s, chi) L(v+1-s, chi^{-1}) / L(2s, chi^2)
//     * |d|^{-(v+1-s)} chi(d).
Cx finite_mellin_whittaker(const LocalCharacter& chi, long long q, const DifferentalData& d,
                           Cx s, Cx v);

// Independent oracle for finite_mellin_whittaker: the finite double sum over
// valuation shells of the two unfolded zeta integrals, divided by the
// L-factor normalizer. Convergence requires Re(v+s) > 0 and Re(v+1-s) > 0.
TruncatedValue tate_brute_force_mellin(const LocalCharacter& chi, long long q,
                                       const DifferentalData& d, Cx s, Cx v,
                                       int truncation);

enum class PlaceType { Real, Complex };

// Normalized archimedean Eisenstein Whittaker value:
//   real:    2 |a|^{1/2} K_{s-1/2}(2 pi |a|) / (pi^{-s} Gamma(s))
//   complex: 2 |a| K_{2s-1}(4 pi |a|) / ((2 pi)^{-2s} Gamma(2s))
Cx w_eis_arch(PlaceType place, Cx s, double a, const QuadratureSpec& spec = {});

struct MellinCompare {
    Cx quadrature{0.0, 0.0};
    Cx closed_form{0.0, 0.0};
    double relative_gap = 0.0;
};

// int_0^inf a^v w_eis_arch(s, a) da/a by quadrature against the K-Bessel
// Mellin-pair closed form.
MellinCompare arch_mellin_whittaker(PlaceType place, Cx s, Cx v,
                                    const QuadratureSpec& spec = {});

}  // namespace mox
