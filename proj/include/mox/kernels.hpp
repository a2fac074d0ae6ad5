// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mox/fields.hpp"
#include "mox/types.hpp"
#include "mox/whittaker.hpp"

namespace mox {

// Local spectral parameters of the two forms at one archimedean place.
struct SpectralParams {
    Cx mu1{0.0, 0.0};
    Cx mu2{0.0, 0.0};

    bool kim_shahidi_admissible() const {
        return std::abs((Cx(0.0, 1.0) * mu1).real()) < 1.0 / 9.0 &&
               std::abs((Cx(0.0, 1.0) * mu2).real()) < 1.0 / 9.0;
    }
};

// Local character data at one archimedean place (ell only meaningful at a
// complex place).
struct LocalCharacterParams {
    double t_nu = 0.0;
    long long ell_nu = 0;
};

// Real-place gamma-ratio kernel:
//   pi^{-v} G((v+1-s)/2) G((v+w-s)/2) G((v+s)/2) G((v+w+s-1)/2)
//     / (G(w/2) G(v + w/2)).
// Invariant under s -> 1-s. Throws PoleError naming the offending factor.
Cx g_real(Cx s, Cx v, Cx w);

// Complex-place analog:
//   (2 pi)^{-2v} G(v+1-s) G(v+w-s) G(v+s) G(v+w+s-1) / (G(w) G(2v+w)).
Cx g_complex(Cx s, Cx v, Cx w);

// Asymptotic-constant gamma ratio at a complex place:
//   2^{4w-4v-4} G(w+v+i mu1+i conj mu2) G(w+v-i mu1+i conj mu2)
//               G(w+v+i mu1-i conj mu2) G(w+v-i mu1-i conj mu2) / G(2w+2v).
Cx a_complex(Cx v, Cx w, const SpectralParams& mu);

struct KAsymResult {
    Cx value{0.0, 0.0};
    // true when an unnormalized overall constant was dropped (real place,
    // where the constant is not explicitly available)
    bool constant_suppressed = false;
};

// Asymptotic main term of the archimedean kernel.
//   complex place: pi^{1-2v} a_complex(v,w,mu) (1 + ell^2 + 4(t+t_nu)^2)^{-w}
//   real place:    (1 + |t+t_nu|)^{-w}, normalized constant suppressed
KAsymResult k_asym_main(PlaceType place, double t, Cx v, Cx w,
                        const LocalCharacterParams& chi, const SpectralParams& mu);

struct KExactResult {
    Cx value{0.0, 0.0};
    double error_bound = 0.0;
    bool slow_decay_warning = false;  // Re w near the 3/4 boundary
};

// Exact complex-place kernel in the v = 0, Re s = 1/2, mu1 = mu2 = mu regime:
//   (2 pi)^3 int_0^1 c^{2w-1} |V(c)|^2 dc,
//   V(c) = int_0^inf u^{2i(t_nu+t)} K_{2 i mu}(4 pi u c) J_{|ell|}(4 pi u sqrt(1-c^2)) du.
// Real and nonnegative for real w by construction. mu must be real or purely
// imaginary with |mu| <= 0.45.
KExactResult k_exact_complex(double t, Cx w, const LocalCharacterParams& chi, Cx mu,
                             const QuadratureSpec& spec = {});

// Eisenstein leading-term scalar:
//   prod_real sqrt(pi) G((w-1)/2)/G(w/2) * prod_complex 2 pi/(w-1).
Cx r_eisenstein(const NumberField& field, Cx w);

// Product over archimedean places of the normalized Whittaker pairings:
//   real: g_real/(pi^{-s} G(s));  complex: g_complex/((2 pi)^{-2s-1} G(2s)).
Cx q_scalar(const NumberField& field, Cx s, Cx v, Cx w);

struct MellinIdentityReport {
    Cx lhs{0.0, 0.0};  // nested quadrature
    Cx rhs{0.0, 0.0};  // gamma closed form
    double relative_gap = 0.0;
};

// Cross-validates the closed form of q_scalar's per-place factor against the
// double integral int |a|^v FT(Phi)(a) W^E_s(a) d^x a with Phi from the
// explicit seed (1+x^2)^{-w/2} (real place) / (1+|x|^2)^{-w} (complex place).
MellinIdentityReport mellin_identity_check(PlaceType place, Cx s, Cx v, Cx w,
                                           const QuadratureSpec& spec = {});

}  // namespace mox
