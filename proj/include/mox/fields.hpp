// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "mox/types.hpp"

namespace mox {

// Archimedean data of a number field. Discriminant, unit logs and the zeta
// residue are inputs, not computed: the built-ins are validated constants
// and user fields come from the key/value file format (see load_field_file).
struct NumberField {
    int r1 = 0;  // real places
    int r2 = 0;  // complex places (conjugate pairs counted once)
    long long abs_discriminant = 1;
    // one row per fundamental unit; entry nu is d_nu * log|unit|_nu over the
    // r1 + r2 archimedean places (real first), natural logs, rows sum to 0
    std::vector<std::vector<double>> unit_logs;
    long long roots_of_unity = 2;  // w_k
    double zeta_residue = 1.0;     // Res_{s=1} zeta_k
    std::string name;

    int degree() const { return r1 + 2 * r2; }
    int arch_places() const { return r1 + r2; }
    int unit_rank() const { return r1 + r2 - 1; }
    // local degree d_nu of archimedean place index (real places first)
    int place_degree(int place) const { return place < r1 ? 1 : 2; }

    void validate() const;  // throws DomainError on inconsistent data
};

enum class BuiltinField { Q, Q_i, Q_sqrt2 };

NumberField builtin_field(BuiltinField which);

// Accepts "Q" | "Q_i" | "Q_sqrt2" or a path to a field-description file.
NumberField field_from_spec(const std::string& name_or_path);

// Field-description file: '#' comments; `key = value` lines with keys r1,
// r2, abs_discriminant, roots_of_unity, zeta_residue, unit_logs (array of
// arrays), optional name. Validated on load.
NumberField load_field_file(const std::string& path);

// Absolutely unramified spherical Hecke character: continuous parameters
// t_nu per archimedean place and discrete parameters ell_nu per complex
// place.
struct HeckeCharacter {
    std::vector<double> t_values;         // size r1 + r2
    std::vector<long long> ell_values;    // size r2

    bool is_trivial() const;
    HeckeCharacter inverse() const;
};

// All characters with max(|t_nu|, |ell_nu|) <= bound, generated from the
// triviality conditions on fundamental units and roots of unity. For Q this
// is just the trivial character. Throws DomainError when the unit-log matrix
// is ill-conditioned (regulator near zero).
std::vector<HeckeCharacter> character_lattice(const NumberField& field, double bound);

// Local component chi_nu at z != 0: |z|^{i t} at a real place (z taken as a
// signed real), |z|_C^{ell/2 + i t} z^{-ell} at a complex place. Unit modulus.
Cx character_value(const NumberField& field, const HeckeCharacter& chi, int place_index,
                   Cx z);

// Per-character archimedean budget:
// prod_real (1 + |t + t_nu|) * prod_complex (1 + ell^2 + 4 (t + t_nu)^2).
double kappa_chi(const NumberField& field, const HeckeCharacter& chi, double t);

struct MomentBudget {
    long long character_count = 0;  // characters with nonempty {t : kappa <= T}
    double total_measure = 0.0;     // sum of Lebesgue measures of those sets
};

// Enumerates contributing characters for the budget level T > 1 and measures
// each {t : kappa_chi(t) <= T} by sign-change root isolation.
MomentBudget moment_budget(const NumberField& field, double T);

}  // namespace mox
