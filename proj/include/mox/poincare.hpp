// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "mox/types.hpp"

namespace mox {

struct UpperHalfPoint {
    double x = 0.0;
    double y = 1.0;

    void validate() const {
        if (!(y > 0.0)) throw DomainError("UpperHalfPoint: y > 0 required");
    }
};

struct SeriesTruncation {
    long long coprime_bound = 200;      // pairs (c,d) with max(|c|,|d|) <= N
    long long translation_bound = 200;  // |n| <= N

    void validate() const {
        if (coprime_bound < 1 || translation_bound < 1)
            throw DomainError("SeriesTruncation: bounds >= 1 required");
    }
};

struct PoincareValue {
    Cx value{0.0, 0.0};
    double tail_estimate = 0.0;
    bool truncation_warning = false;  // tail_estimate > 1e-3 |value|
};

// Partial sum of the weight-(v, w) Poincare series over k = Q at z:
//   sum over coprime (c,d) mod sign, completed to gamma by extended gcd,
//   sum over integer translations n of  y_g^v (1 + ((x_g + n)/y_g)^2)^{-w/2}
// with (x_g, y_g) the Iwasawa data of gamma z. The evaluator reduces x mod 1,
// so the exact 1-periodicity of the series holds verbatim at any truncation.
// Convergence region: Re v > 1, Re w > 1.
PoincareValue eval_poincare_Q(UpperHalfPoint z, Cx v, Cx w, const SeriesTruncation& trunc);

struct EisensteinValue {
    Cx value{0.0, 0.0};
    double tail_bound = 0.0;  // explicit O(N^{2-2 Re s}) bound
};

// Partial sum of E(z, s) = sum_{(c,d)=1 mod sign} (y/|cz+d|^2)^s, Re s > 1.
EisensteinValue eval_eisenstein_Q(UpperHalfPoint z, Cx s, const SeriesTruncation& trunc);

struct DominationRow {
    UpperHalfPoint z;
    double poincare = 0.0;
    double eisenstein_pair = 0.0;
    double ratio = 0.0;
};

struct DominationReport {
    std::vector<DominationRow> rows;
    double max_ratio = 0.0;
    bool bounded = false;
};

// Ratio of the Poincare partial sum against E(v) + E(v+1+2 eps) over a grid;
// boundedness of the ratio is the assertion, the constant is reported.
// Requires real v > 1 + 2 eps and real w > 1 + eps.
DominationReport domination_check(const std::vector<UpperHalfPoint>& grid, double v,
                                  double w, double epsilon, const SeriesTruncation& trunc);

struct CauchyProbe {
    std::vector<long long> ladder;
    std::vector<double> partials;
    std::vector<double> increments;
    bool increments_decreasing = false;
    bool converged = false;           // final increment < 1e-6 |final value|
    double final_relative_increment = 0.0;
};

// Partial sums over a truncation ladder; detects both Cauchy behaviour in
// the convergence region and divergence outside it (Re v <= 1).
CauchyProbe cauchy_convergence_probe(UpperHalfPoint z, double v, double w,
                                     const std::vector<long long>& ladder);

}  // namespace mox
