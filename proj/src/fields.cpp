// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/fields.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mox {
namespace {

constexpr double kUnitTrivialityTol = 1e-10;

// log(1 + sqrt(2)), the regulator of Q(sqrt 2)
constexpr double kLogFundamentalUnitSqrt2 = 0.88137358701954302523260932497979;

}  // namespace

void NumberField::validate() const {
    if (r1 < 0 || r2 < 0 || degree() < 1)
        throw DomainError("NumberField: need r1, r2 >= 0 and degree >= 1");
    if (abs_discriminant < 1) throw DomainError("NumberField: |discriminant| >= 1");
    if (roots_of_unity < 2) throw DomainError("NumberField: w_k >= 2");
    if (!(zeta_residue > 0.0)) throw DomainError("NumberField: zeta residue > 0");
    if (static_cast<int>(unit_logs.size()) != unit_rank())
        throw DomainError("NumberField: unit vector count must equal r1 + r2 - 1");
    for (const auto& row : unit_logs) {
        if (static_cast<int>(row.size()) != arch_places())
            throw DomainError("NumberField: unit vector length must equal r1 + r2");
        double sum = 0.0;
        for (double v : row) sum += v;
        if (std::abs(sum) > 1e-9)
            throw DomainError("NumberField: unit log vector must sum to 0 (product formula)");
    }
}

NumberField builtin_field(BuiltinField which) {
    NumberField f;
    switch (which) {
        case BuiltinField::Q:
            f.r1 = 1;
            f.r2 = 0;
            f.abs_discriminant = 1;
            f.roots_of_unity = 2;
            f.zeta_residue = 1.0;
            f.name = "Q";
            break;
        case BuiltinField::Q_i:
            f.r1 = 0;
            f.r2 = 1;
            f.abs_discriminant = 4;
            f.roots_of_unity = 4;
            f.zeta_residue = kPi / 4.0;
            f.name = "Q_i";
            break;
        case BuiltinField::Q_sqrt2:
            f.r1 = 2;
            f.r2 = 0;
            f.abs_discriminant = 8;
            f.roots_of_unity = 2;
            f.zeta_residue = kLogFundamentalUnitSqrt2 / std::sqrt(2.0);
            f.unit_logs = {{kLogFundamentalUnitSqrt2, -kLogFundamentalUnitSqrt2}};
            f.name = "Q_sqrt2";
            break;
    }
    f.validate();
    return f;
}

NumberField field_from_spec(const std::string& name_or_path) {
    if (name_or_path == "Q") return builtin_field(BuiltinField::Q);
    if (name_or_path == "Q_i") return builtin_field(BuiltinField::Q_i);
    if (name_or_path == "Q_sqrt2") return builtin_field(BuiltinField::Q_sqrt2);
    return load_field_file(name_or_path);
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// parses "[[a, b], [c, d]]"
std::vector<std::vector<double>> parse_nested_array(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::vector<double> cur;
    std::string num;
    int depth = 0;
    auto flush_num = [&] {
        const std::string t = trim(num);
        num.clear();
        if (t.empty()) return;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(t, &pos);
        } catch (...) {
            throw ParseError("field file: bad number '" + t + "' in unit_logs");
        }
        if (pos != t.size()) throw ParseError("field file: bad number '" + t + "'");
        cur.push_back(v);
    };
    for (char ch : text) {
        if (ch == '[') {
            ++depth;
            if (depth > 2) throw ParseError("field file: unit_logs nested too deep");
        } else if (ch == ']') {
            flush_num();
            if (depth == 2) {
                rows.push_back(cur);
                cur.clear();
            }
            --depth;
            if (depth < 0) throw ParseError("field file: unbalanced brackets");
        } else if (ch == ',') {
            if (depth == 2) flush_num();
        } else {
            if (depth == 2) num += ch;
        }
    }
    if (depth != 0) throw ParseError("field file: unbalanced brackets in unit_logs");
    return rows;
}

}  // namespace

NumberField load_field_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("field file: cannot open '" + path + "'");

    NumberField f;
    f.name = path;
    bool saw_r1 = false, saw_r2 = false, saw_disc = false, saw_res = false;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("field file: expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "r1") {
                f.r1 = std::stoi(val);
                saw_r1 = true;
            } else if (key == "r2") {
                f.r2 = std::stoi(val);
                saw_r2 = true;
            } else if (key == "abs_discriminant") {
                f.abs_discriminant = std::stoll(val);
                saw_disc = true;
            } else if (key == "roots_of_unity") {
                f.roots_of_unity = std::stoll(val);
            } else if (key == "zeta_residue") {
                f.zeta_residue = std::stod(val);
                saw_res = true;
            } else if (key == "unit_logs") {
                f.unit_logs = parse_nested_array(val);
            } else if (key == "name") {
                f.name = val;
            } else {
                throw ParseError("field file: unknown key '" + key + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            throw ParseError("field file: bad value for key '" + key + "'");
        }
    }
    if (!saw_r1 || !saw_r2 || !saw_disc || !saw_res)
        throw ParseError("field file: r1, r2, abs_discriminant, zeta_residue are required");
    f.validate();
    return f;
}

bool HeckeCharacter::is_trivial() const {
    for (double t : t_values)
        if (t != 0.0) return false;
    for (long long l : ell_values)
        if (l != 0) return false;
    return true;
}

HeckeCharacter HeckeCharacter::inverse() const {
    HeckeCharacter inv = *this;
    for (double& t : inv.t_values) t = -t;
    for (long long& l : inv.ell_values) l = -l;
    return inv;
}

namespace {

// solve M x = rhs by Gaussian elimination with partial pivoting;
// throws DomainError when M is numerically singular
std::vector<double> solve_linear(std::vector<std::vector<double>> M, std::vector<double> rhs) {
    const int n = static_cast<int>(M.size());
    double scale = 0.0;
    for (const auto& row : M)
        for (double v : row) scale = std::max(scale, std::abs(v));
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
        if (std::abs(M[piv][col]) < 1e-12 * std::max(scale, 1.0))
            throw DomainError("character_lattice: ill-conditioned unit matrix");
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = col + 1; r < n; ++r) {
            const double fac = M[r][col] / M[col][col];
            for (int c = col; c < n; ++c) M[r][c] -= fac * M[col][c];
            rhs[r] -= fac * rhs[col];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double s = rhs[r];
        for (int c = r + 1; c < n; ++c) s -= M[r][c] * x[c];
        x[r] = s / M[r][r];
    }
    return x;
}

// t-vectors are rebuilt so that sum_nu d_nu t_nu = 0 holds exactly: the last
// component is defined as minus the accumulated weighted sum.
std::vector<double> close_trace_zero(const NumberField& f, std::vector<double> t) {
    const int m = f.arch_places();
    double acc = 0.0;
    for (int nu = 0; nu + 1 < m; ++nu) acc += f.place_degree(nu) * t[nu];
    t[m - 1] = -acc / f.place_degree(m - 1);
    return t;
}

void verify_unit_triviality(const NumberField& f, const std::vector<double>& t) {
    for (const auto& u : f.unit_logs) {
        double phase = 0.0;
        for (int nu = 0; nu < f.arch_places(); ++nu) phase += t[nu] * u[nu];
        if (std::abs(std::exp(Cx(0.0, phase)) - 1.0) > kUnitTrivialityTol)
            throw DomainError("character_lattice: generated character fails unit triviality");
    }
}

}  // namespace

std::vector<HeckeCharacter> character_lattice(const NumberField& field, double bound) {
    field.validate();
    if (!(bound > 0.0)) throw DomainError("character_lattice: bound > 0 required");

    const int places = field.arch_places();
    const int rank = field.unit_rank();

    // t-lattice generators on the trace-zero hyperplane
    std::vector<std::vector<double>> gens;  // each of length `places`
    if (rank > 0) {
        // hyperplane basis b_j = e_j / d_j - e_last / d_last
        // M[i][j] = <unit_i, b_j>; generator g_j = 2 pi * B * (M^{-1} e_j)
        std::vector<std::vector<double>> M(rank, std::vector<double>(rank));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                M[i][j] = field.unit_logs[i][j] / field.place_degree(j) -
                          field.unit_logs[i][places - 1] / field.place_degree(places - 1);
        for (int j = 0; j < rank; ++j) {
            std::vector<double> rhs(rank, 0.0);
            rhs[j] = kTwoPi;
            const std::vector<double> coef = solve_linear(M, rhs);
            std::vector<double> g(places, 0.0);
            for (int i = 0; i < rank; ++i) {
                g[i] += coef[i] / field.place_degree(i);
                g[places - 1] -= coef[i] / field.place_degree(places - 1);
            }
            gens.push_back(close_trace_zero(field, g));
        }
    }

    // discrete parameters: multiples of w_k for an imaginary quadratic field
    // (rank 0), 0 otherwise -- nonzero ell with positive unit rank needs unit
    // phase data that is not part of the field description
    std::vector<long long> ell_choices{0};
    const bool ell_free = (field.r2 == 1 && rank == 0);
    if (ell_free) {
        ell_choices.clear();
        const long long step = field.roots_of_unity;
        for (long long l = -(long long)(std::floor(bound / step)) * step; l <= bound;
             l += step)
            ell_choices.push_back(l);
    }

    // enumeration box for the lattice coefficients via dual-basis norms
    std::vector<long long> box(rank, 0);
    if (rank > 0) {
        // Gram matrix and its inverse give the dual vectors
        std::vector<std::vector<double>> gram(rank, std::vector<double>(rank, 0.0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                for (int nu = 0; nu < places; ++nu) gram[i][j] += gens[i][nu] * gens[j][nu];
        for (int j = 0; j < rank; ++j) {
            std::vector<double> rhs(rank, 0.0);
            rhs[j] = 1.0;
            const std::vector<double> col = solve_linear(gram, rhs);
            // dual_j = sum_i col[i] gens[i]; |m_j| <= ||dual_j||_1 * bound
            double l1 = 0.0;
            for (int nu = 0; nu < places; ++nu) {
                double d = 0.0;
                for (int i = 0; i < rank; ++i) d += col[i] * gens[i][nu];
                l1 += std::abs(d);
            }
            box[j] = static_cast<long long>(std::floor(l1 * bound)) + 1;
        }
    }

    std::vector<HeckeCharacter> out;
    std::vector<long long> m(rank, 0);
    auto emit_for_m = [&] {
        std::vector<double> t(places, 0.0);
        for (int nu = 0; nu < places; ++nu)
            for (int i = 0; i < rank; ++i) t[nu] += double(m[i]) * gens[i][nu];
        if (rank > 0) t = close_trace_zero(field, t);
        for (double tv : t)
            if (std::abs(tv) > bound + 1e-9) return;
        verify_unit_triviality(field, t);
        for (long long l : ell_choices) {
            HeckeCharacter chi;
            chi.t_values = t;
            chi.ell_values.assign(field.r2, l);
            bool ok = true;
            for (long long lv : chi.ell_values)
                if (std::llabs(lv) > bound) ok = false;
            if (ok) out.push_back(std::move(chi));
        }
    };

    if (rank == 0) {
        emit_for_m();
    } else {
        // walk the integer box
        std::vector<long long> idx(rank);
        for (int i = 0; i < rank; ++i) idx[i] = -box[i];
        for (;;) {
            for (int i = 0; i < rank; ++i) m[i] = idx[i];
            emit_for_m();
            int carry = 0;
            while (carry < rank && ++idx[carry] > box[carry]) {
                idx[carry] = -box[carry];
                ++carry;
            }
            if (carry == rank) break;
        }
    }

    // canonical order: trivial first, then lexicographic
    std::sort(out.begin(), out.end(), [](const HeckeCharacter& a, const HeckeCharacter& b) {
        if (a.is_trivial() != b.is_trivial()) return a.is_trivial();
        if (a.t_values != b.t_values) return a.t_values < b.t_values;
        return a.ell_values < b.ell_values;
    });
    return out;
}

Cx character_value(const NumberField& field, const HeckeCharacter& chi, int place_index,
                   Cx z) {
    if (place_index < 0 || place_index >= field.arch_places())
        throw DomainError("character_value: place index out of range");
    if (z == Cx(0.0, 0.0)) throw DomainError("character_value: z must be nonzero");
    const double t = chi.t_values.at(place_index);
    if (place_index < field.r1) {
        // real place: |z|^{i t} for signed real z
        const double a = std::abs(z.real());
        if (a == 0.0) throw DomainError("character_value: real place needs real z != 0");
        return std::exp(Cx(0.0, t * std::log(a)));
    }
    const long long ell = chi.ell_values.at(place_index - field.r1);
    // |z|_C = |z|^2; value = |z|_C^{ell/2 + i t} z^{-ell}, unit modulus
    const double log_norm = 2.0 * std::log(std::abs(z));
    const Cx modulus_part = std::exp(Cx(0.5 * double(ell), t) * log_norm);
    return modulus_part * std::pow(z, Cx(double(-ell)));
}

double kappa_chi(const NumberField& field, const HeckeCharacter& chi, double t) {
    double prod = 1.0;
    for (int nu = 0; nu < field.arch_places(); ++nu) {
        const double shifted = t + chi.t_values.at(nu);
        if (nu < field.r1) {
            prod *= 1.0 + std::abs(shifted);
        } else {
            const double ell = double(chi.ell_values.at(nu - field.r1));
            prod *= 1.0 + ell * ell + 4.0 * shifted * shifted;
        }
    }
    return prod;
}

MomentBudget moment_budget(const NumberField& field, double T) {
    if (!(T > 1.0)) throw DomainError("moment_budget: requires T > 1");

    // kappa >= 1 + ell^2 at a complex place and the windows around -t_nu must
    // intersect, so this enumeration bound covers every contributing character
    const double bound = T + std::sqrt(T);
    const std::vector<HeckeCharacter> chars = character_lattice(field, bound);

    MomentBudget budget;
    for (const auto& chi : chars) {
        // kappa <= T forces every local factor <= T, i.e. t in the
        // intersection of per-place windows around -t_nu
        double lo = -1e300, hi = 1e300;
        bool feasible = true;
        for (int nu = 0; nu < field.arch_places() && feasible; ++nu) {
            double w;
            if (nu < field.r1) {
                w = T - 1.0;
            } else {
                const double ell = double(chi.ell_values.at(nu - field.r1));
                const double room = T - 1.0 - ell * ell;
                if (room < 0.0) {
                    feasible = false;
                    break;
                }
                w = 0.5 * std::sqrt(room);
            }
            lo = std::max(lo, -chi.t_values[nu] - w);
            hi = std::min(hi, -chi.t_values[nu] + w);
        }
        if (!feasible || lo >= hi) continue;

        const int grid = 20000;
        const double step = (hi - lo) / grid;
        double measure = 0.0;
        bool nonempty = false;

        auto inside = [&](double t) { return kappa_chi(field, chi, t) <= T; };
        // refine a bracketed boundary point to ~1e-12 * scale
        auto refine = [&](double a, double b) {
            for (int i = 0; i < 60; ++i) {
                const double mid = 0.5 * (a + b);
                (inside(mid) == inside(a) ? a : b) = mid;
            }
            return 0.5 * (a + b);
        };

        bool prev = inside(lo);
        double entry = prev ? lo : 0.0;
        for (int i = 1; i <= grid; ++i) {
            const double t = lo + i * step;
            const bool cur = inside(t);
            if (cur && !prev) entry = refine(t - step, t);
            if (!cur && prev) {
                measure += refine(t - step, t) - entry;
                nonempty = true;
            }
            if (cur) nonempty = true;
            prev = cur;
        }
        if (prev) measure += hi - entry;

        if (nonempty && measure > 0.0) {
            ++budget.character_count;
            budget.total_measure += measure;
        }
    }
    return budget;
}

}  // namespace mox
