// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: tabulates every library operation as CSV or
// structured text and runs the verification suite.
//
// Exit codes: 0 success, 1 check failure, 2 invalid input, 3 numeric failure.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mox/acceptance.hpp"
#include "mox/bessel.hpp"
#include "mox/fields.hpp"
#include "mox/gamma.hpp"
#include "mox/kernels.hpp"
#include "mox/moments.hpp"
#include "mox/padic.hpp"
#include "mox/parallel.hpp"
#include "mox/poincare.hpp"
#include "mox/whittaker.hpp"
#include "mox/zeta.hpp"

namespace {

using mox::Cx;

struct Table {
    std::vector<std::string> columns;  // first column is always "tag"
    std::vector<std::vector<std::string>> rows;
};

struct OutputConfig {
    std::string out_path;  // empty = stdout
    std::string format = "csv";
    std::string config_line;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
};

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void emit(const Table& table, const OutputConfig& cfg) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) throw mox::ParseError("cannot open output file " + cfg.out_path);
        os = &file;
    }
    std::ostringstream hash_src;
    hash_src << cfg.config_line << " rel=" << cfg.rel_tol << " abs=" << cfg.abs_tol;
    *os << "# mox\n";
    *os << "# config: " << cfg.config_line << "\n";
    *os << "# config-hash: 0x" << std::hex << fnv1a(hash_src.str()) << std::dec << "\n";
    *os << "# tol: rel=" << num(cfg.rel_tol) << " abs=" << num(cfg.abs_tol) << "\n";
    if (cfg.format == "csv") {
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            *os << (i ? "," : "") << table.columns[i];
        *os << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) *os << (i ? "," : "") << row[i];
            *os << "\n";
        }
    } else {
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            *os << "row " << (r + 1) << "\n";
            for (std::size_t i = 0; i < table.columns.size(); ++i)
                *os << "  " << table.columns[i] << " = " << table.rows[r][i] << "\n";
        }
    }
}

Cx parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return Cx(std::stod(text), 0.0);
        return Cx(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
    } catch (...) {
        throw mox::ParseError("bad complex literal '" + text + "' (expected re or re,im)");
    }
}

std::vector<double> parse_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw mox::ParseError("bad grid '" + text + "' (expected min:max:step)");
    double lo, hi, step;
    try {
        lo = std::stod(text.substr(0, c1));
        hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        step = std::stod(text.substr(c2 + 1));
    } catch (...) {
        throw mox::ParseError("bad grid '" + text + "'");
    }
    if (!(step > 0.0) || hi < lo) throw mox::ParseError("bad grid '" + text + "'");
    std::vector<double> out;
    for (double t = lo; t <= hi + 1e-12 * step; t += step) out.push_back(t);
    return out;
}

int run_kernel(const std::string& place_name, const std::string& t_grid, Cx v, Cx w,
               double mu, long long ell, double t_nu, bool with_exact,
               const OutputConfig& cfg) {
    const bool complex_place = place_name == "complex";
    if (!complex_place && place_name != "real")
        throw mox::ParseError("--place must be real or complex");
    const auto grid = parse_grid(t_grid);
    mox::SpectralParams sp{Cx(mu), Cx(mu)};
    mox::LocalCharacterParams chi{t_nu, ell};

    Table tab;
    tab.columns = {"tag", "t", "main_re", "main_im"};
    if (with_exact) {
        tab.columns.push_back("exact");
        tab.columns.push_back("exact_err_bound");
    }
    for (double t : grid) {
        const auto main = mox::k_asym_main(
            complex_place ? mox::PlaceType::Complex : mox::PlaceType::Real, t, v, w, chi, sp);
        std::vector<std::string> row{complex_place ? "eq=5.2" : "eq=5.4", num(t),
                                     num(main.value.real()), num(main.value.imag())};
        if (with_exact) {
            if (!complex_place) throw mox::ParseError("--exact requires --place complex");
            const auto ex = mox::k_exact_complex(t, w, chi, Cx(mu),
                                                 {std::max(cfg.rel_tol, 1e-8), cfg.abs_tol, 4000});
            row[0] = "eq=5.11";
            row.push_back(num(ex.value.real()));
            row.push_back(num(ex.error_bound));
        }
        tab.rows.push_back(std::move(row));
    }
    emit(tab, cfg);
    return 0;
}

int run_characters(const std::string& field_spec, double bound, double budget_T,
                   const OutputConfig& cfg) {
    const mox::NumberField field = mox::field_from_spec(field_spec);
    const auto chars = mox::character_lattice(field, bound);

    Table tab;
    tab.columns = {"tag", "index"};
    for (int nu = 0; nu < field.arch_places(); ++nu)
        tab.columns.push_back("t" + std::to_string(nu));
    for (int j = 0; j < field.r2; ++j) tab.columns.push_back("ell" + std::to_string(j));
    tab.columns.push_back("kappa_at_0");

    int idx = 0;
    for (const auto& chi : chars) {
        std::vector<std::string> row{"eq=5.9", std::to_string(idx++)};
        for (double t : chi.t_values) row.push_back(num(t));
        for (long long l : chi.ell_values) row.push_back(std::to_string(l));
        row.push_back(num(mox::kappa_chi(field, chi, 0.0)));
        tab.rows.push_back(std::move(row));
    }
    if (budget_T > 1.0) {
        const auto budget = mox::moment_budget(field, budget_T);
        std::vector<std::string> row{"eq=5.14",
                                     "budget_count=" + std::to_string(budget.character_count)};
        for (int nu = 0; nu < field.arch_places(); ++nu) row.push_back("");
        for (int j = 0; j < field.r2; ++j) row.push_back("");
        row.push_back(num(budget.total_measure));
        tab.rows.push_back(std::move(row));
    }
    emit(tab, cfg);
    return 0;
}

int run_whittaker(double tol, const OutputConfig& cfg) {
    Table tab;
    tab.columns = {"tag", "case", "closed_form", "oracle_or_sum", "abs_gap"};
    bool all_ok = true;

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> arg(-3.1, 3.1);
    const long long qs[3] = {2, 3, 5};
    for (int i = 0; i < 10; ++i) {
        mox::LocalCharacter chi{std::polar(1.0, arg(rng))};
        const long long q = qs[rng() % 3];
        mox::DifferentalData d{int(rng() % 2)};
        const Cx s(0.8 + 0.05 * i, 0.2 * arg(rng));
        const Cx v(1.2 + 0.1 * i, 0.1 * arg(rng));
        const Cx closed = mox::finite_mellin_whittaker(chi, q, d, s, v);
        const auto oracle = mox::tate_brute_force_mellin(chi, q, d, s, v, 300);
        const double gap = std::abs(closed - oracle.value);
        all_ok = all_ok && gap <= tol + oracle.tail_bound;
        tab.rows.push_back({"eq=A2", "finite_mellin_q" + std::to_string(q),
                            num(closed.real()), num(oracle.value.real()), num(gap)});
    }
    for (int i = 0; i < 10; ++i) {
        const long long q = qs[rng() % 3];
        mox::LocalSatakeData f1{q, std::polar(1.0, arg(rng)), std::polar(1.0, arg(rng))};
        mox::LocalSatakeData f2{q, std::polar(1.0, arg(rng)), std::polar(1.0, arg(rng))};
        mox::LocalCharacter c0{std::polar(0.4, arg(rng))};
        mox::LocalCharacter c1{std::polar(1.0, arg(rng))};
        const auto sum = mox::local_moment_factor(f1, f2, c0, c1, 240);
        const Cx prod = mox::local_moment_factor_closed(f1, f2, c0, c1);
        const double gap = std::abs(sum.value - prod);
        all_ok = all_ok && gap <= tol * std::abs(prod) + sum.tail_bound;
        tab.rows.push_back({"eq=3.12", "moment_factor_q" + std::to_string(q),
                            num(prod.real()), num(sum.value.real()), num(gap)});
    }
    emit(tab, cfg);
    return all_ok ? 0 : 1;
}

int run_poincare(double x, double y, double v, double w, const std::string& ladder_text,
                 double eps, const OutputConfig& cfg) {
    std::vector<long long> ladder;
    std::stringstream ss(ladder_text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            ladder.push_back(std::stoll(piece));
        } catch (...) {
            throw mox::ParseError("bad ladder entry '" + piece + "'");
        }
    }
    if (ladder.size() < 3) throw mox::ParseError("--ladder needs at least 3 entries");

    Table tab;
    tab.columns = {"tag", "N", "partial_sum", "increment"};
    const auto probe = mox::cauchy_convergence_probe({x, y}, v, w, ladder);
    for (std::size_t i = 0; i < probe.partials.size(); ++i)
        tab.rows.push_back({"eq=2.1", std::to_string(probe.ladder[i]),
                            num(probe.partials[i]),
                            i == 0 ? "" : num(probe.increments[i - 1])});

    if (v > 1.0 + 2.0 * eps && w > 1.0 + eps) {
        const auto dom =
            mox::domination_check({{x, y}}, v, w, eps, {ladder.back(), ladder.back()});
        tab.rows.push_back({"eq=A1", "domination_ratio", num(dom.max_ratio), ""});
    }
    emit(tab, cfg);
    return probe.converged || !probe.increments_decreasing ? 0 : 1;
}

int run_norms(const std::string& q_list, const std::string& sigma_grid,
              long long prime_bound, const OutputConfig& cfg) {
    std::vector<long long> qs;
    std::stringstream ss(q_list);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            qs.push_back(std::stoll(piece));
        } catch (...) {
            throw mox::ParseError("bad q entry '" + piece + "'");
        }
    }
    const auto sigmas = parse_grid(sigma_grid);

    Table tab;
    tab.columns = {"tag", "q", "sigma", "exact", "paper_bound"};
    bool all_ok = true;
    for (long long q : qs)
        for (double s : sigmas) {
            const auto ni = mox::local_norm_integral(q, s);
            all_ok = all_ok && ni.exact <= ni.paper_bound;
            tab.rows.push_back(
                {"eq=A1", std::to_string(q), num(s), num(ni.exact), num(ni.paper_bound)});
        }
    const auto glob = mox::global_norm_product_check(3.0, 3.0, prime_bound);
    tab.rows.push_back({"eq=A1", "global", "a=b=3", num(glob.product), num(glob.zeta_form)});
    all_ok = all_ok && glob.gap < 1e-5;
    emit(tab, cfg);
    return all_ok ? 0 : 1;
}

int run_moment(const std::string& kind, double T, const std::string& t_grid,
               const std::string& field_spec, double mu, int threads,
               const OutputConfig& cfg) {
    Table tab;
    mox::StepControl sc;
    sc.threads = threads;
    if (kind == "second" || kind == "fourth") {
        tab.columns = {"tag", "T", "integral", "fit_residual"};
        if (kind == "second") {
            const auto rep =
                mox::second_moment_slope_report({T / 8.0, T / 4.0, T / 2.0, T}, sc);
            for (std::size_t i = 0; i < rep.T_grid.size(); ++i)
                tab.rows.push_back({"eq=1.1", num(rep.T_grid[i]), num(rep.integrals[i]),
                                    num(rep.residual)});
            tab.rows.push_back({"eq=1.1", "slope", num(rep.fitted_coefficients[0]), ""});
        } else {
            const auto rep = mox::fourth_moment_fit_report(T / 8.0, T, 10, sc);
            for (std::size_t i = 0; i < rep.T_grid.size(); ++i)
                tab.rows.push_back({"eq=1.2", num(rep.T_grid[i]), num(rep.integrals[i]),
                                    num(rep.residual)});
            tab.rows.push_back(
                {"eq=1.2", "log4_coefficient", num(rep.fitted_coefficients[4]), ""});
        }
    } else if (kind == "weight") {
        const mox::NumberField field = mox::field_from_spec(field_spec);
        const auto chars = mox::character_lattice(field, 1.0);
        if (chars.empty()) throw mox::DomainError("no character available");
        mox::WeightSpec wspec;
        wspec.T = T;
        mox::SpectralParams sp{Cx(mu), Cx(mu)};
        tab.columns = {"tag", "t", "weight"};
        for (double t : parse_grid(t_grid)) {
            const double wv = mox::smoothing_weight(field, chars.front(), sp, t, wspec);
            tab.rows.push_back({"eq=5.8", num(t), num(wv)});
        }
    } else {
        throw mox::ParseError("--kind must be second, fourth or weight");
    }
    emit(tab, cfg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "numerical kernels, characters and moment experiments for GL(2) L-functions "
        "over number fields"};
    app.require_subcommand(1);

    OutputConfig cfg;
    int threads = mox::default_threads();
    bool deterministic = true;
    app.add_option("--out", cfg.out_path, "output path (default stdout)");
    app.add_option("--format", cfg.format, "csv or text")
        ->check(CLI::IsMember({"csv", "text"}));
    app.add_option("--tol", cfg.rel_tol, "relative tolerance");
    app.add_option("--threads", threads, "worker threads (deterministic reduction)");
    app.add_flag("--deterministic,!--no-deterministic", deterministic,
                 "fixed-order reductions (default on)");

    auto* kernel = app.add_subcommand("kernel", "archimedean kernel tables");
    std::string place = "complex", t_grid = "0:20:1", v_text = "0", w_text = "2";
    double mu = 0.1, t_nu = 0.0;
    long long ell = 0;
    bool with_exact = false;
    kernel->add_option("--place", place, "real or complex");
    kernel->add_option("--t-grid", t_grid, "min:max:step");
    kernel->add_option("--v", v_text, "v as re or re,im");
    kernel->add_option("--w", w_text, "w as re or re,im");
    kernel->add_option("--mu", mu, "spectral parameter");
    kernel->add_option("--ell", ell, "discrete character parameter");
    kernel->add_option("--t-nu", t_nu, "character shift");
    kernel->add_flag("--exact", with_exact, "also evaluate the exact kernel (eq=5.11)");

    auto* characters = app.add_subcommand("characters", "Hecke character lattice tables");
    std::string field_spec = "Q";
    double bound = 10.0, budget_T = 0.0;
    characters->add_option("--field", field_spec, "Q, Q_i, Q_sqrt2 or a field file");
    characters->add_option("--bound", bound, "lattice bound");
    characters->add_option("--T", budget_T, "also compute the moment budget at T");

    auto* whittaker = app.add_subcommand("whittaker", "local factor cross-checks");

    auto* poincare = app.add_subcommand("poincare", "convergence and domination probes");
    double px = 0.2, py = 1.3, pv = 2.5, pw = 2.5, peps = 0.25;
    std::string ladder = "50,100,200,400";
    poincare->add_option("--x", px, "Re z");
    poincare->add_option("--y", py, "Im z (> 0)");
    poincare->add_option("--v", pv, "series weight v");
    poincare->add_option("--w", pw, "series weight w");
    poincare->add_option("--ladder", ladder, "comma-separated truncations");
    poincare->add_option("--eps", peps, "domination epsilon");

    auto* norms = app.add_subcommand("norms", "p-adic norm integral tables");
    std::string q_list = "2,3,5,7", sigma_grid = "1.5:5:0.5";
    long long prime_bound = 100000;
    norms->add_option("--q", q_list, "comma-separated residue cardinalities");
    norms->add_option("--sigma", sigma_grid, "min:max:step");
    norms->add_option("--prime-bound", prime_bound, "Euler product cutoff");

    auto* moment = app.add_subcommand("moment", "zeta moment experiments and weights");
    std::string kind = "second", m_tgrid = "0:10:0.5", m_field = "Q_i";
    double mT = 400.0, m_mu = 0.1;
    moment->add_option("--kind", kind, "second, fourth or weight");
    moment->add_option("--T", mT, "top of the T ladder / weight scale");
    moment->add_option("--t-grid", m_tgrid, "t grid for weights");
    moment->add_option("--field", m_field, "field for weights");
    moment->add_option("--mu", m_mu, "spectral parameter for weights");

    auto* verify = app.add_subcommand("verify", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::ostringstream config;
    for (int i = 1; i < argc; ++i) config << (i > 1 ? " " : "") << argv[i];
    cfg.config_line = config.str();
    cfg.abs_tol = cfg.rel_tol * 1e-2;

    try {
        (void)deterministic;
    if (*kernel)
            return run_kernel(place, t_grid, parse_complex(v_text), parse_complex(w_text),
                              mu, ell, t_nu, with_exact, cfg);
        if (*characters) return run_characters(field_spec, bound, budget_T, cfg);
        if (*whittaker) return run_whittaker(std::max(cfg.rel_tol, 1e-12), cfg);
        if (*poincare) return run_poincare(px, py, pv, pw, ladder, peps, cfg);
        if (*norms) return run_norms(q_list, sigma_grid, prime_bound, cfg);
        if (*moment) return run_moment(kind, mT, m_tgrid, m_field, m_mu, threads, cfg);
        if (*verify) {
            mox::acceptance::Options opts;
            opts.threads = threads;
            const auto results = mox::acceptance::run_all(opts, &std::cout);
            return mox::acceptance::all_passed(results) ? 0 : 1;
        }
    } catch (const mox::ParseError& e) {
        std::cerr << "error: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const mox::DomainError& e) {
        std::cerr << "error: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const mox::QuadratureError& e) {
        std::cerr << "error: numeric failure: " << e.what()
                  << " (partial=" << e.partial.real() << ", bound=" << e.error_bound
                  << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
