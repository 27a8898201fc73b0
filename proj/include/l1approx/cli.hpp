#pragma once

#include "l1approx/best_l1.hpp"
#include "l1approx/bernoulli_series.hpp"
#include "l1approx/favard.hpp"
#include "l1approx/kernels.hpp"
#include "l1approx/lipschitz.hpp"
#include "l1approx/report.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace l1approx::cli {

// Exit codes: 0 all checks passed, 1 tolerance breach, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_tolerance = 1;
inline constexpr int exit_usage = 2;

struct Options {
    ReportFormat format = ReportFormat::table;
    double tol = -1.0;   // negative: use the command default
    int grid = 4096;
};

namespace detail_cli {

inline double tol_or(const Options& o, double fallback) { return o.tol > 0.0 ? o.tol : fallback; }

inline std::optional<std::pair<int, int>> parse_range(const std::string& s, int lo, int hi) {
    int a = 0, b = 0;
    const std::size_t dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            a = b = std::stoi(s);
        } else {
            a = std::stoi(s.substr(0, dots));
            b = std::stoi(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (a < lo || b > hi || a > b) return std::nullopt;
    return std::make_pair(a, b);
}

inline std::optional<KernelSpec> parse_kernel(const std::string& s) {
    if (s == "K1") return KernelSpec::quasi_k1();
    if (s == "K2") return KernelSpec::quasi_k2();
    if (s.size() >= 2 && s[0] == 'B') {
        try {
            const int r = std::stoi(s.substr(1));
            if (r >= 1 && r <= 12) return KernelSpec::bernoulli(r);
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

inline std::optional<LipFunction> parse_lip(const std::string& s) {
    if (s == "const") return lip_const(1.0);
    if (s == "linear") return lip_linear();
    if (s == "abs") return lip_abs();
    if (s == "smooth_sin") return lip_smooth_sin();
    const std::string prefix = "abs_shifted(";
    if (s.rfind(prefix, 0) == 0 && s.back() == ')') {
        try {
            const double a = std::stod(s.substr(prefix.size(), s.size() - prefix.size() - 1));
            if (std::abs(a) < 1.0) return lip_abs_shifted(a);
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

} // namespace detail_cli

/// Favard constants K_0..K_r_max: series route vs exact zigzag route.
inline int cmd_constants(int r_max, const Options& opts, std::ostream& out) {
    if (r_max < 0 || r_max > max_exact_favard) {
        std::cerr << "constants: r_max must be in [0, " << max_exact_favard << "]\n";
        return exit_usage;
    }
    const double tol = detail_cli::tol_or(opts, 1e-10);
    Report rep;
    rep.command = "constants";
    rep.params = {{"r_max", static_cast<long long>(r_max)}, {"tol", tol}};
    for (int r = 0; r <= r_max; ++r) {
        const FavardConstant k = favard_exact(r);
        const double series = (r == 0) ? 1.0 : favard_series(r, 1e-13);
        const double diff = std::abs(series - k.value);
        rep.rows.push_back({{"r", static_cast<long long>(r)},
                            {"favard", k.value},
                            {"exact", k.rational_string()},
                            {"series", series},
                            {"abs_diff", diff}});
        if (diff > tol) rep.passed = false;
    }
    write_report(rep, opts.format, out);
    return rep.passed ? exit_ok : exit_tolerance;
}

/// Sandwich certificates for B1..B12, K1, K2 over a range of n.
inline int cmd_certify(const std::string& kernel_str, const std::string& range_str, const Options& opts,
                       std::ostream& out) {
    const auto kernel = detail_cli::parse_kernel(kernel_str);
    if (!kernel) {
        std::cerr << "certify: unknown kernel '" << kernel_str << "' (expected B1..B12, K1 or K2)\n";
        return exit_usage;
    }
    const auto range = detail_cli::parse_range(range_str, 2, 256);
    if (!range) {
        std::cerr << "certify: bad n range '" << range_str << "' (expected a..b within [2,256])\n";
        return exit_usage;
    }
    const double tol = detail_cli::tol_or(opts, 1e-6);
    Report rep;
    rep.command = "certify";
    rep.params = {{"kernel", kernel_str}, {"n", range_str}, {"tol", tol}};
    for (int n = range->first; n <= range->second; ++n) {
        const Certificate c = certify(*kernel, n, tol);
        const double closed = c.closed_form.value_or(std::nan(""));
        rep.rows.push_back({{"kernel", kernel_str},
                            {"n", static_cast<long long>(n)},
                            {"lower", c.lower},
                            {"upper", c.upper},
                            {"gap", c.gap},
                            {"closed_form", closed},
                            {"lower_vs_closed", std::abs(c.lower - closed)}});
        if (!(c.gap <= tol)) rep.passed = false;
    }
    write_report(rep, opts.format, out);
    return rep.passed ? exit_ok : exit_tolerance;
}

/// Steklov regime classification for a list of widths h.
inline int cmd_steklov(int m, const std::vector<double>& hs, int n, const Options& opts, std::ostream& out) {
    if (m < 1 || n < 1 || hs.empty()) {
        std::cerr << "steklov: need m >= 1, n >= 1 and at least one h\n";
        return exit_usage;
    }
    for (double h : hs) {
        if (!(h > 0.0) || h > 1.0 || m * h >= 1.0) {
            std::cerr << "steklov: each h must satisfy 0 < h <= 1 and m*h < 1\n";
            return exit_usage;
        }
    }
    const double tol = detail_cli::tol_or(opts, 1e-6);
    Report rep;
    rep.command = "steklov";
    rep.params = {{"m", static_cast<long long>(m)}, {"n", static_cast<long long>(n)}, {"tol", tol}};
    for (double h : hs) {
        const SteklovBest r = steklov_best(m, h, n, tol);
        rep.rows.push_back({{"m", static_cast<long long>(m)},
                            {"h", h},
                            {"n", static_cast<long long>(n)},
                            {"regime", std::string(regime_name(r.regime))},
                            {"value", r.value},
                            {"certified", r.certified},
                            {"attempt_lower", r.attempt_lower},
                            {"attempt_upper", r.attempt_upper}});
        const bool ok = (r.regime == SteklovRegime::bound)
                            ? (r.attempt_lower <= r.value + tol && r.attempt_lower <= r.attempt_upper + tol)
                            : r.certified;
        if (!ok) rep.passed = false;
    }
    write_report(rep, opts.format, out);
    return rep.passed ? exit_ok : exit_tolerance;
}

/// Bernoulli-series cross-validation of a quasi kernel.
inline int cmd_series(const std::string& which_str, int truncation, const Options& opts, std::ostream& out) {
    QuasiKind which;
    if (which_str == "K1") {
        which = QuasiKind::k1;
    } else if (which_str == "K2") {
        which = QuasiKind::k2;
    } else {
        std::cerr << "series: unknown kernel '" << which_str << "' (expected K1 or K2)\n";
        return exit_usage;
    }
    if (truncation < 1 || truncation > 96) {
        std::cerr << "series: truncation must be in [1, 96]\n";
        return exit_usage;
    }
    const double tol = detail_cli::tol_or(opts, 1e-8);
    Report rep;
    rep.command = "series";
    rep.params = {{"kernel", which_str},
                  {"terms", static_cast<long long>(truncation)},
                  {"grid", static_cast<long long>(opts.grid)},
                  {"tol", tol}};
    const GoldenCheck g = golden_formula_check(which, opts.grid, truncation);
    rep.rows.push_back({{"kernel", which_str},
                        {"terms", static_cast<long long>(truncation)},
                        {"grid", static_cast<long long>(opts.grid)},
                        {"max_grid_error", g.max_grid_error},
                        {"max_coef_error", g.max_coef_error}});
    rep.passed = g.max_grid_error <= tol && g.max_coef_error <= tol;
    write_report(rep, opts.format, out);
    return rep.passed ? exit_ok : exit_tolerance;
}

/// End-to-end pointwise-weighted bound check for a named test function.
inline int cmd_lipschitz(const std::string& fn_str, const std::string& range_str, const Options& opts,
                         std::ostream& out) {
    const auto lip = detail_cli::parse_lip(fn_str);
    if (!lip) {
        std::cerr << "lipschitz: unknown test function '" << fn_str
                  << "' (expected const, linear, abs, abs_shifted(a), smooth_sin)\n";
        return exit_usage;
    }
    const auto range = detail_cli::parse_range(range_str, 2, 256);
    if (!range) {
        std::cerr << "lipschitz: bad n range '" << range_str << "' (expected a..b within [2,256])\n";
        return exit_usage;
    }
    const double tol = detail_cli::tol_or(opts, 1e-9);
    Report rep;
    rep.command = "lipschitz";
    rep.params = {{"function", fn_str},
                  {"n", range_str},
                  {"grid", static_cast<long long>(opts.grid)},
                  {"tol", tol}};
    for (int n = range->first; n <= range->second; ++n) {
        const int samples = static_cast<int>(detail::next_pow2(std::max(1024L, 8L * n)));
        const ChebyPoly p = build_polynomial(*lip, n, samples);
        const BoundReport b = verify_bound(*lip, p, n, opts.grid);
        const Factors w = factors(n);
        rep.rows.push_back({{"function", fn_str},
                            {"n", static_cast<long long>(n)},
                            {"t_factor", w.t},
                            {"s_factor", w.s},
                            {"max_slack", b.max_slack},
                            {"max_ratio", b.max_ratio}});
        if (!(b.max_slack <= tol)) rep.passed = false;
    }
    write_report(rep, opts.format, out);
    return rep.passed ? exit_ok : exit_tolerance;
}

} // namespace l1approx::cli
