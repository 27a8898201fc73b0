#include "l1approx/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct CommonFlags {
    std::string format = "table";
    std::string out_path;
    double tol = -1.0;
    int grid = 4096;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--format", flags.format, "Output format: table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--tol", flags.tol, "Pass/fail tolerance (command-specific default)");
    sub->add_option("--out", flags.out_path, "Write the report to this file instead of stdout");
    sub->add_option("--grid", flags.grid, "Evaluation grid size")->check(CLI::PositiveNumber);
}

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    // frees the short -h so steklov can take --h for the kernel width
    sub->set_help_flag("--help", "Print this help message and exit");
    return sub;
}

int dispatch(const CommonFlags& flags, const std::function<int(const l1approx::cli::Options&, std::ostream&)>& run) {
    l1approx::cli::Options opts;
    opts.format = l1approx::parse_format(flags.format);
    opts.tol = flags.tol;
    opts.grid = flags.grid;
    if (flags.out_path.empty()) return run(opts, std::cout);
    std::ofstream os(flags.out_path);
    if (!os) {
        std::cerr << "cannot open output file: " << flags.out_path << "\n";
        return l1approx::cli::exit_usage;
    }
    return run(opts, os);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Best L1 approximation of Bernoulli-type kernels, Favard constants,\n"
                 "and pointwise-weighted algebraic approximation of Lipschitz functions"};
    app.require_subcommand(1);

    CommonFlags constants_flags, certify_flags, steklov_flags, series_flags, lipschitz_flags;

    auto* constants = add_command(app, "constants", "Favard constants: series vs exact values");
    int r_max = 12;
    constants->add_option("-r,--r-max", r_max, "Largest order r");
    add_common(constants, constants_flags);

    auto* certify = add_command(app, "certify", "Best-approximation certificates for a kernel");
    std::string kernel_str, certify_range = "2..8";
    certify->add_option("kernel", kernel_str, "Kernel: B1..B12, K1 or K2")->required();
    certify->add_option("range", certify_range, "n range, e.g. 2..8");
    add_common(certify, certify_flags);

    auto* steklov = add_command(app, "steklov", "Steklov-kernel regime classification");
    int steklov_m = 1, steklov_n = 2;
    std::vector<double> steklov_h;
    steklov->add_option("-m", steklov_m, "Convolution order m")->required();
    steklov->add_option("--h", steklov_h, "Width h (repeatable)")->required();
    steklov->add_option("-n", steklov_n, "Polynomial degree bound index n")->required();
    add_common(steklov, steklov_flags);

    auto* series = add_command(app, "series", "Bernoulli-series expansion cross-check");
    std::string series_kernel;
    int series_terms = 40;
    series->add_option("kernel", series_kernel, "Kernel: K1 or K2")->required();
    series->add_option("-R,--terms", series_terms, "Series truncation");
    add_common(series, series_flags);

    auto* lipschitz = add_command(app, "lipschitz", "Pointwise-weighted algebraic approximation check");
    std::string lip_fn, lip_range = "2..16";
    lipschitz->add_option("function", lip_fn, "const, linear, abs, abs_shifted(a), smooth_sin")->required();
    lipschitz->add_option("range", lip_range, "n range, e.g. 2..16");
    add_common(lipschitz, lipschitz_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return l1approx::cli::exit_usage;
    }

    try {
        if (constants->parsed())
            return dispatch(constants_flags, [&](const l1approx::cli::Options& o, std::ostream& os) {
                return l1approx::cli::cmd_constants(r_max, o, os);
            });
        if (certify->parsed())
            return dispatch(certify_flags, [&](const l1approx::cli::Options& o, std::ostream& os) {
                return l1approx::cli::cmd_certify(kernel_str, certify_range, o, os);
            });
        if (steklov->parsed())
            return dispatch(steklov_flags, [&](const l1approx::cli::Options& o, std::ostream& os) {
                return l1approx::cli::cmd_steklov(steklov_m, steklov_h, steklov_n, o, os);
            });
        if (series->parsed())
            return dispatch(series_flags, [&](const l1approx::cli::Options& o, std::ostream& os) {
                return l1approx::cli::cmd_series(series_kernel, series_terms, o, os);
            });
        if (lipschitz->parsed())
            return dispatch(lipschitz_flags, [&](const l1approx::cli::Options& o, std::ostream& os) {
                return l1approx::cli::cmd_lipschitz(lip_fn, lip_range, o, os);
            });
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return l1approx::cli::exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return l1approx::cli::exit_tolerance;
    }
    return l1approx::cli::exit_usage;
}
