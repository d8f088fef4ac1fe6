// SPDX-License-Identifier: Apache-2.0
//
// wppas — performance model for wireless-powered pinching-antenna links.
//
// Subcommands: sweep, figure, validate, optimal-l, optimal-tau,
// position-scan.  Exit codes: 0 success, 1 validation failure, 2 unusable
// input (config parse error, unknown figure id, bad sweep spec), 3
// unsupported-geometry fallback exhaustion (oracle grid below the
// 100x100 minimum while the closed forms do not apply).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wppas/config_io.hpp"
#include "wppas/deploy.hpp"
#include "wppas/figures.hpp"
#include "wppas/model.hpp"
#include "wppas/sweep.hpp"
#include "wppas/validation.hpp"
#include "wppas/version.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::uint64_t seed = 42;
    std::uint64_t samples = 1'000'000;
    int cheb_k = 0;  // 0 = use the config's K
    std::string grid = "2000x2000";
};

wppas::QuadGrid parse_grid(const std::string& s) {
    const auto x = s.find('x');
    if (x == std::string::npos)
        throw wppas::ConfigError("grid must look like NXxNY, got '" + s + "'", "grid");
    try {
        return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
    } catch (const std::exception&) {
        throw wppas::ConfigError("grid must look like NXxNY, got '" + s + "'", "grid");
    }
}

wppas::SystemConfig load_config(const CommonArgs& args) {
    wppas::SystemConfig cfg = args.config_path.empty()
                                  ? wppas::SystemConfig{}
                                  : wppas::parse_config_file(args.config_path);
    if (args.cheb_k > 0) cfg.K = args.cheb_k;
    return cfg;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "config file (key = value lines)");
    cmd->add_option("--seed", args.seed, "RNG seed for Monte Carlo metrics");
    cmd->add_option("--samples", args.samples, "Monte Carlo sample count");
    cmd->add_option("--k", args.cheb_k, "Chebyshev node count override");
    cmd->add_option("--grid", args.grid, "oracle resolution NXxNY");
}

const char* method_name(wppas::PlacementMethod m) {
    switch (m) {
        case wppas::PlacementMethod::ClosedForm: return "closed-form";
        case wppas::PlacementMethod::GridSearch: return "grid-search";
        case wppas::PlacementMethod::GoldenSection: return "golden-section";
    }
    return "?";
}

void print_placement(const std::string& label, const wppas::PlacementResult& r,
                     const std::string& metric_name) {
    std::printf("%s = %.10g\n", label.c_str(), r.argopt);
    if (r.is_position) std::printf("y_opt = +/-%.10g\n", r.argopt2);
    std::printf("%s = %.10g\nmethod = %s\n", metric_name.c_str(), r.objective,
                method_name(r.method));
    if (r.warning == wppas::SearchWarning::NonUnimodal)
        std::printf("warning = objective not unimodal; grid optimum reported\n");
    if (r.warning == wppas::SearchWarning::FlatObjective)
        std::printf("warning = objective flat over the search range\n");
    if (r.beyond_useful_L)
        std::printf("note = optimum exceeds sqrt(Dy^2 - 4h^2), the largest separation any user position can exploit\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wireless-powered pinching-antenna system performance model"};
    app.set_version_flag("--version", std::string("wppas ") + wppas::kVersion);
    app.require_subcommand(1);

    CommonArgs args;

    // sweep
    auto* sweep = app.add_subcommand("sweep", "sweep one parameter axis, emit CSV");
    std::string axis_name = "Ps_dBm";
    std::string range_str = "0:50";
    int points = 26;
    std::vector<std::string> metric_names = {"outage_cf"};
    std::string out_path = "sweep.csv";
    add_common(sweep, args);
    sweep->add_option("--axis", axis_name, "Ps_dBm|alpha|L|tau|Dx|Dy|y_m");
    sweep->add_option("--range", range_str, "axis range LO:HI");
    sweep->add_option("--points", points, "number of axis points (>= 2)");
    sweep->add_option("--metrics", metric_names,
                      "outage_cf,outage_mc,rate_cf,rate_mc,baseline_outage,baseline_rate,snr")
        ->delimiter(',');
    sweep->add_option("--out", out_path, "output CSV path");

    // figure
    auto* figure = app.add_subcommand("figure", "emit the CSVs for a canned figure recipe");
    std::string fig_id;
    std::string out_dir = ".";
    std::uint64_t fig_samples = 200'000;
    figure->add_option("--id", fig_id, "fig3|fig4a|fig4b|fig6|fig7|fig8a|fig8b|fig9")
        ->required();
    figure->add_option("--out-dir", out_dir, "output directory");
    figure->add_option("--seed", args.seed, "RNG seed");
    figure->add_option("--samples", fig_samples, "Monte Carlo samples per point");

    // validate
    auto* validate = app.add_subcommand("validate", "run the acceptance criteria");
    add_common(validate, args);

    // optimal-l
    auto* opt_l = app.add_subcommand("optimal-l", "optimal PS-AP separation");
    std::string metric_l = "outage";
    double tol_l = 1e-3;
    double y_m = 0.0;
    add_common(opt_l, args);
    opt_l->add_option("--metric", metric_l, "outage|rate (system-level search)");
    opt_l->add_option("--tol", tol_l, "search tolerance");
    auto* ym_opt =
        opt_l->add_option("--y-m", y_m, "per-user closed form at this lateral offset");

    // optimal-tau
    auto* opt_tau = app.add_subcommand("optimal-tau", "optimal time allocation factor");
    std::string metric_tau = "rate";
    double tol_tau = 1e-4;
    add_common(opt_tau, args);
    opt_tau->add_option("--metric", metric_tau, "outage|rate");
    opt_tau->add_option("--tol", tol_tau, "search tolerance");

    // position-scan
    auto* pos = app.add_subcommand("position-scan", "aligned SNR profile along y");
    int pos_points = 201;
    double pos_x = 0.0;
    std::string pos_out = "position_scan.csv";
    add_common(pos, args);
    pos->add_option("--points", pos_points, "grid points across [-Dy/2, Dy/2]");
    pos->add_option("--x-m", pos_x, "user abscissa for the scan");
    pos->add_option("--out", pos_out, "output CSV path");

    try {
        app.parse(argc, argv);

        if (sweep->parsed()) {
            wppas::SweepSpec spec;
            spec.axis = wppas::axis_from_name(axis_name);
            const auto colon = range_str.find(':');
            if (colon == std::string::npos)
                throw wppas::ConfigError("range must look like LO:HI, got '" + range_str + "'",
                                         "range");
            try {
                spec.lo = std::stod(range_str.substr(0, colon));
                spec.hi = std::stod(range_str.substr(colon + 1));
            } catch (const std::exception&) {
                throw wppas::ConfigError("range must look like LO:HI, got '" + range_str + "'",
                                         "range");
            }
            spec.points = points;
            for (const auto& m : metric_names)
                spec.metrics.push_back(wppas::metric_from_name(m));
            wppas::SweepOptions opts;
            opts.seed = args.seed;
            opts.samples = args.samples;
            opts.fallback = parse_grid(args.grid);
            if (opts.fallback.nx < 100 || opts.fallback.ny < 100) {
                std::fprintf(stderr,
                             "error: grid: oracle fallback needs at least 100x100\n");
                return 3;
            }
            wppas::SystemConfig cfg = load_config(args);
            wppas::SweepResult result = run_sweep(cfg, spec, opts);
            std::ofstream out(out_path);
            if (!out) {
                std::fprintf(stderr, "error: cannot open %s\n", out_path.c_str());
                return 2;
            }
            out << result.to_csv();
            std::printf("wrote %s (%zu rows)\n", out_path.c_str(), result.rows.size());
            return 0;
        }
        if (figure->parsed()) {
            wppas::FigureOptions fopts;
            fopts.seed = args.seed;
            fopts.samples = fig_samples;
            for (const auto& p : wppas::cmd_figure(fig_id, out_dir, fopts))
                std::printf("wrote %s\n", p.string().c_str());
            return 0;
        }
        if (validate->parsed()) {
            wppas::AcceptanceOptions vopts;
            vopts.seed = args.seed;
            wppas::SystemConfig cfg = load_config(args);
            const auto results = wppas::run_acceptance(cfg, vopts);
            return wppas::report(results, std::cout) ? 0 : 1;
        }
        if (opt_l->parsed()) {
            wppas::SystemConfig cfg = load_config(args);
            if (ym_opt->count() > 0) {
                print_placement("L_opt", wppas::optimal_L_for_user(cfg, y_m), "snr");
                return 0;
            }
            const auto metric =
                metric_l == "rate" ? wppas::Metric::Rate : wppas::Metric::Outage;
            print_placement("L_opt", wppas::search_optimal_L(cfg, metric, tol_l), metric_l);
            return 0;
        }
        if (opt_tau->parsed()) {
            wppas::SystemConfig cfg = load_config(args);
            const auto metric =
                metric_tau == "rate" ? wppas::Metric::Rate : wppas::Metric::Outage;
            print_placement("tau_opt", wppas::search_optimal_tau(cfg, metric, tol_tau),
                            metric_tau);
            return 0;
        }
        if (pos->parsed()) {
            wppas::SystemConfig cfg = load_config(args);
            std::vector<double> grid(static_cast<std::size_t>(pos_points));
            for (int i = 0; i < pos_points; ++i)
                grid[static_cast<std::size_t>(i)] =
                    -0.5 * cfg.Dy + cfg.Dy * i / (pos_points - 1);
            std::ofstream out(pos_out);
            if (!out) {
                std::fprintf(stderr, "error: cannot open %s\n", pos_out.c_str());
                return 2;
            }
            out << "# wppas " << wppas::kVersion << "\n# x_m = " << pos_x << "\ny_m,snr\n";
            char buf[80];
            for (const auto& [y, s] : wppas::snr_profile_y(cfg, pos_x, grid)) {
                std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", y, s);
                out << buf;
            }
            std::printf("wrote %s\n", pos_out.c_str());
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const wppas::ConfigError& e) {
        const std::string prefix = e.field.empty() ? "" : e.field + ": ";
        std::fprintf(stderr, "error: %s%s\n", prefix.c_str(), e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
