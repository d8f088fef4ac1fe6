// SPDX-License-Identifier: Apache-2.0

#include "wppas/figures.hpp"

#include <fstream>

#include "wppas/config_io.hpp"
#include "wppas/sweep.hpp"

namespace wppas {

namespace {

SweepOptions sweep_opts(const FigureOptions& o) {
    SweepOptions s;
    s.seed = o.seed;
    s.samples = o.samples;
    s.fallback = o.fallback;
    s.threads = o.threads;
    return s;
}

void write_file(const std::filesystem::path& path, const SweepResult& r) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file: " + path.string());
    out << r.to_csv();
}

// Runs the same sweep for several config variants and splices their value
// columns side by side, suffixed with the variant labels.
SweepResult zip_variants(const std::vector<SystemConfig>& cfgs,
                         const std::vector<std::string>& labels,
                         const SweepSpec& spec, const SweepOptions& opts) {
    SweepResult out;
    for (std::size_t v = 0; v < cfgs.size(); ++v) {
        const SweepResult r = run_sweep(cfgs[v], spec, opts);
        if (v == 0) {
            out.preamble = r.preamble;
            out.columns.push_back(r.columns.front());
            out.rows.resize(r.rows.size());
            for (std::size_t i = 0; i < r.rows.size(); ++i)
                out.rows[i].push_back(r.rows[i].front());
        }
        out.preamble.push_back("variant " + labels[v] + ": see columns *_" + labels[v]);
        for (std::size_t c = 1; c < r.columns.size(); ++c) {
            out.columns.push_back(r.columns[c] + "_" + labels[v]);
            for (std::size_t i = 0; i < r.rows.size(); ++i)
                out.rows[i].push_back(r.rows[i][c]);
        }
    }
    return out;
}

constexpr int kPsPoints = 26;  // 0..50 dBm in 2 dB steps

SweepSpec ps_spec(std::vector<SweepMetric> metrics) {
    return {Axis::Ps_dBm, 0.0, 50.0, kPsPoints, std::move(metrics)};
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"fig3",  "fig4a", "fig4b", "fig6",
                                                 "fig7",  "fig8a", "fig8b", "fig9"};
    return ids;
}

std::vector<std::filesystem::path> cmd_figure(const std::string& id,
                                              const std::filesystem::path& out_dir,
                                              const FigureOptions& opts) {
    std::filesystem::create_directories(out_dir);
    const SweepOptions sopts = sweep_opts(opts);
    std::vector<std::filesystem::path> written;
    const SystemConfig base;  // library defaults

    const auto region_variant = [&](double d) {
        SystemConfig c = base;
        c.Dx = c.Dy = d;
        return c;
    };
    const auto alpha_variants = [&](double dxy) {
        std::vector<SystemConfig> cfgs;
        std::vector<std::string> labels;
        for (const double a : {0.0, 0.01, 0.05, 0.1}) {
            SystemConfig c = region_variant(dxy);
            c.alpha = a;
            cfgs.push_back(c);
            labels.push_back(a == 0.0 ? "a0" : "a" + std::to_string(a).substr(2, 2));
        }
        return std::pair{cfgs, labels};
    };

    if (id == "fig3" || id == "fig7") {
        const bool is_outage = id == "fig3";
        const SweepSpec spec =
            is_outage ? ps_spec({SweepMetric::OutageCf, SweepMetric::OutageMc,
                                 SweepMetric::BaselineOutage})
                      : ps_spec({SweepMetric::RateCf, SweepMetric::RateMc,
                                 SweepMetric::BaselineRate});
        for (const double d : {10.0, 30.0}) {
            const auto path =
                out_dir / (id + "_d" + std::to_string(static_cast<int>(d)) + ".csv");
            write_file(path, run_sweep(region_variant(d), spec, sopts));
            written.push_back(path);
        }
    } else if (id == "fig4a" || id == "fig4b" || id == "fig8a" || id == "fig8b") {
        const bool is_outage = id[3] == '4';
        const double dxy = id.back() == 'a' ? 10.0 : 30.0;
        const auto [cfgs, labels] = alpha_variants(dxy);
        const SweepSpec spec = is_outage ? ps_spec({SweepMetric::OutageCf})
                                         : ps_spec({SweepMetric::RateCf});
        const auto path = out_dir / (id + ".csv");
        write_file(path, zip_variants(cfgs, labels, spec, sopts));
        written.push_back(path);
    } else if (id == "fig6") {
        // Outage versus waveguide separation; powers straddling the regime
        // where the interior optimum appears, deepens, and bottoms out.
        std::vector<SystemConfig> cfgs;
        std::vector<std::string> labels;
        for (const double ps : {34.0, 36.0, 38.0}) {
            SystemConfig c = base;
            c.Ps_dBm = ps;
            cfgs.push_back(c);
            labels.push_back("Ps" + std::to_string(static_cast<int>(ps)));
        }
        const SweepSpec spec{Axis::L, 0.0, base.Dy, 51, {SweepMetric::OutageCf}};
        const auto path = out_dir / "fig6.csv";
        write_file(path, zip_variants(cfgs, labels, spec, sopts));
        written.push_back(path);
    } else if (id == "fig9") {
        // Rate versus time allocation at 40 dBm for several absorption
        // coefficients; each curve rises to an interior peak and falls.
        std::vector<SystemConfig> cfgs;
        std::vector<std::string> labels;
        for (const double a : {0.01, 0.05, 0.1}) {
            SystemConfig c = base;
            c.Ps_dBm = 40.0;
            c.alpha = a;
            cfgs.push_back(c);
            labels.push_back("a" + std::to_string(a).substr(2, 2));
        }
        const SweepSpec spec{Axis::Tau, 0.01, 0.99, 99, {SweepMetric::RateCf}};
        const auto path = out_dir / "fig9.csv";
        write_file(path, zip_variants(cfgs, labels, spec, sopts));
        written.push_back(path);
    } else {
        throw ConfigError("unknown figure id '" + id + "'", id);
    }
    return written;
}

}  // namespace wppas
