// SPDX-License-Identifier: Apache-2.0

#include "wppas/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "detail/parallel.hpp"
#include "wppas/baseline.hpp"
#include "wppas/config_io.hpp"
#include "wppas/deploy.hpp"
#include "wppas/model.hpp"
#include "wppas/version.hpp"

namespace wppas {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

SystemConfig with_axis(const SystemConfig& base, Axis axis, double value) {
    SystemConfig c = base;
    switch (axis) {
        case Axis::Ps_dBm: c.Ps_dBm = value; break;
        case Axis::Alpha: c.alpha = value; break;
        case Axis::L: c.L = value; break;
        case Axis::Tau: c.tau = value; break;
        case Axis::Dx: c.Dx = value; break;
        case Axis::Dy: c.Dy = value; break;
        case Axis::Ym: break;  // user coordinate, config untouched
    }
    return c;
}

}  // namespace

Axis axis_from_name(const std::string& name) {
    if (name == "Ps_dBm") return Axis::Ps_dBm;
    if (name == "alpha") return Axis::Alpha;
    if (name == "L") return Axis::L;
    if (name == "tau") return Axis::Tau;
    if (name == "Dx") return Axis::Dx;
    if (name == "Dy") return Axis::Dy;
    if (name == "y_m") return Axis::Ym;
    throw ConfigError("unknown sweep axis '" + name + "'", name);
}

std::string to_string(Axis axis) {
    switch (axis) {
        case Axis::Ps_dBm: return "Ps_dBm";
        case Axis::Alpha: return "alpha";
        case Axis::L: return "L";
        case Axis::Tau: return "tau";
        case Axis::Dx: return "Dx";
        case Axis::Dy: return "Dy";
        case Axis::Ym: return "y_m";
    }
    return {};
}

SweepMetric metric_from_name(const std::string& name) {
    if (name == "outage_cf") return SweepMetric::OutageCf;
    if (name == "outage_mc") return SweepMetric::OutageMc;
    if (name == "rate_cf") return SweepMetric::RateCf;
    if (name == "rate_mc") return SweepMetric::RateMc;
    if (name == "baseline_outage") return SweepMetric::BaselineOutage;
    if (name == "baseline_rate") return SweepMetric::BaselineRate;
    if (name == "snr") return SweepMetric::Snr;
    throw ConfigError("unknown metric '" + name + "'", name);
}

std::string to_string(SweepMetric metric) {
    switch (metric) {
        case SweepMetric::OutageCf: return "outage_cf";
        case SweepMetric::OutageMc: return "outage_mc";
        case SweepMetric::RateCf: return "rate_cf";
        case SweepMetric::RateMc: return "rate_mc";
        case SweepMetric::BaselineOutage: return "baseline_outage";
        case SweepMetric::BaselineRate: return "baseline_rate";
        case SweepMetric::Snr: return "snr";
    }
    return {};
}

void validate_spec(const SystemConfig& cfg, const SweepSpec& spec) {
    validate_config(cfg);
    if (!(spec.lo < spec.hi))
        throw ConfigError("sweep range requires lo < hi", "range");
    if (spec.points < 2) throw ConfigError("sweep needs points >= 2", "points");
    if (spec.metrics.empty()) throw ConfigError("sweep needs at least one metric", "metrics");
    for (const SweepMetric m : spec.metrics) {
        const bool is_snr = m == SweepMetric::Snr;
        if (is_snr != (spec.axis == Axis::Ym))
            throw ConfigError(
                "metric 'snr' is exactly the y_m-axis profile metric; "
                "other metrics integrate over the user region",
                to_string(m));
    }
    // Reject axis values that can never form a valid config.
    if (spec.axis == Axis::Tau && (spec.lo <= 0.0 || spec.hi >= 1.0))
        throw ConfigError("tau sweep must stay inside (0,1)", "range");
    if ((spec.axis == Axis::Alpha || spec.axis == Axis::L) && spec.lo < 0.0)
        throw ConfigError("axis values must be >= 0", "range");
    if ((spec.axis == Axis::Dx || spec.axis == Axis::Dy) && spec.lo <= 0.0)
        throw ConfigError("region dimensions must be > 0", "range");
    if (spec.axis == Axis::Ym &&
        (spec.lo < -0.5 * cfg.Dy || spec.hi > 0.5 * cfg.Dy))
        throw ConfigError("y_m sweep must stay inside [-Dy/2, Dy/2]", "range");
}

std::string SweepResult::to_csv() const {
    std::ostringstream out;
    for (const auto& line : preamble) out << "# " << line << "\n";
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << columns[c] << (c + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            out << row[c] << (c + 1 < row.size() ? "," : "\n");
    return out.str();
}

SweepResult run_sweep(const SystemConfig& cfg, const SweepSpec& spec,
                      const SweepOptions& opts) {
    validate_spec(cfg, spec);

    SweepResult result;
    result.preamble.push_back(std::string("wppas ") + kVersion);
    result.preamble.push_back("seed = " + std::to_string(opts.seed));
    result.preamble.push_back("samples = " + std::to_string(opts.samples));
    result.preamble.push_back("fallback_grid = " + std::to_string(opts.fallback.nx) +
                              "x" + std::to_string(opts.fallback.ny));
    result.preamble.push_back("axis = " + to_string(spec.axis) + " in [" +
                              fmt17(spec.lo) + ", " + fmt17(spec.hi) + "], " +
                              std::to_string(spec.points) + " points");
    {
        std::istringstream cfg_lines(serialize_config(cfg));
        std::string line;
        while (std::getline(cfg_lines, line)) result.preamble.push_back(line);
    }

    result.columns.push_back(to_string(spec.axis));
    for (const SweepMetric m : spec.metrics) {
        result.columns.push_back(to_string(m));
        if (m == SweepMetric::OutageMc || m == SweepMetric::RateMc ||
            m == SweepMetric::BaselineOutage || m == SweepMetric::BaselineRate)
            result.columns.push_back(to_string(m) + "_stderr");
        if (m == SweepMetric::OutageCf)
            result.columns.push_back(to_string(m) + "_regime");
    }

    const int n = spec.points;
    std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(n));
    McSpec mc{opts.samples, opts.seed, false, 1};  // points already run in parallel
    detail::parallel_for_blocks(static_cast<std::size_t>(n), opts.threads, [&](std::size_t i) {
        const double value = spec.lo + (spec.hi - spec.lo) * static_cast<double>(i) /
                                           static_cast<double>(n - 1);
        const SystemConfig point_cfg = with_axis(cfg, spec.axis, value);
        std::vector<std::string>& row = rows[i];
        row.push_back(fmt17(value));
        for (const SweepMetric m : spec.metrics) {
            switch (m) {
                case SweepMetric::OutageCf: {
                    const OutageEval e = outage(point_cfg, opts.fallback, 1);
                    row.push_back(fmt17(e.p_out));
                    row.push_back(e.regime ? e.regime->str() : "quad");
                    break;
                }
                case SweepMetric::OutageMc: {
                    const Estimate e = mc_outage(point_cfg, mc);
                    row.push_back(fmt17(e.value));
                    row.push_back(fmt17(e.std_err));
                    break;
                }
                case SweepMetric::RateCf:
                    row.push_back(fmt17(ergodic_rate(point_cfg).bpcu));
                    break;
                case SweepMetric::RateMc: {
                    const Estimate e = mc_rate(point_cfg, mc);
                    row.push_back(fmt17(e.value));
                    row.push_back(fmt17(e.std_err));
                    break;
                }
                case SweepMetric::BaselineOutage: {
                    const Estimate e = baseline_outage(point_cfg, mc);
                    row.push_back(fmt17(e.value));
                    row.push_back(fmt17(e.std_err));
                    break;
                }
                case SweepMetric::BaselineRate: {
                    const Estimate e = baseline_rate(point_cfg, mc);
                    row.push_back(fmt17(e.value));
                    row.push_back(fmt17(e.std_err));
                    break;
                }
                case SweepMetric::Snr:
                    row.push_back(fmt17(snr_aligned(point_cfg, {0.0, value})));
                    break;
            }
        }
    });
    result.rows = std::move(rows);
    return result;
}

void cmd_sweep(const std::filesystem::path& config_path, const SweepSpec& spec,
               const std::filesystem::path& out_path, const SweepOptions& opts) {
    const SystemConfig cfg =
        config_path.empty() ? SystemConfig{} : parse_config_file(config_path);
    const SweepResult result = run_sweep(cfg, spec, opts);
    std::ofstream out(out_path);
    if (!out) throw ConfigError("cannot open output file: " + out_path.string());
    out << result.to_csv();
}

int CsvTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return static_cast<int>(i);
    return -1;
}

double CsvTable::number(std::size_t row, int col) const {
    return std::stod(rows.at(row).at(static_cast<std::size_t>(col)));
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open CSV file: " + path.string());
    CsvTable table;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!header_seen) {
            table.columns = std::move(cells);
            header_seen = true;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

}  // namespace wppas
