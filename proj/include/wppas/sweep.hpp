// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps over one config axis, evaluated concurrently and
// emitted as CSV: `#` preamble recording the resolved config, seed and
// tool version, then a header row and one row per axis value.  Closed
// forms get a regime column, Monte Carlo metrics a std_err column.
// Output bytes are identical across reruns and thread counts.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wppas/mc.hpp"
#include "wppas/physics.hpp"

namespace wppas {

enum class Axis { Ps_dBm, Alpha, L, Tau, Dx, Dy, Ym };

enum class SweepMetric {
    OutageCf,
    OutageMc,
    RateCf,
    RateMc,
    BaselineOutage,
    BaselineRate,
    Snr,  ///< aligned SNR at x = 0; only meaningful with Axis::Ym
};

Axis axis_from_name(const std::string& name);          // throws ConfigError
SweepMetric metric_from_name(const std::string& name);  // throws ConfigError
std::string to_string(Axis axis);
std::string to_string(SweepMetric metric);

struct SweepSpec {
    Axis axis = Axis::Ps_dBm;
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;  ///< >= 2, evenly spaced inclusive of both ends
    std::vector<SweepMetric> metrics;
};

/// Throws ConfigError for invalid ranges, point counts, or metric/axis
/// combinations (Snr requires Axis::Ym and vice versa).
void validate_spec(const SystemConfig& cfg, const SweepSpec& spec);

struct SweepOptions {
    std::uint64_t seed = 42;
    std::uint64_t samples = 1'000'000;  ///< Monte Carlo metrics
    QuadGrid fallback{2000, 2000};      ///< oracle resolution for closed-form fallback
    unsigned threads = 0;
};

/// One sweep in memory: column names plus stringified cells (numbers are
/// printed with 17 significant digits, regimes as tags).
struct SweepResult {
    std::vector<std::string> preamble;  ///< comment lines, without the leading '#'
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
};

SweepResult run_sweep(const SystemConfig& cfg, const SweepSpec& spec,
                      const SweepOptions& opts = {});

/// Loads a config, runs the sweep, writes CSV to out_path.
void cmd_sweep(const std::filesystem::path& config_path, const SweepSpec& spec,
               const std::filesystem::path& out_path,
               const SweepOptions& opts = {});

/// Minimal CSV reader for the files this module writes (skips '#' lines).
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    int column_index(const std::string& name) const;  ///< -1 if absent
    double number(std::size_t row, int col) const;
};
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace wppas
