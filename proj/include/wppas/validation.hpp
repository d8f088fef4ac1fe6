// SPDX-License-Identifier: Apache-2.0
//
// The acceptance suite: twelve cross-validation criteria pinning the
// closed forms against Monte Carlo, quadrature, identity and shape
// oracles at fixed tolerances.  Used by the `validate` CLI subcommand
// and by the acceptance test binary.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wppas/physics.hpp"

namespace wppas {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  ///< worst-case margin or failure description
};

struct AcceptanceOptions {
    std::uint64_t seed = 42;
    unsigned threads = 0;
    /// Scratch directory for the figure-shape criterion; a temp dir is
    /// created (and kept) under the system temp path when empty.
    std::filesystem::path work_dir;
};

/// Runs all criteria against the given base config.  Criteria that pin
/// their own parameters (power grids, K values, reference powers) do so
/// regardless of cfg; geometry-dependent checks adapt when the config
/// leaves closed-form territory (alpha = 0 routes outage to the lossless
/// table, h <= L/2 swaps closed-form comparisons for oracle
/// self-consistency) and say so in their detail string.
std::vector<CriterionResult> run_acceptance(const SystemConfig& cfg,
                                            const AcceptanceOptions& opts = {});

/// Prints one PASS/FAIL line per criterion; returns true iff all passed.
bool report(const std::vector<CriterionResult>& results, std::ostream& os);

/// Loads the config (default config when the path is empty), runs the
/// suite, prints the report.  Exit code 0 iff every criterion passed,
/// 1 otherwise.
int cmd_validate(const std::filesystem::path& config_path,
                 const AcceptanceOptions& opts = {});

}  // namespace wppas
