// SPDX-License-Identifier: Apache-2.0
//
// Canned sweep recipes reproducing the headline result curves: outage
// and rate versus transmit power for different region sizes and
// absorption coefficients, outage versus waveguide separation, and rate
// versus time allocation.  Each recipe writes one or more CSV files into
// the output directory and returns their paths.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wppas/mc.hpp"

namespace wppas {

struct FigureOptions {
    std::uint64_t seed = 42;
    std::uint64_t samples = 200'000;  ///< Monte Carlo columns in fig3/fig7
    QuadGrid fallback{800, 800};      ///< oracle resolution for fig6 beyond h <= L/2
    unsigned threads = 0;
};

/// Recognised ids: fig3, fig4a, fig4b, fig6, fig7, fig8a, fig8b, fig9.
/// Throws ConfigError for unknown ids.  All recipes start from the
/// default SystemConfig and override only what the figure varies.
std::vector<std::filesystem::path> cmd_figure(const std::string& id,
                                              const std::filesystem::path& out_dir,
                                              const FigureOptions& opts = {});

/// All recognised figure ids, in emission order.
const std::vector<std::string>& figure_ids();

}  // namespace wppas
