// SPDX-License-Identifier: Apache-2.0
//
// Validation oracles, deliberately independent of the closed forms:
// seeded Monte Carlo over random user drops and deterministic midpoint
// quadrature over the user rectangle.  Neither touches the Chebyshev
// machinery or the regime tables.

#pragma once

#include <cstdint>

#include "wppas/physics.hpp"

namespace wppas {

struct McSpec {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    bool antithetic = false;  ///< mirror odd-index samples against even ones
    unsigned threads = 0;     ///< 0 = hardware concurrency
};

/// Point estimate with a normal-approximation 95% interval.
/// Results are bit-identical for a fixed (cfg, seed, samples) at any
/// thread count: samples come from a counter-based generator keyed by
/// (seed, index) and sums reduce over fixed-size blocks in index order.
struct Estimate {
    double value = 0.0;
    double std_err = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    std::uint64_t samples = 0;
};

/// User drop for the given sample index: x ~ U[0,Dx), y ~ U[-Dy/2,Dy/2).
UserPosition sample_user(const SystemConfig& cfg, std::uint64_t seed,
                         std::uint64_t index);

/// P[(1-tau) log2(1 + SNR_aligned) < R] as an empirical frequency;
/// std_err = sqrt(p(1-p)/n).
Estimate mc_outage(const SystemConfig& cfg, const McSpec& spec);

/// E[(1-tau) log2(1 + SNR_aligned)] as a sample mean [bits/channel use].
Estimate mc_rate(const SystemConfig& cfg, const McSpec& spec);

struct QuadGrid {
    int nx = 2000;
    int ny = 2000;
};

/// Midpoint-rule integral of the outage indicator over the user
/// rectangle.  Deterministic; the arbiter when MC and closed form
/// disagree.  Requires nx, ny >= 100.
double quad_outage(const SystemConfig& cfg, const QuadGrid& grid,
                   unsigned threads = 0);

/// Midpoint-rule integral of the achievable rate [bits/channel use].
double quad_rate(const SystemConfig& cfg, const QuadGrid& grid,
                 unsigned threads = 0);

}  // namespace wppas
