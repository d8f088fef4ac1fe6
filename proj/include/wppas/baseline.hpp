// SPDX-License-Identifier: Apache-2.0
//
// Traditional wireless-powered-communication benchmark: the same link
// budget but with fixed radiators at the waveguide feed points
// (0, +L/2, h) and (0, -L/2, h) and no in-waveguide loss term.  A
// deterministic line-of-sight model, matching the fading-free analysis
// of the pinching-antenna system.

#pragma once

#include "wppas/mc.hpp"
#include "wppas/physics.hpp"

namespace wppas {

/// beta^2 rho_t / (|psi_m - psi_p|^2 |psi_a - psi_m|^2) with the
/// antennas pinned at the feeds.
double baseline_snr(const SystemConfig& cfg, const DerivedParams& d,
                    const UserPosition& user);
double baseline_snr(const SystemConfig& cfg, const UserPosition& user);

/// Monte Carlo outage / ergodic rate over the same user distribution as
/// the mc module, with baseline_snr substituted.
Estimate baseline_outage(const SystemConfig& cfg, const McSpec& spec);
Estimate baseline_rate(const SystemConfig& cfg, const McSpec& spec);

/// Midpoint-quadrature counterparts.
double baseline_quad_outage(const SystemConfig& cfg, const QuadGrid& grid,
                            unsigned threads = 0);
double baseline_quad_rate(const SystemConfig& cfg, const QuadGrid& grid,
                          unsigned threads = 0);

}  // namespace wppas
