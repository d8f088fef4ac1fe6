// SPDX-License-Identifier: Apache-2.0
//
// Placement analysis: closed-form optima for the waveguide separation
// and the user position, plus numerical optimisation of the time
// allocation factor tau and the separation L against the system-level
// outage/rate metrics.

#pragma once

#include <utility>
#include <vector>

#include "wppas/mc.hpp"
#include "wppas/model.hpp"
#include "wppas/physics.hpp"

namespace wppas {

enum class PlacementMethod { ClosedForm, GridSearch, GoldenSection };

enum class SearchWarning {
    None,
    NonUnimodal,     ///< guard scan beat the golden-section result by > 10*tol
    FlatObjective };  ///< objective constant over the search range

struct PlacementResult {
    double argopt = 0.0;         ///< optimal value of the searched variable
    double argopt2 = 0.0;        ///< |y*| when the result is a user position
    bool is_position = false;    ///< argopt = x*, argopt2 = |y*|, optima occur as (x*, +/-|y*|)
    double objective = 0.0;      ///< metric value at the optimum
    PlacementMethod method = PlacementMethod::ClosedForm;
    SearchWarning warning = SearchWarning::None;
    bool beyond_useful_L = false;  ///< L* > sqrt(Dy^2 - 4h^2), past which no user benefits
};

/// Waveguide separation maximising the aligned SNR for a user at lateral
/// offset y_m:  L* = 0 for |y_m| < h, else 2 sqrt(y_m^2 - h^2).
/// The reported objective is the aligned SNR at (x = 0, y_m) with L = L*.
PlacementResult optimal_L_for_user(const SystemConfig& cfg, double y_m);

/// User position maximising the aligned SNR for a fixed separation L.
/// x* = 0 always; |y*| is 0 for L < 2h, sqrt(L^2/4 - h^2) for
/// 2h <= L <= sqrt(Dy^2 + 4h^2), and Dy/2 beyond that.  Optima occur in
/// pairs (0, +|y*|) and (0, -|y*|).
PlacementResult optimal_user_position(const SystemConfig& cfg);

/// Aligned SNR sampled along a y grid at fixed x_m.
std::vector<std::pair<double, double>> snr_profile_y(
    const SystemConfig& cfg, double x_m, const std::vector<double>& y_grid);

enum class Metric { Outage, Rate };

struct SearchOptions {
    int prescan_points = 129;    ///< coarse multimodality guard
    QuadGrid fallback{600, 600};  ///< oracle resolution when closed forms are unavailable
    unsigned threads = 0;
};

/// Golden-section search for tau in [1e-4, 1-1e-4] optimising the given
/// metric (min outage / max rate), guarded by a coarse grid pre-scan.
/// If the scan finds a point better by more than 10*tol in objective
/// value, the result carries the NonUnimodal warning and reports the
/// grid optimum instead.
PlacementResult search_optimal_tau(const SystemConfig& cfg, Metric metric,
                                   double tol, const SearchOptions& opts = {});

/// Same search over L in [0, Dy].  Searches the full range even though
/// separations past sqrt(Dy^2 - 4h^2) cannot help any user position; the
/// result records whether the optimum exceeded that bound.
PlacementResult search_optimal_L(const SystemConfig& cfg, Metric metric,
                                 double tol, const SearchOptions& opts = {});

}  // namespace wppas
