// SPDX-License-Identifier: Apache-2.0

#include "wppas/baseline.hpp"

#include <cmath>

#include "detail/estimators.hpp"

namespace wppas {

double baseline_snr(const SystemConfig& cfg, const DerivedParams& d,
                    const UserPosition& user) {
    const double dyp = user.y - 0.5 * cfg.L;
    const double dya = user.y + 0.5 * cfg.L;
    const double d1_sq = user.x * user.x + dyp * dyp + cfg.h * cfg.h;
    const double d2_sq = user.x * user.x + dya * dya + cfg.h * cfg.h;
    return d.beta * d.beta * d.rho_single / (d1_sq * d2_sq) * d.n_factor;
}

double baseline_snr(const SystemConfig& cfg, const UserPosition& user) {
    return baseline_snr(cfg, derived_params(cfg), user);
}

Estimate baseline_outage(const SystemConfig& cfg, const McSpec& spec) {
    const DerivedParams d = derived_params(cfg);
    return detail::mc_outage_impl(
        cfg, spec, [&](const UserPosition& u) { return baseline_snr(cfg, d, u); });
}

Estimate baseline_rate(const SystemConfig& cfg, const McSpec& spec) {
    const DerivedParams d = derived_params(cfg);
    return detail::mc_rate_impl(
        cfg, spec, [&](const UserPosition& u) { return baseline_snr(cfg, d, u); });
}

double baseline_quad_outage(const SystemConfig& cfg, const QuadGrid& grid,
                            unsigned threads) {
    const DerivedParams d = derived_params(cfg);
    return detail::quad_mean_impl(cfg, grid, threads, [&](const UserPosition& u) {
        return baseline_snr(cfg, d, u) < d.epsilon ? 1.0 : 0.0;
    });
}

double baseline_quad_rate(const SystemConfig& cfg, const QuadGrid& grid,
                          unsigned threads) {
    const DerivedParams d = derived_params(cfg);
    const double one_minus_tau = 1.0 - cfg.tau;
    return detail::quad_mean_impl(cfg, grid, threads, [&](const UserPosition& u) {
        return one_minus_tau * std::log2(1.0 + baseline_snr(cfg, d, u));
    });
}

}  // namespace wppas
