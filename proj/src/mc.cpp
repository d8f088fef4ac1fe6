// SPDX-License-Identifier: Apache-2.0

#include "wppas/mc.hpp"

#include <cmath>

#include "detail/estimators.hpp"

namespace wppas {

UserPosition sample_user(const SystemConfig& cfg, std::uint64_t seed,
                         std::uint64_t index) {
    const auto u = uniform_pair(seed, index);
    return detail::user_from_uniforms(cfg, u[0], u[1]);
}

Estimate mc_outage(const SystemConfig& cfg, const McSpec& spec) {
    const DerivedParams d = derived_params(cfg);
    return detail::mc_outage_impl(
        cfg, spec, [&](const UserPosition& u) { return snr_aligned(cfg, d, u); });
}

Estimate mc_rate(const SystemConfig& cfg, const McSpec& spec) {
    const DerivedParams d = derived_params(cfg);
    return detail::mc_rate_impl(
        cfg, spec, [&](const UserPosition& u) { return snr_aligned(cfg, d, u); });
}

double quad_outage(const SystemConfig& cfg, const QuadGrid& grid, unsigned threads) {
    const DerivedParams d = derived_params(cfg);
    return detail::quad_mean_impl(cfg, grid, threads, [&](const UserPosition& u) {
        return snr_aligned(cfg, d, u) < d.epsilon ? 1.0 : 0.0;
    });
}

double quad_rate(const SystemConfig& cfg, const QuadGrid& grid, unsigned threads) {
    const DerivedParams d = derived_params(cfg);
    const double one_minus_tau = 1.0 - cfg.tau;
    return detail::quad_mean_impl(cfg, grid, threads, [&](const UserPosition& u) {
        return one_minus_tau * std::log2(1.0 + snr_aligned(cfg, d, u));
    });
}

}  // namespace wppas
