// SPDX-License-Identifier: Apache-2.0

#include "wppas/physics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wppas {

namespace {

void require(bool ok, const char* field, const std::string& what) {
    if (!ok) throw std::invalid_argument(std::string("SystemConfig.") + field + ": " + what);
}

// Squared distance from the user (x,y,0) to a pinching antenna at
// (x_pin, +/-L/2, h).  y_feed is +L/2 for the PS waveguide, -L/2 for AP.
double hop_dist_sq(const SystemConfig& cfg, const UserPosition& user,
                   double x_pin, double y_feed) {
    const double dx = user.x - x_pin;
    const double dy = user.y - y_feed;
    return dx * dx + dy * dy + cfg.h * cfg.h;
}

}  // namespace

void validate_config(const SystemConfig& cfg) {
    require(cfg.fc > 0.0, "fc", "carrier frequency must be positive");
    require(cfg.n_eff >= 1.0, "n_eff", "effective refractive index must be >= 1");
    require(cfg.alpha >= 0.0, "alpha", "absorption coefficient must be >= 0");
    require(cfg.h > 0.0, "h", "waveguide height must be positive");
    require(cfg.L >= 0.0, "L", "waveguide separation must be >= 0");
    require(cfg.Dx > 0.0, "Dx", "region length must be positive");
    require(cfg.Dy > 0.0, "Dy", "region width must be positive");
    require(cfg.tau > 0.0 && cfg.tau < 1.0, "tau", "time allocation must lie in (0,1)");
    require(cfg.eta > 0.0 && cfg.eta <= 1.0, "eta", "conversion efficiency must lie in (0,1]");
    require(cfg.R > 0.0, "R", "target rate must be positive");
    require(cfg.T > 0.0, "T", "frame duration must be positive");
    require(cfg.N1 >= 1, "N1", "antenna count must be >= 1");
    require(cfg.N2 >= 1, "N2", "antenna count must be >= 1");
    require(cfg.K >= 1 && cfg.K <= 1'000'000, "K", "Chebyshev node count must lie in [1, 1e6]");
    require(std::isfinite(cfg.Ps_dBm), "Ps_dBm", "must be finite");
    require(std::isfinite(cfg.sigma2_dBm), "sigma2_dBm", "must be finite");
}

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

DerivedParams derived_params_scaled(const SystemConfig& cfg, double rho_scale) {
    validate_config(cfg);
    DerivedParams d;
    d.lambda = kSpeedOfLight / cfg.fc;
    d.lambda_g = d.lambda / cfg.n_eff;
    const double l4pi = d.lambda / (4.0 * std::numbers::pi);
    d.beta = l4pi * l4pi;
    d.Ps_w = dbm_to_watt(cfg.Ps_dBm);
    d.sigma2_w = dbm_to_watt(cfg.sigma2_dBm);
    d.Et = cfg.tau * cfg.T * d.Ps_w;
    d.Pt = cfg.tau / (1.0 - cfg.tau) * cfg.eta * d.Ps_w;
    d.n_factor = rho_scale;
    d.rho_single = d.Pt / d.sigma2_w;
    d.rho_t = d.rho_single * rho_scale;
    d.beta_sq_rho = d.beta * d.beta * d.rho_t;
    d.epsilon = std::exp2(cfg.R / (1.0 - cfg.tau)) - 1.0;
    d.chi = d.beta_sq_rho / d.epsilon;
    return d;
}

DerivedParams derived_params(const SystemConfig& cfg) {
    return derived_params_scaled(
        cfg, static_cast<double>(static_cast<long long>(cfg.N1) * cfg.N2));
}

double snr_general(const SystemConfig& cfg, const DerivedParams& d,
                   const UserPosition& user, const PinchPositions& pins) {
    const double d1_sq = hop_dist_sq(cfg, user, pins.x1, +0.5 * cfg.L);
    const double d2_sq = hop_dist_sq(cfg, user, pins.x2, -0.5 * cfg.L);
    const double loss = std::exp(-cfg.alpha * (pins.x1 + pins.x2));
    // n_factor is applied last so the multi-antenna value is exactly
    // N1*N2 times the single-antenna one.
    return d.beta * d.beta * d.rho_single * loss / (d1_sq * d2_sq) * d.n_factor;
}

double snr_general(const SystemConfig& cfg, const UserPosition& user,
                   const PinchPositions& pins) {
    return snr_general(cfg, derived_params(cfg), user, pins);
}

double snr_aligned(const SystemConfig& cfg, const DerivedParams& d,
                   const UserPosition& user) {
    const double q = user.y * user.y + cfg.h * cfg.h - cfg.L * cfg.L / 4.0;
    const double denom = q * q + cfg.h * cfg.h * cfg.L * cfg.L;
    const double loss = std::exp(-2.0 * cfg.alpha * user.x);
    return d.beta * d.beta * d.rho_single * loss / denom * d.n_factor;
}

double snr_aligned(const SystemConfig& cfg, const UserPosition& user) {
    return snr_aligned(cfg, derived_params(cfg), user);
}

double harvested_energy(const SystemConfig& cfg, const UserPosition& user,
                        double x1_pin) {
    const DerivedParams d = derived_params(cfg);
    const double d1_sq = hop_dist_sq(cfg, user, x1_pin, +0.5 * cfg.L);
    return cfg.eta * d.Et * std::exp(-cfg.alpha * x1_pin) * d.beta / d1_sq;
}

double uplink_power(const SystemConfig& cfg, const UserPosition& user,
                    double x1_pin) {
    return harvested_energy(cfg, user, x1_pin) / ((1.0 - cfg.tau) * cfg.T);
}

std::complex<double> freespace_channel(const SystemConfig& cfg,
                                       const UserPosition& user,
                                       double x_pin, bool ps_side) {
    const DerivedParams d = derived_params(cfg);
    const double y_feed = ps_side ? +0.5 * cfg.L : -0.5 * cfg.L;
    const double dist = std::sqrt(hop_dist_sq(cfg, user, x_pin, y_feed));
    const double phase = -2.0 * std::numbers::pi / d.lambda * dist;
    return std::sqrt(d.beta) * std::polar(1.0, phase) / dist;
}

std::complex<double> guided_phase(const SystemConfig& cfg, double x_pin) {
    const DerivedParams d = derived_params(cfg);
    return std::polar(1.0, -2.0 * std::numbers::pi / d.lambda_g * x_pin);
}

}  // namespace wppas
