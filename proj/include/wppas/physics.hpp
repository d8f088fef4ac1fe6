// SPDX-License-Identifier: Apache-2.0
//
// Geometry, channel, energy-harvesting and SNR computations for a
// two-waveguide wireless-powered link with pinching antennas.
//
// Layout: the power station (PS) feed sits at (0, +L/2, h), the access
// point (AP) feed at (0, -L/2, h).  Both dielectric waveguides run
// parallel to the x-axis at height h and span x in [0, Dx].  The user
// terminal lies on the ground plane z = 0, somewhere in the rectangle
// [0, Dx] x [-Dy/2, Dy/2].
//
// Each frame of duration T has two stages: during tau*T the PS radiates
// from pinching antenna 1 (clamped at x1 on the PS waveguide) and the
// user harvests energy; during (1-tau)*T the user transmits with the
// harvested energy and the AP receives through pinching antenna 2 (at x2
// on the AP waveguide).  Power decays as exp(-alpha * d) over a guided
// distance d inside either waveguide.

#pragma once

#include <complex>

namespace wppas {

inline constexpr double kSpeedOfLight = 299792458.0;  // [m/s]

/// Every radio, geometry, harvesting and protocol parameter of the link.
/// User-facing powers are in dBm; all internal math runs in watts.
struct SystemConfig {
    double fc = 2.7e9;          ///< carrier frequency [Hz]
    double n_eff = 1.4;         ///< effective refractive index of the waveguide core
    double alpha = 0.01;        ///< waveguide absorption coefficient [Np/m], 0 = lossless
    double h = 3.0;             ///< waveguide height above the user plane [m]
    double L = 4.0;             ///< PS-AP waveguide separation [m]
    double Dx = 10.0;           ///< user-region extent along the waveguides [m]
    double Dy = 10.0;           ///< user-region extent across the waveguides [m]
    double tau = 0.4;           ///< fraction of the frame spent on energy transfer, in (0,1)
    double eta = 0.8;           ///< energy conversion efficiency, in (0,1]
    double Ps_dBm = 18.0;       ///< PS transmit power [dBm]
    double sigma2_dBm = -90.0;  ///< AWGN power at the AP [dBm]
    double R = 2.5;             ///< target rate [bits per channel use]
    double T = 1.0;             ///< frame duration [s]
    int N1 = 1;                 ///< pinching antennas on the PS waveguide
    int N2 = 1;                 ///< pinching antennas on the AP waveguide
    int K = 50;                 ///< Chebyshev node count used by the closed forms
};

/// Throws std::invalid_argument naming the offending field.
void validate_config(const SystemConfig& cfg);

/// User terminal position on the ground plane (z = 0).
struct UserPosition {
    double x = 0.0;  ///< [m]
    double y = 0.0;  ///< [m]
};

/// Pinching-antenna abscissas along the two waveguides.
struct PinchPositions {
    double x1 = 0.0;  ///< PA-1 position on the PS waveguide [m]
    double x2 = 0.0;  ///< PA-2 position on the AP waveguide [m]
};

/// Scalars derived from a SystemConfig.
///
/// rho_single is the ET/IT power budget ratio Pt/sigma^2 for a single
/// antenna pair; rho_t = rho_single * N1*N2 absorbs the multi-antenna
/// gain.  SNR evaluators apply n_factor as their final multiply so that
/// the (N1,N2) result equals N1*N2 times the (1,1) result bit for bit;
/// the outage/rate closed forms consume beta_sq_rho and chi, which carry
/// the scaled rho_t, so scaling rho externally reproduces them exactly.
struct DerivedParams {
    double lambda = 0.0;       ///< free-space wavelength [m]
    double lambda_g = 0.0;     ///< guided wavelength lambda/n_eff [m]
    double beta = 0.0;         ///< free-space path gain at 1 m, (lambda/4pi)^2
    double Ps_w = 0.0;         ///< PS transmit power [W]
    double sigma2_w = 0.0;     ///< noise power [W]
    double Et = 0.0;           ///< energy radiated during the ET stage, tau*T*Ps [J]
    double Pt = 0.0;           ///< equivalent uplink power budget tau/(1-tau)*eta*Ps [W]
    double n_factor = 1.0;     ///< N1*N2
    double rho_single = 0.0;   ///< Pt/sigma^2 for one antenna pair
    double rho_t = 0.0;        ///< rho_single * n_factor
    double beta_sq_rho = 0.0;  ///< beta^2 * rho_t
    double epsilon = 0.0;      ///< SNR threshold 2^(R/(1-tau)) - 1
    double chi = 0.0;          ///< beta_sq_rho / epsilon
};

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);

/// Derived scalars with rho scaled by N1*N2 (the default behaviour).
DerivedParams derived_params(const SystemConfig& cfg);

/// Same, but with an explicit rho scale factor instead of N1*N2.
/// derived_params(cfg) == derived_params_scaled(cfg, double(N1*N2)) bitwise.
DerivedParams derived_params_scaled(const SystemConfig& cfg, double rho_scale);

/// End-to-end SNR at the AP for arbitrary pinching-antenna positions:
///   beta^2 rho_t exp(-alpha (x1 + x2)) / (|psi_m - psi_1|^2 |psi_2 - psi_m|^2).
double snr_general(const SystemConfig& cfg, const DerivedParams& d,
                   const UserPosition& user, const PinchPositions& pins);
double snr_general(const SystemConfig& cfg, const UserPosition& user,
                   const PinchPositions& pins);

/// SNR with both antennas aligned to the user abscissa (x1 = x2 = x_m),
/// the deployment that minimises the free-space hops:
///   beta^2 rho_t exp(-2 alpha x_m) / ((y_m^2 + h^2 - L^2/4)^2 + h^2 L^2).
double snr_aligned(const SystemConfig& cfg, const DerivedParams& d,
                   const UserPosition& user);
double snr_aligned(const SystemConfig& cfg, const UserPosition& user);

/// Energy harvested by the user over the ET stage [J]:
///   eta * Et * exp(-alpha x1) * beta / |psi_m - psi_1|^2.
double harvested_energy(const SystemConfig& cfg, const UserPosition& user,
                        double x1_pin);

/// Uplink transmit power funded by the harvested energy [W]:
///   Eu / ((1 - tau) T).
double uplink_power(const SystemConfig& cfg, const UserPosition& user,
                    double x1_pin);

/// Complex free-space channel between a pinching antenna at x_pin on the
/// given waveguide (ps_side selects +L/2 or -L/2) and the user.
std::complex<double> freespace_channel(const SystemConfig& cfg,
                                       const UserPosition& user,
                                       double x_pin, bool ps_side);

/// In-waveguide phase factor accumulated between the feed and the
/// pinching antenna.  Always unit modulus; the performance metrics only
/// ever use |g| = 1, this path exists so tests can assert that.
std::complex<double> guided_phase(const SystemConfig& cfg, double x_pin);

}  // namespace wppas
