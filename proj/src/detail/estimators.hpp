// SPDX-License-Identifier: Apache-2.0
//
// Shared Monte Carlo / quadrature estimator bodies, parameterised over
// the SNR evaluator so the pinching-antenna and baseline systems run on
// identical sampling machinery.

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "detail/parallel.hpp"
#include "wppas/mc.hpp"
#include "wppas/rng.hpp"

namespace wppas::detail {

inline constexpr std::uint64_t kMcBlock = 1u << 16;

inline UserPosition user_from_uniforms(const SystemConfig& cfg, double u1, double u2) {
    return {cfg.Dx * u1, cfg.Dy * (u2 - 0.5)};
}

// Sample for index i; with antithetic pairing, odd indices mirror the
// preceding even draw.
inline UserPosition draw(const SystemConfig& cfg, const McSpec& spec, std::uint64_t i) {
    const std::uint64_t base = spec.antithetic ? (i & ~std::uint64_t{1}) : i;
    auto u = uniform_pair(spec.seed, base);
    if (spec.antithetic && (i & 1u)) {
        u[0] = 1.0 - u[0];
        u[1] = 1.0 - u[1];
    }
    return user_from_uniforms(cfg, u[0], u[1]);
}

inline Estimate finish_binomial(std::uint64_t hits, std::uint64_t n) {
    Estimate e;
    e.samples = n;
    e.value = static_cast<double>(hits) / static_cast<double>(n);
    e.std_err = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(n));
    e.ci95_low = e.value - 1.96 * e.std_err;
    e.ci95_high = e.value + 1.96 * e.std_err;
    return e;
}

template <class SnrFn>
Estimate mc_outage_impl(const SystemConfig& cfg, const McSpec& spec, SnrFn&& snr) {
    validate_config(cfg);
    if (spec.samples < 1) throw std::invalid_argument("McSpec.samples must be >= 1");
    const std::uint64_t n = spec.samples;
    const std::size_t n_blocks = static_cast<std::size_t>((n + kMcBlock - 1) / kMcBlock);
    std::vector<std::uint64_t> hits(n_blocks, 0);
    const double one_minus_tau = 1.0 - cfg.tau;
    parallel_for_blocks(n_blocks, spec.threads, [&](std::size_t b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kMcBlock;
        const std::uint64_t hi = std::min(lo + kMcBlock, n);
        std::uint64_t count = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const UserPosition u = draw(cfg, spec, i);
            const double rate = one_minus_tau * std::log2(1.0 + snr(u));
            count += rate < cfg.R ? 1u : 0u;
        }
        hits[b] = count;
    });
    std::uint64_t total = 0;
    for (const auto c : hits) total += c;
    return finish_binomial(total, n);
}

template <class SnrFn>
Estimate mc_rate_impl(const SystemConfig& cfg, const McSpec& spec, SnrFn&& snr) {
    validate_config(cfg);
    if (spec.samples < 1) throw std::invalid_argument("McSpec.samples must be >= 1");
    const std::uint64_t n = spec.samples;
    const std::size_t n_blocks = static_cast<std::size_t>((n + kMcBlock - 1) / kMcBlock);
    std::vector<double> sums(n_blocks, 0.0);
    std::vector<double> sq_sums(n_blocks, 0.0);
    const double one_minus_tau = 1.0 - cfg.tau;
    parallel_for_blocks(n_blocks, spec.threads, [&](std::size_t b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kMcBlock;
        const std::uint64_t hi = std::min(lo + kMcBlock, n);
        CompensatedSum s1, s2;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const UserPosition u = draw(cfg, spec, i);
            const double rate = one_minus_tau * std::log2(1.0 + snr(u));
            s1.add(rate);
            s2.add(rate * rate);
        }
        sums[b] = s1.sum;
        sq_sums[b] = s2.sum;
    });
    CompensatedSum s1, s2;
    for (std::size_t b = 0; b < n_blocks; ++b) {
        s1.add(sums[b]);
        s2.add(sq_sums[b]);
    }
    Estimate e;
    e.samples = n;
    const double dn = static_cast<double>(n);
    e.value = s1.sum / dn;
    const double var =
        n > 1 ? std::max(s2.sum - dn * e.value * e.value, 0.0) / (dn - 1.0) : 0.0;
    e.std_err = std::sqrt(var / dn);
    e.ci95_low = e.value - 1.96 * e.std_err;
    e.ci95_high = e.value + 1.96 * e.std_err;
    return e;
}

template <class Fn>
double quad_mean_impl(const SystemConfig& cfg, const QuadGrid& grid, unsigned threads,
                      Fn&& integrand) {
    validate_config(cfg);
    if (grid.nx < 100 || grid.ny < 100)
        throw std::invalid_argument("QuadGrid: nx and ny must be >= 100");
    const int nx = grid.nx;
    const int ny = grid.ny;
    const double hx = cfg.Dx / nx;
    const double hy = cfg.Dy / ny;
    std::vector<double> row_sums(static_cast<std::size_t>(ny), 0.0);
    parallel_for_blocks(static_cast<std::size_t>(ny), threads, [&](std::size_t j) {
        const double y = -0.5 * cfg.Dy + (static_cast<double>(j) + 0.5) * hy;
        CompensatedSum row;
        for (int i = 0; i < nx; ++i) {
            const double x = (i + 0.5) * hx;
            row.add(integrand(UserPosition{x, y}));
        }
        row_sums[j] = row.sum;
    });
    CompensatedSum total;
    for (const double r : row_sums) total.add(r);
    return total.sum / (static_cast<double>(nx) * static_cast<double>(ny));
}

}  // namespace wppas::detail
