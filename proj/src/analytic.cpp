// SPDX-License-Identifier: Apache-2.0

#include "wppas/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wppas/specfun.hpp"

namespace wppas {

namespace {

struct TableConstants {
    double P = 0.0;  // (h^2 - L^2/4)^2 + h^2 L^2, the tightest per-position loss
    double Q = 0.0;  // (Dy^2/4 + h^2 - L^2/4)^2 + h^2 L^2, the loosest
    double hL_sq = 0.0;  // h^2 L^2
    double w = 0.0;      // h^2 - L^2/4
};

TableConstants table_constants(const SystemConfig& cfg) {
    TableConstants t;
    t.w = cfg.h * cfg.h - cfg.L * cfg.L / 4.0;
    t.hL_sq = cfg.h * cfg.h * cfg.L * cfg.L;
    const double qy = cfg.Dy * cfg.Dy / 4.0 + t.w;
    t.P = t.w * t.w + t.hL_sq;
    t.Q = qy * qy + t.hL_sq;
    return t;
}

bool geometry_supported(const SystemConfig& cfg) {
    return cfg.h * cfg.h - cfg.L * cfg.L / 4.0 > 0.0;
}

// Row selection for the lossy table, comparing chi and chi e^{-2 alpha Dx}
// against P and Q with the comparators as printed.  Partition holds for
// h > L/2 because P < Q there.
int lossy_row(const TableConstants& t, double chi, double chi_att) {
    if (t.P >= chi) return 1;
    if (t.P > chi_att) return t.Q >= chi ? 2 : 3;
    if (t.Q >= chi) return 4;
    if (t.Q > chi_att) return 5;
    return 6;
}

int lossless_row(const TableConstants& t, double chi) {
    if (t.P > chi) return 1;
    if (t.Q >= chi) return 2;
    return 3;
}

// sqrt( sqrt(chi e^{-2 alpha x} - h^2 L^2) + L^2/4 - h^2 ), the half-width
// of the y-range still in outage at abscissa x.  Both radicands are
// nonnegative on every row's node interval; clamp the few ulps of
// rounding at the interval ends.
double outage_halfwidth(const TableConstants& t, double chi, double alpha, double x) {
    const double inner = chi * std::exp(-2.0 * alpha * x) - t.hL_sq;
    const double mid = std::sqrt(std::max(inner, 0.0)) - t.w;
    return std::sqrt(std::max(mid, 0.0));
}

}  // namespace

std::string RegimeTag::str() const {
    return (table == Table::Lossy ? "lossy:" : "lossless:") + std::to_string(row);
}

LossyThresholds lossy_thresholds(const SystemConfig& cfg, const DerivedParams& d) {
    if (!(cfg.alpha > 0.0)) throw InvalidAlpha("lossy_thresholds: alpha must be > 0");
    const TableConstants t = table_constants(cfg);
    const double inv = 1.0 / (2.0 * cfg.alpha);
    return {inv * std::log(d.chi / t.hL_sq), inv * std::log(d.chi / t.P),
            inv * std::log(d.chi / t.Q)};
}

LossyThresholds lossy_thresholds(const SystemConfig& cfg) {
    return lossy_thresholds(cfg, derived_params(cfg));
}

RegimeTag classify_regime(const SystemConfig& cfg, const DerivedParams& d, Table table) {
    validate_config(cfg);
    if (!geometry_supported(cfg))
        throw NoRegime("classify_regime: condition rows do not partition for h <= L/2");
    const TableConstants t = table_constants(cfg);
    if (table == Table::Lossy) {
        if (!(cfg.alpha > 0.0))
            throw InvalidAlpha("classify_regime: lossy table requires alpha > 0");
        const double chi_att = d.chi * std::exp(-2.0 * cfg.alpha * cfg.Dx);
        return {Table::Lossy, lossy_row(t, d.chi, chi_att)};
    }
    return {Table::Lossless, lossless_row(t, d.chi)};
}

RegimeTag classify_regime(const SystemConfig& cfg, Table table) {
    return classify_regime(cfg, derived_params(cfg), table);
}

OutageResult outage_lossy(const SystemConfig& cfg, const DerivedParams& d, int K) {
    validate_config(cfg);
    if (!(cfg.alpha > 0.0))
        throw InvalidAlpha("outage_lossy: alpha must be > 0, use outage_lossless");
    if (!geometry_supported(cfg))
        throw UnsupportedGeometry("outage_lossy: closed form requires h > L/2");

    const TableConstants t = table_constants(cfg);
    const double chi = d.chi;
    const double chi_att = chi * std::exp(-2.0 * cfg.alpha * cfg.Dx);
    const int row = lossy_row(t, chi, chi_att);
    const double alpha = cfg.alpha;
    const double Dx = cfg.Dx;
    const double Dy = cfg.Dy;

    if (row == 1) return {1.0, {Table::Lossy, 1}};
    if (row == 6) return {0.0, {Table::Lossy, 6}};

    const ChebyshevRule rule = chebyshev_rule(K > 0 ? K : cfg.K);
    const auto node_sum = [&](double x1, double x2) {
        // sum_k sqrt(1 - w_k^2) * halfwidth(x_k) with x_k the affine image
        // of node k in [x1, x2].
        const double mid = 0.5 * (x1 + x2);
        const double half = 0.5 * (x2 - x1);
        double s = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
            s += rule.sine[k] * outage_halfwidth(t, chi, alpha, mid + half * rule.nodes[k]);
        return s;
    };

    const double b = std::log(chi / t.P) / (2.0 * alpha);
    double p = 0.0;
    switch (row) {
        case 2:
            p = 1.0 + std::numbers::pi / (2.0 * alpha * Dx * Dy * rule.K) *
                          std::log(t.P / chi) * node_sum(0.0, b);
            break;
        case 3: {
            const double c = std::log(chi / t.Q) / (2.0 * alpha);
            p = 1.0 + std::log(t.Q / chi) / (2.0 * alpha * Dx) -
                std::numbers::pi / (2.0 * alpha * Dx * Dy * rule.K) *
                    std::log(t.Q / t.P) * node_sum(c, b);
            break;
        }
        case 4:
            p = 1.0 - std::numbers::pi / (Dy * rule.K) * node_sum(0.0, Dx);
            break;
        case 5: {
            const double c = std::log(chi / t.Q) / (2.0 * alpha);
            p = (1.0 + std::log(t.Q / chi) / (2.0 * alpha * Dx)) *
                (1.0 - std::numbers::pi / (Dy * rule.K) * node_sum(c, Dx));
            break;
        }
        default:
            break;
    }
    return {std::clamp(p, 0.0, 1.0), {Table::Lossy, row}};
}

OutageResult outage_lossy(const SystemConfig& cfg) {
    return outage_lossy(cfg, derived_params(cfg), 0);
}

OutageResult outage_lossless(const SystemConfig& cfg, const DerivedParams& d) {
    validate_config(cfg);
    if (!geometry_supported(cfg))
        throw UnsupportedGeometry("outage_lossless: closed form requires h > L/2");
    const TableConstants t = table_constants(cfg);
    const int row = lossless_row(t, d.chi);
    if (row == 1) return {1.0, {Table::Lossless, 1}};
    if (row == 3) return {0.0, {Table::Lossless, 3}};
    const double half = std::sqrt(
        std::max(std::sqrt(std::max(d.chi - t.hL_sq, 0.0)) - t.w, 0.0));
    return {std::clamp(1.0 - 2.0 / cfg.Dy * half, 0.0, 1.0), {Table::Lossless, 2}};
}

OutageResult outage_lossless(const SystemConfig& cfg) {
    return outage_lossless(cfg, derived_params(cfg));
}

double ergodic_lossy(const SystemConfig& cfg, const DerivedParams& d, int K) {
    validate_config(cfg);
    if (!(cfg.alpha > 0.0))
        throw InvalidAlpha("ergodic_lossy: alpha must be > 0, use ergodic_lossless");
    const ChebyshevRule rule = chebyshev_rule(K > 0 ? K : cfg.K);
    const double w = cfg.h * cfg.h - cfg.L * cfg.L / 4.0;
    const double hL_sq = cfg.h * cfg.h * cfg.L * cfg.L;
    const double att = std::exp(-2.0 * cfg.alpha * cfg.Dx);
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double u = cfg.Dy / 4.0 * (rule.nodes[k] + 1.0);
        const double q = u * u + w;
        const double pu = q * q + hL_sq;
        sum += rule.sine[k] *
               (dilog(-d.beta_sq_rho * att / pu) - dilog(-d.beta_sq_rho / pu));
    }
    const double rate = std::numbers::pi * (1.0 - cfg.tau) /
                        (4.0 * rule.K * cfg.Dx * cfg.alpha * std::numbers::ln2) * sum;
    return std::max(rate, 0.0);
}

double ergodic_lossy(const SystemConfig& cfg) {
    return ergodic_lossy(cfg, derived_params(cfg), 0);
}

double ergodic_lossless(const SystemConfig& cfg, const DerivedParams& d) {
    validate_config(cfg);
    const double h = cfg.h;
    const double L = cfg.L;
    const double Dy = cfg.Dy;
    const double w = h * h - L * L / 4.0;
    const double u = std::sqrt(w * w + h * h * L * L + d.beta_sq_rho);
    const double v = std::sqrt(std::max(2.0 * (u - w), 0.0));
    const double s = std::sqrt(std::max(u - v * v / 4.0, 0.0));
    const double r1 = Dy + v;
    const double r2 = Dy - v;
    const double r3 = Dy + L;
    const double r4 = Dy - L;
    double bracket = r1 * std::log(r1 * r1 + 4.0 * s * s) +
                     r2 * std::log(r2 * r2 + 4.0 * s * s) -
                     r3 * std::log(r3 * r3 + 4.0 * h * h) -
                     r4 * std::log(r4 * r4 + 4.0 * h * h) -
                     4.0 * h * (std::atan(r3 / (2.0 * h)) + std::atan(r4 / (2.0 * h)));
    if (s > 0.0)
        bracket += 4.0 * s * (std::atan(r1 / (2.0 * s)) + std::atan(r2 / (2.0 * s)));
    const double rate = (1.0 - cfg.tau) / (Dy * std::numbers::ln2) * bracket;
    return std::max(rate, 0.0);
}

double ergodic_lossless(const SystemConfig& cfg) {
    return ergodic_lossless(cfg, derived_params(cfg));
}

}  // namespace wppas
