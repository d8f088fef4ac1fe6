// SPDX-License-Identifier: Apache-2.0

#include "wppas/deploy.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace wppas {

namespace {

struct ScalarSearch {
    double arg = 0.0;
    double value = 0.0;
    PlacementMethod method = PlacementMethod::GoldenSection;
    SearchWarning warning = SearchWarning::None;
};

// Minimises f over [lo, hi]: coarse pre-scan to bracket, golden section
// inside the bracket, then a guard comparison against the scan.  The
// objective is only assumed unimodal; the scan catches violations.
ScalarSearch minimize_scalar(const std::function<double(double)>& f, double lo,
                             double hi, double tol, int prescan_points) {
    ScalarSearch out;
    const int n = prescan_points < 5 ? 5 : prescan_points;
    std::vector<double> xs(static_cast<std::size_t>(n));
    std::vector<double> fs(static_cast<std::size_t>(n));
    int best = 0;
    double fmin = std::numeric_limits<double>::infinity();
    double fmax = -fmin;
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const double v = f(x);
        xs[static_cast<std::size_t>(i)] = x;
        fs[static_cast<std::size_t>(i)] = v;
        if (v < fmin) {
            fmin = v;
            best = i;
        }
        if (v > fmax) fmax = v;
    }
    if (fmax - fmin <= 1e-14 * (1.0 + std::fabs(fmax))) {
        out.arg = lo;
        out.value = fs[0];
        out.method = PlacementMethod::GridSearch;
        out.warning = SearchWarning::FlatObjective;
        return out;
    }

    double a = xs[static_cast<std::size_t>(best > 0 ? best - 1 : 0)];
    double b = xs[static_cast<std::size_t>(best + 1 < n ? best + 1 : n - 1)];
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    out.arg = 0.5 * (a + b);
    out.value = f(out.arg);

    // Guard: a unimodal objective cannot beat the refined optimum on the
    // scan grid by a wide margin.
    if (fmin < out.value - 10.0 * tol) {
        out.arg = xs[static_cast<std::size_t>(best)];
        out.value = fmin;
        out.method = PlacementMethod::GridSearch;
        out.warning = SearchWarning::NonUnimodal;
    }
    return out;
}

double eval_metric(const SystemConfig& cfg, Metric metric, const SearchOptions& opts) {
    if (metric == Metric::Outage)
        return outage(cfg, opts.fallback, opts.threads).p_out;
    return ergodic_rate(cfg).bpcu;
}

}  // namespace

PlacementResult optimal_L_for_user(const SystemConfig& cfg, double y_m) {
    validate_config(cfg);
    PlacementResult r;
    r.method = PlacementMethod::ClosedForm;
    const double y_abs = std::fabs(y_m);
    r.argopt = y_abs < cfg.h ? 0.0 : 2.0 * std::sqrt(y_m * y_m - cfg.h * cfg.h);
    SystemConfig at_opt = cfg;
    at_opt.L = r.argopt;
    r.objective = snr_aligned(at_opt, {0.0, y_m});
    const double bound_sq = cfg.Dy * cfg.Dy - 4.0 * cfg.h * cfg.h;
    r.beyond_useful_L = bound_sq >= 0.0 && r.argopt > std::sqrt(bound_sq);
    return r;
}

PlacementResult optimal_user_position(const SystemConfig& cfg) {
    validate_config(cfg);
    PlacementResult r;
    r.method = PlacementMethod::ClosedForm;
    r.is_position = true;
    r.argopt = 0.0;  // x* = 0: every metre along the waveguide only adds loss
    const double h = cfg.h;
    const double L = cfg.L;
    if (L < 2.0 * h) {
        r.argopt2 = 0.0;
    } else if (L * L <= cfg.Dy * cfg.Dy + 4.0 * h * h) {
        r.argopt2 = std::sqrt(L * L / 4.0 - h * h);
    } else {
        r.argopt2 = 0.5 * cfg.Dy;
    }
    r.objective = snr_aligned(cfg, {r.argopt, r.argopt2});
    return r;
}

std::vector<std::pair<double, double>> snr_profile_y(
    const SystemConfig& cfg, double x_m, const std::vector<double>& y_grid) {
    validate_config(cfg);
    const DerivedParams d = derived_params(cfg);
    std::vector<std::pair<double, double>> out;
    out.reserve(y_grid.size());
    for (const double y : y_grid)
        out.emplace_back(y, snr_aligned(cfg, d, {x_m, y}));
    return out;
}

PlacementResult search_optimal_tau(const SystemConfig& cfg, Metric metric,
                                   double tol, const SearchOptions& opts) {
    validate_config(cfg);
    if (!(tol > 0.0)) throw std::invalid_argument("search_optimal_tau: tol must be > 0");
    const double sign = metric == Metric::Rate ? -1.0 : 1.0;
    const auto objective = [&](double tau) {
        SystemConfig c = cfg;
        c.tau = tau;
        return sign * eval_metric(c, metric, opts);
    };
    const ScalarSearch s =
        minimize_scalar(objective, 1e-4, 1.0 - 1e-4, tol, opts.prescan_points);
    PlacementResult r;
    r.argopt = s.arg;
    r.objective = sign * s.value;
    r.method = s.method;
    r.warning = s.warning;
    return r;
}

PlacementResult search_optimal_L(const SystemConfig& cfg, Metric metric,
                                 double tol, const SearchOptions& opts) {
    validate_config(cfg);
    if (!(tol > 0.0)) throw std::invalid_argument("search_optimal_L: tol must be > 0");
    const double sign = metric == Metric::Rate ? -1.0 : 1.0;
    const auto objective = [&](double L) {
        SystemConfig c = cfg;
        c.L = L;
        return sign * eval_metric(c, metric, opts);
    };
    const ScalarSearch s =
        minimize_scalar(objective, 0.0, cfg.Dy, tol, opts.prescan_points);
    PlacementResult r;
    r.argopt = s.arg;
    r.objective = sign * s.value;
    r.method = s.method;
    r.warning = s.warning;
    const double bound_sq = cfg.Dy * cfg.Dy - 4.0 * cfg.h * cfg.h;
    r.beyond_useful_L = bound_sq < 0.0 || r.argopt > std::sqrt(bound_sq);
    return r;
}

}  // namespace wppas
