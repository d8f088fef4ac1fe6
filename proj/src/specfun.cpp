// SPDX-License-Identifier: Apache-2.0

#include "wppas/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wppas {

namespace {

constexpr double kPiSqOver6 = std::numbers::pi * std::numbers::pi / 6.0;

// Power series sum_{k>=1} x^k / k^2 for |x| <= 1/2.
double dilog_series(double x) {
    double term = x;
    double sum = x;
    for (int k = 2; k < 200; ++k) {
        term *= x;
        const double add = term / (static_cast<double>(k) * k);
        sum += add;
        if (std::fabs(add) < 1e-18 * (1.0 + std::fabs(sum))) break;
    }
    return sum;
}

}  // namespace

double dilog(double x) {
    if (!(x <= 1.0)) throw std::domain_error("dilog: argument must be <= 1");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return kPiSqOver6;
    if (x < -1.0) {
        // Inversion: Li2(x) = -pi^2/6 - ln^2(-x)/2 - Li2(1/x).
        const double lg = std::log(-x);
        return -kPiSqOver6 - 0.5 * lg * lg - dilog(1.0 / x);
    }
    if (x < -0.5) {
        // Landen: Li2(x) = -ln^2(1-x)/2 - Li2(x/(x-1)), argument in (1/3, 1/2].
        const double lg = std::log1p(-x);
        return -0.5 * lg * lg - dilog_series(x / (x - 1.0));
    }
    if (x <= 0.5) return dilog_series(x);
    // Reflection: Li2(x) = pi^2/6 - ln(x) ln(1-x) - Li2(1-x), x in (1/2, 1).
    return kPiSqOver6 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
}

ChebyshevRule chebyshev_rule(int K) {
    if (K < 1) throw std::invalid_argument("chebyshev_rule: K must be >= 1");
    if (K > 1'000'000) throw std::invalid_argument("chebyshev_rule: K capped at 1e6");
    ChebyshevRule rule;
    rule.K = K;
    rule.weight_factor = std::numbers::pi / K;
    rule.nodes.resize(static_cast<std::size_t>(K));
    rule.sine.resize(static_cast<std::size_t>(K));
    // Fill the leading half and mirror, so nodes are symmetric bit for bit
    // and an odd K gets an exact zero in the middle.
    for (int k = 1; 2 * k - 1 <= K; ++k) {
        const double theta = (2.0 * k - 1.0) * std::numbers::pi / (2.0 * K);
        const double node = (2 * k - 1 == K) ? 0.0 : std::cos(theta);
        const double sine = std::sin(theta);
        rule.nodes[static_cast<std::size_t>(k - 1)] = node;
        rule.sine[static_cast<std::size_t>(k - 1)] = sine;
        if (K - k != k - 1) {
            rule.nodes[static_cast<std::size_t>(K - k)] = -node;
            rule.sine[static_cast<std::size_t>(K - k)] = sine;
        }
    }
    return rule;
}

}  // namespace wppas
