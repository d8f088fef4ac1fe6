// SPDX-License-Identifier: Apache-2.0
//
// Special functions required by the closed-form expressions: the real
// dilogarithm on (-inf, 1] and Gauss-Chebyshev quadrature rules.

#pragma once

#include <cstddef>
#include <vector>

namespace wppas {

/// Real dilogarithm Li2(x) = -int_0^x ln(1-u)/u du for x <= 1.
///
/// Power series for |x| <= 1/2; reflection and inversion identities map
/// the remaining range onto the series domain.  Absolute error stays
/// below ~1e-14 over the range the closed forms use (x <= 0, arbitrarily
/// large magnitude).  Throws std::domain_error for x > 1.
double dilog(double x);

/// First-kind Gauss-Chebyshev rule with K nodes w_k = cos((2k-1)pi/(2K)).
///
/// Applied to a plain integral via the substitution pattern
///   int_lo^hi g(x) dx ~= pi (hi - lo) / (2K) * sum_k sqrt(1 - w_k^2) g(x_k),
/// with x_k the affine image of w_k in [lo, hi].
struct ChebyshevRule {
    int K = 0;
    std::vector<double> nodes;       ///< w_k, strictly decreasing in k
    std::vector<double> sine;        ///< sqrt(1 - w_k^2)
    double weight_factor = 0.0;      ///< pi / K

    /// Integrate g over [lo, hi].  Nodes are visited in mirrored pairs so
    /// that odd integrands over symmetric intervals cancel exactly.
    template <class G>
    double integrate(G&& g, double lo, double hi) const {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        double sum = 0.0;
        const int pairs = K / 2;
        for (int k = 0; k < pairs; ++k) {
            const double t = nodes[static_cast<std::size_t>(k)];
            sum += sine[static_cast<std::size_t>(k)] *
                   (g(mid + half * t) + g(mid - half * t));
        }
        if (K % 2 != 0)  // middle node is exactly 0, its sine factor exactly 1
            sum += sine[static_cast<std::size_t>(pairs)] * g(mid);
        return half * weight_factor * sum;
    }
};

/// Builds the K-node rule.  K >= 1, capped at 10^6.
ChebyshevRule chebyshev_rule(int K);

}  // namespace wppas
