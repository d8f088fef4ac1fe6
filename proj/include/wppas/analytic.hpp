// SPDX-License-Identifier: Apache-2.0
//
// Closed-form outage probability and ergodic rate for the aligned
// pinching-antenna deployment, covering the lossy (alpha > 0) and
// lossless (alpha = 0) waveguide cases.
//
// All outage expressions assume h > L/2 (equivalently h^2 - L^2/4 > 0):
// under that geometry the product of the two hop path losses is a
// monotone function of |y_m|, which is what makes the condition tables
// below a partition.  For h <= L/2 the closed forms are declared
// unsupported and callers must fall back to a numerical oracle (see
// model.hpp); we never return silently-wrong numbers for that geometry.

#pragma once

#include <stdexcept>
#include <string>

#include "wppas/physics.hpp"

namespace wppas {

/// Closed forms exist for two waveguide-loss regimes, each with its own
/// table of condition rows.
enum class Table { Lossy, Lossless };

/// Which condition row of the selected table applied.
struct RegimeTag {
    Table table = Table::Lossy;
    int row = 0;  ///< 1-based row index as printed in the table

    std::string str() const;
};

/// Geometry thresholds for the lossy outage table, in metres along the
/// waveguide.  With A = chi e^{-2 alpha x}:
///   x > a  <=>  A < h^2 L^2                    (outage at every y)
///   x > b  <=>  A < (h^2 - L^2/4)^2 + h^2 L^2  (outage at every y, via y = 0)
///   x < c  <=>  A > (Dy^2/4 + h^2 - L^2/4)^2 + h^2 L^2  (no outage at any y)
/// Always a >= b >= c when defined; any of them may be negative or
/// exceed Dx.
struct LossyThresholds {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

struct OutageResult {
    double p_out = 0.0;  ///< in [0, 1]
    RegimeTag regime;
};

/// Thrown when alpha = 0 reaches a lossy-only code path (or vice versa).
struct InvalidAlpha : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when h <= L/2, where the outage tables do not apply.
struct UnsupportedGeometry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by classify_regime when the condition rows fail to partition,
/// which signals h <= L/2.
struct NoRegime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LossyThresholds lossy_thresholds(const SystemConfig& cfg);
LossyThresholds lossy_thresholds(const SystemConfig& cfg, const DerivedParams& d);

/// Row of the applicable condition table.  Boundary equalities resolve to
/// the row whose condition uses the non-strict comparator as printed;
/// selection compares chi against the table constants directly, so the
/// tie-break is deterministic.
RegimeTag classify_regime(const SystemConfig& cfg, Table table);
RegimeTag classify_regime(const SystemConfig& cfg, const DerivedParams& d, Table table);

/// Outage probability with waveguide loss (alpha > 0, h > L/2).
/// Rows 2-5 evaluate their Gauss-Chebyshev sums with cfg.K nodes unless
/// an explicit K override is given.
OutageResult outage_lossy(const SystemConfig& cfg);
OutageResult outage_lossy(const SystemConfig& cfg, const DerivedParams& d, int K = 0);

/// Outage probability for the lossless idealisation.  Ignores cfg.alpha;
/// exact (no quadrature).  Requires h > L/2.
OutageResult outage_lossless(const SystemConfig& cfg);
OutageResult outage_lossless(const SystemConfig& cfg, const DerivedParams& d);

/// Ergodic rate with waveguide loss (alpha > 0), in bits per channel use.
/// Valid for any h, L > 0.
double ergodic_lossy(const SystemConfig& cfg);
double ergodic_lossy(const SystemConfig& cfg, const DerivedParams& d, int K = 0);

/// Ergodic rate for the lossless idealisation, in bits per channel use.
/// Ignores cfg.alpha; exact for any geometry.
double ergodic_lossless(const SystemConfig& cfg);
double ergodic_lossless(const SystemConfig& cfg, const DerivedParams& d);

}  // namespace wppas
