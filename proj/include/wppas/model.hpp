// SPDX-License-Identifier: Apache-2.0
//
// Dispatch layer over the closed forms: picks the lossy or lossless
// expressions from alpha, and falls back to the quadrature oracle for
// the h <= L/2 geometry the tables do not cover.  Every result carries
// its provenance.

#pragma once

#include <optional>

#include "wppas/analytic.hpp"
#include "wppas/mc.hpp"

namespace wppas {

enum class Source { ClosedForm, Quadrature };

struct OutageEval {
    double p_out = 0.0;
    Source source = Source::ClosedForm;
    std::optional<RegimeTag> regime;  ///< set for closed-form results
};

struct RateEval {
    double bpcu = 0.0;
    Source source = Source::ClosedForm;
};

/// Outage probability of the pinching-antenna system.  Closed form when
/// h > L/2 (lossy table for alpha > 0, lossless table for alpha = 0),
/// midpoint quadrature at `fallback` resolution otherwise.
OutageEval outage(const SystemConfig& cfg, const QuadGrid& fallback = {},
                  unsigned threads = 0);

/// Ergodic rate of the pinching-antenna system [bits/channel use].
/// The rate closed forms hold for every geometry, so this never needs
/// the quadrature fallback.
RateEval ergodic_rate(const SystemConfig& cfg);

}  // namespace wppas
