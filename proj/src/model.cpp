// SPDX-License-Identifier: Apache-2.0

#include "wppas/model.hpp"

namespace wppas {

OutageEval outage(const SystemConfig& cfg, const QuadGrid& fallback,
                  unsigned threads) {
    validate_config(cfg);
    const bool closed_form_ok = cfg.h * cfg.h - cfg.L * cfg.L / 4.0 > 0.0;
    if (closed_form_ok) {
        const OutageResult r =
            cfg.alpha > 0.0 ? outage_lossy(cfg) : outage_lossless(cfg);
        return {r.p_out, Source::ClosedForm, r.regime};
    }
    return {quad_outage(cfg, fallback, threads), Source::Quadrature, std::nullopt};
}

RateEval ergodic_rate(const SystemConfig& cfg) {
    validate_config(cfg);
    const double r =
        cfg.alpha > 0.0 ? ergodic_lossy(cfg) : ergodic_lossless(cfg);
    return {r, Source::ClosedForm};
}

}  // namespace wppas
