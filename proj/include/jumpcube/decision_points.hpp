#pragma once

namespace jumpcube {

/// The ten cube decision probabilities, all from the player's point of view.
///
/// With a cube in play (owned by either side), in order of P:
///   tg_u <= tp <= rd_u <= rd_o <= cp <= tg_o
/// tg_u/tg_o are the too-good points (equity at the current cube hits -1/+1),
/// tp/cp the take and cash points, rd_u/rd_o the opponent's and player's
/// redouble points.
///
/// With a centered cube: tgc_u <= tp, id_u <= id_o <= rd_o, cp <= tgc_o.
struct DecisionPoints {
    double tg_u = 0.0;
    double tp = 0.0;
    double rd_u = 0.0;
    double rd_o = 1.0;
    double cp = 1.0;
    double tg_o = 1.0;

    double tgc_u = 0.0;
    double id_u = 0.0;
    double id_o = 1.0;
    double tgc_o = 1.0;

    // Set when some point had no in-domain solution and was clamped to a
    // boundary. The W=1 (resp. L=1) too-good points pinned at 1 (resp. 0)
    // are expected behaviour and do not set this.
    bool clamped = false;

    bool ordered(double tol = 1e-9) const;

    // Player/opponent reflection: P -> 1-P and the two sides' roles swap.
    DecisionPoints mirrored() const;
};

} // namespace jumpcube
