#pragma once

#include "jumpcube/decision_points.hpp"
#include "jumpcube/distributions.hpp"
#include "jumpcube/params.hpp"

namespace jumpcube {

enum class DoublerAction {
    NoDouble,
    Double,
    TooGoodToDouble,
};

enum class TakerAction {
    Take,
    Pass,
    NotApplicable,
};

enum class Method {
    Linear,
    Nonlinear,
    Exact,
};

struct AdvisorOptions {
    JumpKind kind = JumpKind::DoubleExponential;
    int grid_n = 500; // exact method only
};

/// Cube recommendation for one position. Equities are normalized to the
/// current cube value and taken from the player's point of view; the
/// double/pass equity is +1 when the player is the doubler and -1 when the
/// player faces the opponent's double.
struct CubeAdvice {
    DoublerAction doubler_action = DoublerAction::NoDouble;
    TakerAction taker_action = TakerAction::NotApplicable;
    Method method = Method::Linear;
    double equity_no_double = 0.0;
    double equity_double_take = 0.0;
    double equity_double_pass = 1.0;
    DecisionPoints points_used;
};

/// Compares p_win against the method's decision points. On an exact
/// boundary the action later in game flow wins: the player doubles at
/// P = RD/ID and the taker takes at their take point.
CubeAdvice recommend(const GammonProbs& g, const CubeState& cube, const VolatilityPair& vols,
                     Method method, const AdvisorOptions& options = {});

/// Cubeful equity of the position for the given cube state. Normalized to
/// the current cube value unless `normalized` is false, in which case it is
/// scaled by the cube value into points.
double equity(const GammonProbs& g, const CubeState& cube, const VolatilityPair& vols,
              Method method, bool normalized = true, const AdvisorOptions& options = {});

} // namespace jumpcube
