#pragma once

#include "jumpcube/errors.hpp"

#include <cstdint>

namespace jumpcube {

/// Cubeless outcome probabilities for the player. Win-side gammon and
/// backgammon probabilities are unconditional and nested inside p_win;
/// loss-side ones are nested inside 1 - p_win.
struct GammonProbs {
    double p_win = 0.5;
    double p_gammon_win = 0.0;
    double p_backgammon_win = 0.0;
    double p_gammon_loss = 0.0;
    double p_backgammon_loss = 0.0;

    void validate() const;
};

/// W = expected points won conditioned on a win, L = expected points lost
/// conditioned on a loss (both positive, in [1,3]). Treated as constant
/// along the win-probability axis.
class WinLossParams {
public:
    WinLossParams(double w, double l);

    double w() const { return w_; }
    double l() const { return l_; }

    // Player/opponent reflection: the opponent's game has W and L swapped.
    WinLossParams mirrored() const { return WinLossParams(l_, w_); }

private:
    double w_;
    double l_;
};

WinLossParams derive_win_loss(const GammonProbs& g);

/// Optimal-play calibration: statistical volatility estimates must be scaled
/// by 11.3/9.1 before use in the linear approximation. Never applied
/// implicitly; callers invoke this once where appropriate.
double scale_statistical_volatility(double alpha_stat);

/// Local volatility applies at the current game state; remote volatility
/// applies after a prospective game reversal (the other side's cube region).
struct VolatilityPair {
    double alpha_local = 0.0;
    double alpha_remote = 0.0;

    VolatilityPair() = default;
    VolatilityPair(double local, double remote);
    static VolatilityPair uniform(double alpha) { return VolatilityPair(alpha, alpha); }

    // Reflection swaps the two roles: the mirrored player's near region is
    // the original player's remote region and vice versa.
    VolatilityPair mirrored() const { return VolatilityPair(alpha_remote, alpha_local); }
};

enum class CubeOwner {
    Centered,
    PlayerOwns,
    OpponentOwns,
};

struct CubeState {
    CubeOwner owner = CubeOwner::Centered;
    std::int64_t value = 1; // power of two

    CubeState() = default;
    CubeState(CubeOwner owner, std::int64_t value);
};

} // namespace jumpcube
