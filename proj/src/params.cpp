#include "jumpcube/params.hpp"

#include <cmath>

namespace jumpcube {

void GammonProbs::validate() const {
    auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0 && std::isfinite(p); };
    if (!in_unit(p_win) || !in_unit(p_gammon_win) || !in_unit(p_backgammon_win) ||
        !in_unit(p_gammon_loss) || !in_unit(p_backgammon_loss)) {
        throw invalid_parameter_error("gammon probabilities must lie in [0,1]");
    }
    if (p_backgammon_win > p_gammon_win || p_gammon_win > p_win) {
        throw invalid_parameter_error("win-side nesting violated: need p_bg_win <= p_g_win <= p_win");
    }
    if (p_backgammon_loss > p_gammon_loss || p_gammon_loss > 1.0 - p_win) {
        throw invalid_parameter_error("loss-side nesting violated: need p_bg_loss <= p_g_loss <= 1-p_win");
    }
}

WinLossParams::WinLossParams(double w, double l) : w_(w), l_(l) {
    if (!(w >= 1.0 && w <= 3.0) || !std::isfinite(w)) {
        throw invalid_parameter_error("W must lie in [1,3]");
    }
    if (!(l >= 1.0 && l <= 3.0) || !std::isfinite(l)) {
        throw invalid_parameter_error("L must lie in [1,3]");
    }
}

WinLossParams derive_win_loss(const GammonProbs& g) {
    g.validate();
    if (g.p_win <= 0.0 || g.p_win >= 1.0) {
        throw degenerate_state_error("W and L are undefined when p_win is 0 or 1");
    }
    const double w = (g.p_win + g.p_gammon_win + g.p_backgammon_win) / g.p_win;
    const double l = (1.0 - g.p_win + g.p_gammon_loss + g.p_backgammon_loss) / (1.0 - g.p_win);
    return WinLossParams(w, l);
}

double scale_statistical_volatility(double alpha_stat) {
    if (alpha_stat < 0.0 || !std::isfinite(alpha_stat)) {
        throw invalid_parameter_error("statistical volatility must be nonnegative");
    }
    // Ratio of the fitted self-play optima for the linear vs nonlinear
    // approximation; kept exact rather than rounded to 1.24.
    return alpha_stat * (11.3 / 9.1);
}

VolatilityPair::VolatilityPair(double local, double remote)
    : alpha_local(local), alpha_remote(remote) {
    auto ok = [](double a) { return a >= 0.0 && a < 0.5 && std::isfinite(a); };
    if (!ok(local) || !ok(remote)) {
        throw invalid_parameter_error("jump volatilities must lie in [0, 0.5)");
    }
}

CubeState::CubeState(CubeOwner owner, std::int64_t value) : owner(owner), value(value) {
    if (value < 1 || (value & (value - 1)) != 0) {
        throw invalid_parameter_error("cube value must be a positive power of two");
    }
}

} // namespace jumpcube
