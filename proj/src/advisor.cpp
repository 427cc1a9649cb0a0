#include "jumpcube/advisor.hpp"

#include "jumpcube/exact_solver.hpp"
#include "jumpcube/linear_approx.hpp"
#include "jumpcube/nonlinear_approx.hpp"

#include <algorithm>

namespace jumpcube {

namespace {

struct MethodView {
    DecisionPoints points;
    double e_owned = 0.0;
    double e_unavailable = 0.0;
    double e_centered = 0.0;
};

MethodView evaluate(const WinLossParams& wl, const VolatilityPair& vols, Method method, double p,
                    const AdvisorOptions& options) {
    MethodView view;
    switch (method) {
    case Method::Linear: {
        view.points = decision_points_linear(wl, vols);
        view.e_owned = owned_equity_curve(wl, vols.alpha_local, vols.alpha_remote).value(p);
        view.e_unavailable = unavailable_equity_curve(wl, vols.alpha_remote).value(p);
        view.e_centered = centered_equity_curve(wl, vols.alpha_local, vols.alpha_remote).value(p);
        break;
    }
    case Method::Nonlinear: {
        const NonlinearModel model = NonlinearModel::build(wl, vols, options.kind);
        view.points = decision_points_nonlinear(wl, vols, options.kind);
        view.e_owned = model.owned_current.eval(p);
        view.e_unavailable = model.unavailable_current.eval(p);
        view.e_centered = model.centered_current.eval(p);
        break;
    }
    case Method::Exact: {
        const JumpDistribution dist =
            JumpDistribution::from_volatility(options.kind, std::max(vols.alpha_remote, 1e-6));
        const EquitySolution sol = solve_exact(wl, dist, options.grid_n);
        view.points = sol.points;
        view.e_owned = sol.interpolate(sol.e_o, p);
        view.e_unavailable = sol.interpolate(sol.e_u, p);
        view.e_centered = sol.interpolate(sol.e_c, p);
        break;
    }
    }
    return view;
}

} // namespace

CubeAdvice recommend(const GammonProbs& g, const CubeState& cube, const VolatilityPair& vols,
                     Method method, const AdvisorOptions& options) {
    g.validate();
    if (g.p_win <= 0.0 || g.p_win >= 1.0) {
        throw degenerate_state_error("cube advice is undefined at p_win of 0 or 1");
    }
    const WinLossParams wl = derive_win_loss(g);
    const double p = g.p_win;
    const MethodView view = evaluate(wl, vols, method, p, options);
    const DecisionPoints& pts = view.points;

    CubeAdvice advice;
    advice.method = method;
    advice.points_used = pts;

    switch (cube.owner) {
    case CubeOwner::PlayerOwns:
        if (p >= pts.tg_o) {
            advice.doubler_action = DoublerAction::TooGoodToDouble;
        } else if (p >= pts.rd_o) {
            advice.doubler_action = DoublerAction::Double;
        } else {
            advice.doubler_action = DoublerAction::NoDouble;
        }
        // Opponent's response to a (possibly hypothetical) double here.
        advice.taker_action = p <= pts.cp ? TakerAction::Take : TakerAction::Pass;
        advice.equity_no_double = view.e_owned;
        advice.equity_double_take = 2.0 * view.e_unavailable;
        advice.equity_double_pass = 1.0;
        break;
    case CubeOwner::Centered:
        if (p >= pts.tgc_o) {
            advice.doubler_action = DoublerAction::TooGoodToDouble;
        } else if (p >= pts.id_o) {
            advice.doubler_action = DoublerAction::Double;
        } else {
            advice.doubler_action = DoublerAction::NoDouble;
        }
        advice.taker_action = p <= pts.cp ? TakerAction::Take : TakerAction::Pass;
        advice.equity_no_double = view.e_centered;
        advice.equity_double_take = 2.0 * view.e_unavailable;
        advice.equity_double_pass = 1.0;
        break;
    case CubeOwner::OpponentOwns:
        // Take/pass advice only: the player decides on the opponent's double.
        advice.doubler_action = DoublerAction::NoDouble;
        advice.taker_action = p >= pts.tp ? TakerAction::Take : TakerAction::Pass;
        advice.equity_no_double = view.e_unavailable;
        advice.equity_double_take = 2.0 * view.e_owned;
        advice.equity_double_pass = -1.0;
        break;
    }
    return advice;
}

double equity(const GammonProbs& g, const CubeState& cube, const VolatilityPair& vols,
              Method method, bool normalized, const AdvisorOptions& options) {
    g.validate();
    const double scale = normalized ? 1.0 : static_cast<double>(cube.value);
    // Terminal states: the game is over and only the realized payoff remains.
    if (g.p_win <= 0.0) {
        return -(1.0 + g.p_gammon_loss + g.p_backgammon_loss) * scale;
    }
    if (g.p_win >= 1.0) {
        return (1.0 + g.p_gammon_win + g.p_backgammon_win) * scale;
    }
    const WinLossParams wl = derive_win_loss(g);
    const MethodView view = evaluate(wl, vols, method, g.p_win, options);
    double e = 0.0;
    switch (cube.owner) {
    case CubeOwner::PlayerOwns: e = view.e_owned; break;
    case CubeOwner::Centered: e = view.e_centered; break;
    case CubeOwner::OpponentOwns: e = view.e_unavailable; break;
    }
    return normalized ? e : e * static_cast<double>(cube.value);
}

} // namespace jumpcube
