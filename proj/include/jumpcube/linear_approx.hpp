#pragma once

#include "jumpcube/decision_points.hpp"
#include "jumpcube/params.hpp"
#include "jumpcube/piecewise.hpp"

namespace jumpcube {

// Live-cube (fully efficient cube) limits. The cash point is
// (L+1)/(W+L+1/2); the take point is its player/opponent reflection.
double live_cash_point(const WinLossParams& wl);
double live_take_point(const WinLossParams& wl);

// Take and cash points for jump volatility alpha_remote. Both collapse to
// the live limits as alpha_remote -> 0; the take point rises and the cash
// point falls as volatility grows. Throws volatility_too_large_error when a
// correction denominator is driven nonpositive.
double take_point(const WinLossParams& wl, double alpha_remote);
double cash_point(const WinLossParams& wl, double alpha_remote);

/// Player-owned cube equity, two segments split at cash_point(wl, alpha_remote).
/// The lower segment runs through (0,-L) and the live-cash-point anchor built
/// with alpha_anchor; the upper segment joins it to (1,+W). Pass the local
/// volatility as alpha_anchor for current-cube-level equity, or the remote
/// volatility when this curve stands in for a post-double equity.
PiecewiseLinearEquity owned_equity_curve(const WinLossParams& wl, double alpha_anchor,
                                         double alpha_remote);

/// Opponent-owned cube equity, two segments split at take_point(wl, alpha_remote).
/// Depends on the remote volatility only.
PiecewiseLinearEquity unavailable_equity_curve(const WinLossParams& wl, double alpha_remote);

/// Centered-cube equity, three segments with anchors at the live take and
/// cash points. The cash-side anchor uses alpha_local, the take-side anchor
/// alpha_remote.
PiecewiseLinearEquity centered_equity_curve(const WinLossParams& wl, double alpha_local,
                                            double alpha_remote);

/// All ten decision points from the piecewise-linear equities. Player-side
/// points intersect the local-anchored owned (or centered) curve with the
/// remote-built unavailable curve; opponent-side points come from the
/// reflected computation (W<->L, local<->remote, P -> 1-P).
DecisionPoints decision_points_linear(const WinLossParams& wl, const VolatilityPair& vols);

} // namespace jumpcube
