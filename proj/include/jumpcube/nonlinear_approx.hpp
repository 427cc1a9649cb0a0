#pragma once

#include "jumpcube/decision_points.hpp"
#include "jumpcube/distributions.hpp"
#include "jumpcube/linear_approx.hpp"
#include "jumpcube/params.hpp"

#include <vector>

namespace jumpcube {

/// Affine extensions of an equity curve outside [0,1]. The fixed constraints
/// are a_minus = -L and a_plus + b_plus = W; the two slopes are solved so
/// that the full F/G sum reproduces E(0) = -L and E(1) = +W exactly.
struct BoundaryCoefficients {
    double a_minus = 0.0;
    double b_minus = 0.0;
    double a_plus = 0.0;
    double b_plus = 0.0;
};

/// Second-iteration equity: one application of the jump integral to the
/// piecewise-linear approximation, evaluated in closed form through the
/// distribution's F and G functions.
///
/// Terms at the current cube level use dist_current; sub-terms where the
/// post-jump position is played at a doubled cube use dist_remote. The two
/// coincide whenever a single constant volatility is in play.
class NonlinearEquity {
public:
    static NonlinearEquity owned(const WinLossParams& wl, const JumpDistribution& dist_current,
                                 const JumpDistribution& dist_remote, const DecisionPoints& points,
                                 const PiecewiseLinearEquity& owned_curve,
                                 const PiecewiseLinearEquity& unavailable_curve);

    static NonlinearEquity unavailable(const WinLossParams& wl,
                                       const JumpDistribution& dist_current,
                                       const JumpDistribution& dist_remote,
                                       const DecisionPoints& points,
                                       const PiecewiseLinearEquity& unavailable_curve,
                                       const PiecewiseLinearEquity& owned_post_curve);

    static NonlinearEquity centered(const WinLossParams& wl, const JumpDistribution& dist_current,
                                    const JumpDistribution& dist_remote,
                                    const DecisionPoints& points,
                                    const PiecewiseLinearEquity& centered_curve,
                                    const PiecewiseLinearEquity& owned_post_curve,
                                    const PiecewiseLinearEquity& unavailable_curve);

    double eval(double p) const;

    CubeOwner state() const { return state_; }
    const BoundaryCoefficients& boundary() const { return boundary_; }
    const DecisionPoints& points() const { return points_; }

private:
    struct Region {
        double lo = 0.0;
        double hi = 0.0;
        double intercept = 0.0;
        double slope = 0.0;
        bool doubled = false; // true -> use dist_remote for this term
    };

    NonlinearEquity(CubeOwner state, const WinLossParams& wl, JumpDistribution dist_current,
                    JumpDistribution dist_remote, DecisionPoints points,
                    std::vector<Region> regions);

    void solve_boundaries(double l, double w);
    double interior_sum(double p) const;

    CubeOwner state_;
    JumpDistribution dist_current_;
    JumpDistribution dist_remote_;
    DecisionPoints points_;
    std::vector<Region> regions_;
    BoundaryCoefficients boundary_;
};

/// Everything needed to evaluate the nonlinear equities of one player for
/// one (W, L, volatility) configuration. "post" evaluators price positions
/// at the doubled cube level and use the remote volatility throughout.
struct NonlinearModel {
    static NonlinearModel build(const WinLossParams& wl, const VolatilityPair& vols,
                                JumpKind kind = JumpKind::DoubleExponential);

    DecisionPoints linear_points;
    NonlinearEquity owned_current;
    NonlinearEquity owned_post;
    NonlinearEquity unavailable_current;
    NonlinearEquity unavailable_post;
    NonlinearEquity centered_current;
};

/// The ten decision points with each defining condition re-solved by
/// bisection on the nonlinear equities, bracketed around the linear points.
DecisionPoints decision_points_nonlinear(const WinLossParams& wl, const VolatilityPair& vols,
                                         JumpKind kind = JumpKind::DoubleExponential);

} // namespace jumpcube
