#include "jumpcube/nonlinear_approx.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace jumpcube {

namespace {

// A volatility of exactly zero degenerates F and G; flooring keeps the
// boundary system solvable while reproducing the linear curves to well below
// any tolerance of interest.
constexpr double kAlphaFloor = 1e-9;

JumpDistribution dist_for(JumpKind kind, double alpha) {
    return JumpDistribution::from_volatility(kind, std::max(alpha, kAlphaFloor));
}

double bisect(const std::function<double(double)>& f, double lo, double hi, const char* what,
              double tol = 1e-7) {
    double flo = f(lo);
    double fhi = f(hi);
    if (std::fabs(flo) < 1e-9) return lo;
    if (std::fabs(fhi) < 1e-9) return hi;
    if (flo * fhi > 0.0) {
        throw bracket_error(std::string("no sign change bracketing ") + what, flo, fhi);
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> bracket_around(double center, double half_width = 0.1) {
    return {std::max(0.0, center - half_width), std::min(1.0, center + half_width)};
}

} // namespace

NonlinearEquity::NonlinearEquity(CubeOwner state, const WinLossParams& wl,
                                 JumpDistribution dist_current, JumpDistribution dist_remote,
                                 DecisionPoints points, std::vector<Region> regions)
    : state_(state),
      dist_current_(std::move(dist_current)),
      dist_remote_(std::move(dist_remote)),
      points_(points),
      regions_(std::move(regions)) {
    solve_boundaries(wl.l(), wl.w());
}

NonlinearEquity NonlinearEquity::owned(const WinLossParams& wl,
                                       const JumpDistribution& dist_current,
                                       const JumpDistribution& dist_remote,
                                       const DecisionPoints& pts,
                                       const PiecewiseLinearEquity& owned_curve,
                                       const PiecewiseLinearEquity& unavailable_curve) {
    const AffineSegment& o1 = owned_curve.segment(0);
    const AffineSegment& o2 = owned_curve.segment(owned_curve.segment_count() - 1);
    const AffineSegment& u2 = unavailable_curve.segment(unavailable_curve.segment_count() - 1);

    std::vector<Region> regions{
        {0.0, pts.rd_o, o1.intercept, o1.slope, false},
        {pts.rd_o, pts.cp, 2.0 * u2.intercept, 2.0 * u2.slope, true},
        {pts.cp, pts.tg_o, 1.0, 0.0, false},
        {pts.tg_o, 1.0, o2.intercept, o2.slope, false},
    };
    return NonlinearEquity(CubeOwner::PlayerOwns, wl, dist_current, dist_remote, pts,
                           std::move(regions));
}

NonlinearEquity NonlinearEquity::unavailable(const WinLossParams& wl,
                                             const JumpDistribution& dist_current,
                                             const JumpDistribution& dist_remote,
                                             const DecisionPoints& pts,
                                             const PiecewiseLinearEquity& unavailable_curve,
                                             const PiecewiseLinearEquity& owned_post_curve) {
    const AffineSegment& u1 = unavailable_curve.segment(0);
    const AffineSegment& u2 = unavailable_curve.segment(unavailable_curve.segment_count() - 1);
    const AffineSegment& o1 = owned_post_curve.segment(0);

    std::vector<Region> regions{
        {0.0, pts.tg_u, u1.intercept, u1.slope, false},
        {pts.tg_u, pts.tp, -1.0, 0.0, false},
        {pts.tp, pts.rd_u, 2.0 * o1.intercept, 2.0 * o1.slope, true},
        {pts.rd_u, 1.0, u2.intercept, u2.slope, false},
    };
    return NonlinearEquity(CubeOwner::OpponentOwns, wl, dist_current, dist_remote, pts,
                           std::move(regions));
}

NonlinearEquity NonlinearEquity::centered(const WinLossParams& wl,
                                          const JumpDistribution& dist_current,
                                          const JumpDistribution& dist_remote,
                                          const DecisionPoints& pts,
                                          const PiecewiseLinearEquity& centered_curve,
                                          const PiecewiseLinearEquity& owned_post_curve,
                                          const PiecewiseLinearEquity& unavailable_curve) {
    const AffineSegment& c1 = centered_curve.segment(0);
    const AffineSegment& c2 = centered_curve.segment(1);
    const AffineSegment& c3 = centered_curve.segment(2);
    const AffineSegment& o1 = owned_post_curve.segment(0);
    const AffineSegment& u2 = unavailable_curve.segment(unavailable_curve.segment_count() - 1);

    std::vector<Region> regions{
        {0.0, pts.tgc_u, c1.intercept, c1.slope, false},
        {pts.tgc_u, pts.tp, -1.0, 0.0, false},
        {pts.tp, pts.id_u, 2.0 * o1.intercept, 2.0 * o1.slope, true},
        {pts.id_u, pts.id_o, c2.intercept, c2.slope, false},
        {pts.id_o, pts.cp, 2.0 * u2.intercept, 2.0 * u2.slope, true},
        {pts.cp, pts.tgc_o, 1.0, 0.0, false},
        {pts.tgc_o, 1.0, c3.intercept, c3.slope, false},
    };
    return NonlinearEquity(CubeOwner::Centered, wl, dist_current, dist_remote, pts,
                           std::move(regions));
}

double NonlinearEquity::interior_sum(double p) const {
    double acc = 0.0;
    for (const Region& r : regions_) {
        if (!(r.hi > r.lo)) continue;
        const JumpDistribution& d = r.doubled ? dist_remote_ : dist_current_;
        const double df = d.cdf(r.hi - p) - d.cdf(r.lo - p);
        const double dg = d.partial_moment(r.hi - p) - d.partial_moment(r.lo - p);
        acc += (r.intercept + r.slope * p) * df + r.slope * dg;
    }
    return acc;
}

void NonlinearEquity::solve_boundaries(double l, double w) {
    const JumpDistribution& d = dist_current_;
    const double f0 = d.cdf(0.0);
    const double f1 = d.cdf(1.0);
    const double fm1 = d.cdf(-1.0);
    const double g0 = d.partial_moment(0.0);
    const double g1 = d.partial_moment(1.0);
    const double gm1 = d.partial_moment(-1.0);

    // E(P) = interior(P) + (-L + bm*P) F(-P) + bm G(-P)
    //                    + (W - bp + bp*P)(1 - F(1-P)) - bp G(1-P)
    // pinned at E(0) = -L and E(1) = +W.
    const double m00 = g0;
    const double m01 = -(1.0 - f1) - g1;
    const double r0 = -l - interior_sum(0.0) + l * f0 - w * (1.0 - f1);

    const double m10 = fm1 + gm1;
    const double m11 = -g0;
    const double r1 = w - interior_sum(1.0) + l * fm1 - w * (1.0 - f0);

    const double det = m00 * m11 - m01 * m10;
    if (std::fabs(det) < 1e-300 || !std::isfinite(det)) {
        const double norm = (std::fabs(m00) + std::fabs(m01)) * (std::fabs(m10) + std::fabs(m11));
        throw singular_system_error("boundary coefficient system is singular",
                                    norm / std::max(std::fabs(det), 1e-300));
    }
    boundary_.b_minus = (r0 * m11 - m01 * r1) / det;
    boundary_.b_plus = (m00 * r1 - r0 * m10) / det;
    boundary_.a_minus = -l;
    boundary_.a_plus = w - boundary_.b_plus;
}

double NonlinearEquity::eval(double p) const {
    const JumpDistribution& d = dist_current_;
    double acc = interior_sum(p);
    acc += (boundary_.a_minus + boundary_.b_minus * p) * d.cdf(-p) +
           boundary_.b_minus * d.partial_moment(-p);
    acc += (boundary_.a_plus + boundary_.b_plus * p) * (1.0 - d.cdf(1.0 - p)) -
           boundary_.b_plus * d.partial_moment(1.0 - p);
    return acc;
}

NonlinearModel NonlinearModel::build(const WinLossParams& wl, const VolatilityPair& vols,
                                     JumpKind kind) {
    const JumpDistribution dist_local = dist_for(kind, vols.alpha_local);
    const JumpDistribution dist_remote = dist_for(kind, vols.alpha_remote);

    const DecisionPoints pts = decision_points_linear(wl, vols);
    const PiecewiseLinearEquity owned_cur =
        owned_equity_curve(wl, vols.alpha_local, vols.alpha_remote);
    const PiecewiseLinearEquity unav = unavailable_equity_curve(wl, vols.alpha_remote);
    const PiecewiseLinearEquity cent =
        centered_equity_curve(wl, vols.alpha_local, vols.alpha_remote);

    // The post-double evaluators price positions at a larger cube level:
    // every input - curves, jump law, and region boundaries - is built from
    // the remote volatility, so the take and cash points they define do not
    // depend on the local volatility at all.
    const VolatilityPair remote_vols = VolatilityPair::uniform(vols.alpha_remote);
    const DecisionPoints pts_post = decision_points_linear(wl, remote_vols);
    const PiecewiseLinearEquity owned_post =
        owned_equity_curve(wl, vols.alpha_remote, vols.alpha_remote);

    return NonlinearModel{
        pts,
        NonlinearEquity::owned(wl, dist_local, dist_remote, pts, owned_cur, unav),
        NonlinearEquity::owned(wl, dist_remote, dist_remote, pts_post, owned_post, unav),
        NonlinearEquity::unavailable(wl, dist_local, dist_remote, pts, unav, owned_post),
        NonlinearEquity::unavailable(wl, dist_remote, dist_remote, pts_post, unav, owned_post),
        NonlinearEquity::centered(wl, dist_local, dist_remote, pts, cent, owned_post, unav),
    };
}

namespace {

struct SidePoints {
    double tp, cp, rd_o, tg_o, id_o, tgc_o;
};

SidePoints side_points_nonlinear(const NonlinearModel& m) {
    SidePoints out{};
    const DecisionPoints& lin = m.linear_points;

    {
        auto [lo, hi] = bracket_around(lin.tp);
        out.tp = bisect([&](double p) { return m.owned_post.eval(p) + 0.5; }, lo, hi, "take point");
    }
    {
        auto [lo, hi] = bracket_around(lin.cp);
        out.cp = bisect([&](double p) { return m.unavailable_post.eval(p) - 0.5; }, lo, hi,
                        "cash point");
    }
    {
        auto [lo, hi] = bracket_around(lin.rd_o);
        out.rd_o = bisect(
            [&](double p) { return 2.0 * m.unavailable_post.eval(p) - m.owned_current.eval(p); },
            lo, hi, "redouble point");
    }
    {
        auto [lo, hi] = bracket_around(lin.tg_o);
        out.tg_o =
            bisect([&](double p) { return m.owned_current.eval(p) - 1.0; }, lo, hi, "too-good point");
    }
    {
        auto [lo, hi] = bracket_around(lin.id_o);
        out.id_o = bisect(
            [&](double p) { return 2.0 * m.unavailable_post.eval(p) - m.centered_current.eval(p); },
            lo, hi, "initial double point");
    }
    {
        auto [lo, hi] = bracket_around(lin.tgc_o);
        out.tgc_o = bisect([&](double p) { return m.centered_current.eval(p) - 1.0; }, lo, hi,
                           "centered too-good point");
    }
    return out;
}

} // namespace

DecisionPoints decision_points_nonlinear(const WinLossParams& wl, const VolatilityPair& vols,
                                         JumpKind kind) {
    const NonlinearModel mine = NonlinearModel::build(wl, vols, kind);
    const NonlinearModel theirs = NonlinearModel::build(wl.mirrored(), vols.mirrored(), kind);

    const SidePoints a = side_points_nonlinear(mine);
    const SidePoints b = side_points_nonlinear(theirs);

    DecisionPoints pts;
    pts.tp = a.tp;
    pts.cp = a.cp;
    pts.rd_o = a.rd_o;
    pts.tg_o = a.tg_o;
    pts.id_o = a.id_o;
    pts.tgc_o = a.tgc_o;
    pts.tg_u = 1.0 - b.tg_o;
    pts.rd_u = 1.0 - b.rd_o;
    pts.id_u = 1.0 - b.id_o;
    pts.tgc_u = 1.0 - b.tgc_o;
    pts.clamped = mine.linear_points.clamped || theirs.linear_points.clamped;
    return pts;
}

} // namespace jumpcube
