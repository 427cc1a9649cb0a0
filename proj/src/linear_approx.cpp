#include "jumpcube/linear_approx.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

namespace jumpcube {

namespace {

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

// Lowest root of g(P) = a.value(P)*sa + b.value(P)*sb + c over the merged
// breakpoint partition of the two curves. Segments where g vanishes
// identically are skipped; they correspond to degenerate (flat) conditions
// whose handling is the caller's business.
std::optional<double> lowest_piecewise_root(const PiecewiseLinearEquity& a, double sa,
                                            const PiecewiseLinearEquity* b, double sb, double c) {
    std::vector<double> knots = a.breakpoints();
    if (b != nullptr) {
        knots.insert(knots.end(), b->breakpoints().begin(), b->breakpoints().end());
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end(),
                            [](double x, double y) { return std::fabs(x - y) < 1e-14; }),
                knots.end());

    std::optional<double> best;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double lo = knots[i];
        const double hi = knots[i + 1];
        const double mid = 0.5 * (lo + hi);

        const AffineSegment& segA = a.segment(a.segment_index(mid));
        double intercept = sa * segA.intercept + c;
        double slope = sa * segA.slope;
        if (b != nullptr) {
            const AffineSegment& segB = b->segment(b->segment_index(mid));
            intercept += sb * segB.intercept;
            slope += sb * segB.slope;
        }

        if (std::fabs(slope) < 1e-13) {
            continue; // flat: either no root or a whole interval of them
        }
        const double root = -intercept / slope;
        if (root >= lo - 1e-12 && root <= hi + 1e-12) {
            const double clipped = std::clamp(root, lo, hi);
            if (!best || clipped < *best) best = clipped;
        }
    }
    return best;
}

// First P above which the curve strictly exceeds +1, or 1.0 when it never
// does. Defines the too-good threshold: at equity exactly +1 cashing is
// still as good as playing on, so a curve that only touches 1 (W = 1, or
// the live-limit plateau) pins the point at P = 1.
double too_good_point(const PiecewiseLinearEquity& curve) {
    for (std::size_t k = 0; k < curve.segment_count(); ++k) {
        const double hi = curve.breakpoints()[k + 1];
        const AffineSegment& seg = curve.segment(k);
        if (seg.at(hi) > 1.0 + 1e-12) {
            const double root = (1.0 - seg.intercept) / seg.slope;
            return std::clamp(root, curve.breakpoints()[k], hi);
        }
    }
    return 1.0;
}

struct PlayerSidePoints {
    double tp, cp, rd_o, tg_o, id_o, tgc_o;
    bool clamped = false;
};

// tp/cp from the closed forms; rd/tg/id solved segment-by-segment on the
// piecewise curves. Too-good conditions with no strict crossing (W = 1, or
// the flat live-limit cash plateau) pin to P = 1 without raising the
// diagnostic flag.
PlayerSidePoints player_side_points(const WinLossParams& wl, const VolatilityPair& vols) {
    PlayerSidePoints out{};
    out.tp = take_point(wl, vols.alpha_remote);
    out.cp = cash_point(wl, vols.alpha_remote);

    const PiecewiseLinearEquity owned = owned_equity_curve(wl, vols.alpha_local, vols.alpha_remote);
    const PiecewiseLinearEquity unav = unavailable_equity_curve(wl, vols.alpha_remote);
    const PiecewiseLinearEquity cent =
        centered_equity_curve(wl, vols.alpha_local, vols.alpha_remote);

    // E_O(RD) = 2 E_U(RD); guaranteed to cross since the difference runs
    // from +L at P=0 to -W at P=1.
    if (auto rd = lowest_piecewise_root(owned, 1.0, &unav, -2.0, 0.0)) {
        out.rd_o = clamp01(*rd);
    } else {
        out.rd_o = out.cp;
        out.clamped = true;
    }

    out.tg_o = too_good_point(owned);

    // E_C(ID) = 2 E_U(ID)
    if (auto id = lowest_piecewise_root(cent, 1.0, &unav, -2.0, 0.0)) {
        out.id_o = clamp01(*id);
    } else {
        out.id_o = out.cp;
        out.clamped = true;
    }

    out.tgc_o = too_good_point(cent);
    return out;
}

} // namespace

double live_cash_point(const WinLossParams& wl) {
    return (wl.l() + 1.0) / (wl.w() + wl.l() + 0.5);
}

double live_take_point(const WinLossParams& wl) {
    return (wl.l() - 0.5) / (wl.w() + wl.l() + 0.5);
}

double take_point(const WinLossParams& wl, double alpha_remote) {
    const double w = wl.w();
    const double l = wl.l();
    const double s = w + l + 0.5;
    const double denom = l + 1.0 - 0.25 * alpha_remote * s / (w - 0.5);
    if (denom <= 0.0) {
        throw volatility_too_large_error("take point undefined: remote volatility too large");
    }
    return (l - 0.5) * (l + 1.0) / (s * denom);
}

double cash_point(const WinLossParams& wl, double alpha_remote) {
    const double w = wl.w();
    const double l = wl.l();
    const double s = w + l + 0.5;
    const double denom = 2.0 * (2.0 * l * w + 2.0 * l - w - 1.0) - alpha_remote * s;
    if (denom <= 0.0) {
        throw volatility_too_large_error("cash point undefined: remote volatility too large");
    }
    return (l + 1.0) / s - alpha_remote * (w - 0.5) / denom;
}

PiecewiseLinearEquity owned_equity_curve(const WinLossParams& wl, double alpha_anchor,
                                         double alpha_remote) {
    const double w = wl.w();
    const double l = wl.l();
    const double s = w + l + 0.5;
    const double cp = cash_point(wl, alpha_remote);

    // Lower segment through (0, -L) and the anchor at the live cash point.
    const double b1 = s - alpha_anchor * s * s / (4.0 * (w - 0.5) * (l + 1.0));
    const AffineSegment seg1{-l, b1};

    const double b2 = (w - seg1.at(cp)) / (1.0 - cp);
    const AffineSegment seg2{w - b2, b2};

    return PiecewiseLinearEquity({0.0, cp, 1.0}, {seg1, seg2});
}

PiecewiseLinearEquity unavailable_equity_curve(const WinLossParams& wl, double alpha_remote) {
    const double w = wl.w();
    const double l = wl.l();
    const double s = w + l + 0.5;
    const double tp = take_point(wl, alpha_remote);

    const double b2 = s - 0.25 * alpha_remote * s * s / ((l - 0.5) * (w + 1.0));
    const AffineSegment seg2{w - b2, b2};

    const double b1 = (seg2.at(tp) + l) / tp;
    const AffineSegment seg1{-l, b1};

    return PiecewiseLinearEquity({0.0, tp, 1.0}, {seg1, seg2});
}

PiecewiseLinearEquity centered_equity_curve(const WinLossParams& wl, double alpha_local,
                                            double alpha_remote) {
    const double w = wl.w();
    const double l = wl.l();
    const double s = w + l + 0.5;
    const double tp_live = live_take_point(wl);
    const double cp_live = live_cash_point(wl);

    const double e_take = -1.0 + alpha_remote * s * (l + 1.0) / (6.0 * (l - 0.5));
    const double e_cash = 1.0 - alpha_local * s * (w + 1.0) / (6.0 * (w - 0.5));

    const double b1 = (e_take + l) / tp_live;
    const AffineSegment seg1{-l, b1};

    const double b2 = (e_cash - e_take) / (cp_live - tp_live);
    const AffineSegment seg2{e_take - b2 * tp_live, b2};

    const double b3 = (w - e_cash) / (1.0 - cp_live);
    const AffineSegment seg3{w - b3, b3};

    return PiecewiseLinearEquity({0.0, tp_live, cp_live, 1.0}, {seg1, seg2, seg3});
}

DecisionPoints decision_points_linear(const WinLossParams& wl, const VolatilityPair& vols) {
    const PlayerSidePoints mine = player_side_points(wl, vols);
    const PlayerSidePoints theirs = player_side_points(wl.mirrored(), vols.mirrored());

    DecisionPoints pts;
    pts.tp = mine.tp;
    pts.cp = mine.cp;
    pts.rd_o = mine.rd_o;
    pts.tg_o = mine.tg_o;
    pts.id_o = mine.id_o;
    pts.tgc_o = mine.tgc_o;

    pts.tg_u = 1.0 - theirs.tg_o;
    pts.rd_u = 1.0 - theirs.rd_o;
    pts.tgc_u = 1.0 - theirs.tgc_o;
    pts.id_u = 1.0 - theirs.id_o;

    pts.clamped = mine.clamped || theirs.clamped;
    return pts;
}

} // namespace jumpcube
