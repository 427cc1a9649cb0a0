#include "jumpcube/piecewise.hpp"

#include <algorithm>
#include <cmath>

namespace jumpcube {

PiecewiseLinearEquity::PiecewiseLinearEquity(std::vector<double> breakpoints,
                                             std::vector<AffineSegment> segments)
    : breakpoints_(std::move(breakpoints)), segments_(std::move(segments)) {
    if (breakpoints_.size() < 2 || segments_.size() != breakpoints_.size() - 1) {
        throw invalid_parameter_error("piecewise curve needs K+1 breakpoints for K segments");
    }
    if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
        throw invalid_parameter_error("piecewise curve must span [0,1] exactly");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] > breakpoints_[i - 1])) {
            throw invalid_parameter_error("piecewise breakpoints must be strictly increasing");
        }
    }
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        const double b = breakpoints_[i];
        if (std::fabs(segments_[i - 1].at(b) - segments_[i].at(b)) > 1e-12) {
            throw invalid_parameter_error("piecewise segments disagree at an interior breakpoint");
        }
    }
}

std::size_t PiecewiseLinearEquity::segment_index(double p) const {
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), p);
    auto idx = static_cast<std::size_t>(std::distance(breakpoints_.begin(), it));
    if (idx == 0) return 0;
    if (idx > segments_.size()) return segments_.size() - 1;
    return idx - 1;
}

double PiecewiseLinearEquity::value(double p) const {
    return segments_[segment_index(p)].at(p);
}

} // namespace jumpcube
