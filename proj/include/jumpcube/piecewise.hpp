#pragma once

#include "jumpcube/errors.hpp"

#include <cstddef>
#include <vector>

namespace jumpcube {

struct AffineSegment {
    double intercept = 0.0;
    double slope = 0.0;

    double at(double p) const { return intercept + slope * p; }
};

/// Piecewise-linear equity curve on [0,1]: breakpoints 0 = b0 < b1 < ... < bK = 1
/// and one affine segment per interval. Adjacent segments must agree at the
/// interior breakpoints to 1e-12.
class PiecewiseLinearEquity {
public:
    PiecewiseLinearEquity(std::vector<double> breakpoints, std::vector<AffineSegment> segments);

    double value(double p) const;
    std::size_t segment_index(double p) const;

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const AffineSegment& segment(std::size_t i) const { return segments_[i]; }
    std::size_t segment_count() const { return segments_.size(); }

private:
    std::vector<double> breakpoints_;
    std::vector<AffineSegment> segments_;
};

} // namespace jumpcube
