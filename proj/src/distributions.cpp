#include "jumpcube/distributions.hpp"

#include <cmath>

namespace jumpcube {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kinvSqrt2Pi = 0.3989422804014327; // 1/sqrt(2*pi)
constexpr double kSqrt2OverPi = 0.7978845608028654; // sqrt(2/pi)

} // namespace

JumpDistribution::JumpDistribution(JumpKind kind, double scale)
    : kind_(kind), scale_(scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw invalid_parameter_error("jump distribution scale must be a positive finite number");
    }
}

JumpDistribution JumpDistribution::from_volatility(JumpKind kind, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw invalid_parameter_error("jump volatility must be a positive finite number");
    }
    switch (kind) {
    case JumpKind::Gaussian:
        // alpha = sigma*sqrt(2/pi)
        return JumpDistribution(kind, alpha / kSqrt2OverPi);
    case JumpKind::DoubleExponential:
        // alpha = 1/lambda = scale
        return JumpDistribution(kind, alpha);
    }
    throw invalid_parameter_error("unknown jump distribution kind");
}

double JumpDistribution::pdf(double j) const {
    switch (kind_) {
    case JumpKind::Gaussian: {
        const double z = j / scale_;
        return kinvSqrt2Pi / scale_ * std::exp(-0.5 * z * z);
    }
    case JumpKind::DoubleExponential: {
        const double lambda = 1.0 / scale_;
        return 0.5 * lambda * std::exp(-lambda * std::fabs(j));
    }
    }
    return 0.0;
}

double JumpDistribution::cdf(double j) const {
    switch (kind_) {
    case JumpKind::Gaussian:
        return 0.5 * std::erfc(-j / (scale_ * kSqrt2));
    case JumpKind::DoubleExponential: {
        const double lambda = 1.0 / scale_;
        if (j > 0.0) {
            return 1.0 - 0.5 * std::exp(-lambda * j);
        }
        return 0.5 * std::exp(lambda * j);
    }
    }
    return 0.0;
}

double JumpDistribution::partial_moment(double j) const {
    switch (kind_) {
    case JumpKind::Gaussian: {
        const double z = j / scale_;
        return -scale_ * kinvSqrt2Pi * std::exp(-0.5 * z * z);
    }
    case JumpKind::DoubleExponential: {
        const double lambda = 1.0 / scale_;
        if (j > 0.0) {
            return -0.5 * (scale_ + j) * std::exp(-lambda * j);
        }
        return -0.5 * (scale_ - j) * std::exp(lambda * j);
    }
    }
    return 0.0;
}

double JumpDistribution::jump_volatility() const {
    switch (kind_) {
    case JumpKind::Gaussian:
        return scale_ * kSqrt2OverPi;
    case JumpKind::DoubleExponential:
        return scale_;
    }
    return 0.0;
}

double JumpDistribution::std_deviation() const {
    switch (kind_) {
    case JumpKind::Gaussian:
        return scale_;
    case JumpKind::DoubleExponential:
        return kSqrt2 * scale_;
    }
    return 0.0;
}

} // namespace jumpcube
