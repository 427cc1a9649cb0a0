#pragma once

#include "jumpcube/errors.hpp"

namespace jumpcube {

enum class JumpKind {
    Gaussian,
    DoubleExponential,
};

/// Symmetric zero-mean jump law for the per-round change in win probability.
///
/// The scale parameter is sigma for the Gaussian and 1/lambda for the
/// double-exponential, so "widen the tails by a factor" means the same thing
/// for both kinds. The quantity that actually drives equity calculations is
/// the jump volatility alpha = E|J|, not the standard deviation.
class JumpDistribution {
public:
    JumpDistribution(JumpKind kind, double scale);

    // Inverse of jump_volatility(): builds the distribution whose E|J| is alpha.
    static JumpDistribution from_volatility(JumpKind kind, double alpha);

    JumpKind kind() const { return kind_; }
    double scale() const { return scale_; }

    double pdf(double j) const;

    // F(J) = P(jump <= J). F(0) = 1/2 by symmetry.
    double cdf(double j) const;

    // G(J) = integral of x f(x) over (-inf, J]. Nonpositive everywhere,
    // minimized at J=0 where G(0) = -alpha/2, and -> 0 in both tails.
    double partial_moment(double j) const;

    // alpha = E|J|
    double jump_volatility() const;

    double std_deviation() const;

private:
    JumpKind kind_;
    double scale_;
};

} // namespace jumpcube
