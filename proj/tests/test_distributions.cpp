#include "doctest.h"

#include "jumpcube/distributions.hpp"

#include <cmath>
#include <functional>

using namespace jumpcube;

namespace {

// Composite Simpson quadrature, used as the independent check on the
// closed-form F and G.
double simpson(const std::function<double(double)>& f, double a, double b, int n = 4000) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        acc += f(a + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
    }
    return acc * h / 3.0;
}

} // namespace

TEST_CASE("pdf values and symmetry") {
    const JumpDistribution dexp(JumpKind::DoubleExponential, 0.1); // lambda = 10
    CHECK(dexp.pdf(0.0) == doctest::Approx(5.0).epsilon(1e-12));

    const JumpDistribution gauss(JumpKind::Gaussian, 0.1);
    CHECK(gauss.pdf(0.0) == doctest::Approx(3.98942).epsilon(1e-5));

    for (const auto& d : {dexp, gauss}) {
        CHECK(d.pdf(0.3) == doctest::Approx(d.pdf(-0.3)).epsilon(1e-14));
        CHECK(d.pdf(0.01) == doctest::Approx(d.pdf(-0.01)).epsilon(1e-14));
    }
}

TEST_CASE("cdf values") {
    const JumpDistribution dexp(JumpKind::DoubleExponential, 0.1);
    const JumpDistribution gauss(JumpKind::Gaussian, 0.1);

    CHECK(dexp.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(gauss.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));

    CHECK(dexp.cdf(0.1) == doctest::Approx(1.0 - 0.5 * std::exp(-1.0)).epsilon(1e-12));
    CHECK(dexp.cdf(0.1) == doctest::Approx(0.81606).epsilon(1e-5));
    CHECK(gauss.cdf(0.1) == doctest::Approx(0.84134).epsilon(1e-5));

    CHECK(dexp.cdf(-5.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dexp.cdf(5.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial moment values") {
    const JumpDistribution dexp(JumpKind::DoubleExponential, 0.1);
    const JumpDistribution gauss(JumpKind::Gaussian, 0.1);

    CHECK(dexp.partial_moment(0.0) == doctest::Approx(-0.05).epsilon(1e-12));
    CHECK(gauss.partial_moment(0.0) == doctest::Approx(-0.03989).epsilon(1e-4));

    for (const auto& d : {dexp, gauss}) {
        CHECK(std::fabs(d.partial_moment(10.0 * d.scale())) < 1e-3);
        // G is nonpositive and minimized at 0 where it equals -alpha/2
        CHECK(d.partial_moment(0.0) ==
              doctest::Approx(-0.5 * d.jump_volatility()).epsilon(1e-14));
        for (double j : {-0.25, -0.05, 0.05, 0.25}) {
            CHECK(d.partial_moment(j) <= 0.0);
            CHECK(d.partial_moment(j) >= d.partial_moment(0.0));
        }
    }
}

TEST_CASE("jump volatility") {
    const JumpDistribution gauss(JumpKind::Gaussian, 0.1);
    CHECK(gauss.jump_volatility() == doctest::Approx(0.07979).epsilon(1e-4));

    const JumpDistribution dexp(JumpKind::DoubleExponential, 0.1);
    CHECK(dexp.jump_volatility() == doctest::Approx(0.1).epsilon(1e-14));

    CHECK(dexp.jump_volatility() / dexp.std_deviation() == doctest::Approx(0.7071).epsilon(1e-4));
    CHECK(gauss.jump_volatility() / gauss.std_deviation() ==
          doctest::Approx(0.7979).epsilon(1e-4));
}

TEST_CASE("from_volatility") {
    const JumpDistribution dexp = JumpDistribution::from_volatility(JumpKind::DoubleExponential, 0.1);
    CHECK(dexp.scale() == doctest::Approx(0.1).epsilon(1e-14));

    const JumpDistribution gauss = JumpDistribution::from_volatility(JumpKind::Gaussian, 0.07979);
    CHECK(gauss.scale() == doctest::Approx(0.1).epsilon(1e-4));

    CHECK_THROWS_AS(JumpDistribution::from_volatility(JumpKind::Gaussian, 0.0),
                    invalid_parameter_error);
    CHECK_THROWS_AS(JumpDistribution::from_volatility(JumpKind::DoubleExponential, -0.1),
                    invalid_parameter_error);
    CHECK_THROWS_AS(JumpDistribution(JumpKind::Gaussian, 0.0), invalid_parameter_error);
}

TEST_CASE("volatility round trip across kinds and levels") {
    for (JumpKind kind : {JumpKind::Gaussian, JumpKind::DoubleExponential}) {
        for (double alpha = 0.005; alpha <= 0.5; alpha += 0.015) {
            const JumpDistribution d = JumpDistribution::from_volatility(kind, alpha);
            CHECK(d.jump_volatility() == doctest::Approx(alpha).epsilon(1e-12));
        }
    }
}

TEST_CASE("quadrature oracle: E|J|, F, and G match the closed forms") {
    // The double-exponential density has a kink at zero, so integrals are
    // split there to keep Simpson honest.
    auto integrate = [](const std::function<double(double)>& f, double a, double b) {
        if (a < 0.0 && b > 0.0) return simpson(f, a, 0.0, 20000) + simpson(f, 0.0, b, 20000);
        return simpson(f, a, b, 20000);
    };

    for (JumpKind kind : {JumpKind::Gaussian, JumpKind::DoubleExponential}) {
        for (double scale : {0.05, 0.12}) {
            const JumpDistribution d(kind, scale);
            // Wide enough that even the fat double-exponential tail holds
            // less than 1e-12 of the mass.
            const double lim = 40.0 * scale;

            const double abs_moment =
                integrate([&](double j) { return std::fabs(j) * d.pdf(j); }, -lim, lim);
            CHECK(std::fabs(abs_moment - d.jump_volatility()) < 1e-6);

            for (double j = -3.0 * scale; j <= 3.0 * scale; j += scale / 2.0) {
                const double cdf_num = integrate([&](double x) { return d.pdf(x); }, -lim, j);
                CHECK(std::fabs(cdf_num - d.cdf(j)) < 1e-8);

                const double g_num = integrate([&](double x) { return x * d.pdf(x); }, -lim, j);
                CHECK(std::fabs(g_num - d.partial_moment(j)) < 1e-8);
            }
        }
    }
}
