#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>

#include "quadbound/chebyshev.hpp"
#include "quadbound/errors.hpp"
#include "quadbound/expansion.hpp"
#include "quadbound/gauss_rules.hpp"
#include "quadbound/precision.hpp"

using namespace quadbound;

namespace {
const double pi = std::numbers::pi;
}

TEST(Coefficients, AbsoluteValue) {
    // Aliasing error decays like 1/P^2 for a kink, hence the large rule.
    const auto e = chebyshev_coefficients<double>([](double x) { return std::abs(x); }, 40, std::size_t{1} << 20);
    EXPECT_NEAR(e[0], 2 / pi, 1e-11);
    EXPECT_NEAR(e[2], 4 / (3 * pi), 1e-11);
    EXPECT_NEAR(e[4], -4 / (15 * pi), 1e-11);
    for (int k = 1; k <= 20; ++k) {
        const double expected = (k % 2 == 1 ? 4.0 : -4.0) / (pi * (4.0 * k * k - 1));
        EXPECT_NEAR(e[2 * k], expected, 1e-11) << k;
        EXPECT_NEAR(e[2 * k - 1], 0.0, 1e-15);
    }
}

TEST(Coefficients, ExpIsBessel) {
    const auto e = chebyshev_coefficients<double>([](double x) { return std::exp(x); }, 30);
    EXPECT_NEAR(e[0], std::cyl_bessel_i(0.0, 1.0), 1e-15);
    for (int n = 1; n <= 20; ++n) EXPECT_NEAR(e[n], 2 * std::cyl_bessel_i(static_cast<double>(n), 1.0), 1e-15);
}

TEST(Coefficients, SingleModeIsUnitVector) {
    const auto e = chebyshev_coefficients<double>([](double x) { return eval_T(5, x); }, 8);
    for (int n = 0; n <= 8; ++n) EXPECT_NEAR(e[n], n == 5 ? 1.0 : 0.0, 1e-14);
}

TEST(Coefficients, ReconstructionAtDegree40) {
    const auto f = [](double x) { return std::exp(x) * std::sin(3 * x); };
    const auto e = chebyshev_coefficients<double>(f, 40);
    for (int i = 0; i <= 200; ++i) {
        const double x = -1 + i / 100.0;
        EXPECT_NEAR(e.evaluate(x), f(x), 1e-12) << x;
    }
}

TEST(Coefficients, ClenshawMatchesDirectSum) {
    BasicChebyshevExpansion<double> e;
    e.coeffs = {0.5, -1.0, 0.25, 2.0, -0.125};
    for (double x : {-1.0, -0.3, 0.0, 0.8, 1.0}) {
        double direct = 0;
        for (std::size_t n = 0; n < e.coeffs.size(); ++n) direct += e.coeffs[n] * eval_T(static_cast<int>(n), x);
        EXPECT_NEAR(e.evaluate(x), direct, 1e-14);
    }
}

TEST(Coefficients, HighPrecisionTransform) {
    const auto e = chebyshev_coefficients<HighPrecision>([](const HighPrecision& x) { return HighPrecision(exp(x)); },
                                                         20);
    const HighPrecision i5 = 2 * boost::math::cyl_bessel_i(5, HighPrecision(1));
    EXPECT_LT(to_double(HighPrecision(abs(e[5] - i5))), 1e-90);
}

TEST(Coefficients, RuleTooSmall) {
    EXPECT_THROW((void)chebyshev_coefficients<double>([](double x) { return x; }, 10, 5), ParameterError);
}

TEST(TailSums, OddTailAndAbsTail) {
    BasicChebyshevExpansion<double> e;
    e.coeffs = {1, 2, 3, 4, 5, 6, 7};
    EXPECT_DOUBLE_EQ(odd_tail_sum(e, 1), pi * (4 + 6));
    EXPECT_DOUBLE_EQ(odd_tail_sum(e, 2), pi * 6);
    EXPECT_THROW((void)odd_tail_sum(e, 3), ParameterError);
    EXPECT_DOUBLE_EQ(abs_tail_sum(e, 5), 13.0);
    EXPECT_THROW((void)abs_tail_sum(e, 7), ParameterError);
}

TEST(TailSums, AliasingMatchesGaussChebyshevError) {
    const auto f = [](double x) { return std::exp(x); };
    const auto e = chebyshev_coefficients<double>(f, 80);
    const double exact = pi * std::cyl_bessel_i(0.0, 1.0);
    for (std::size_t N = 1; N <= 20; ++N) {
        const double q = integrate(gauss_chebyshev_closed_form<double>(N), f);
        EXPECT_NEAR(exact - q, aliasing_error_sum(e, N), 1e-14) << N;
    }
    EXPECT_THROW((void)aliasing_error_sum(e, 41), ParameterError);
}
