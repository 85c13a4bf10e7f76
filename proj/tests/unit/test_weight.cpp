#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "quadbound/errors.hpp"
#include "quadbound/precision.hpp"
#include "quadbound/weight.hpp"

using namespace quadbound;

TEST(WeightNorm, AliasesExact) {
    EXPECT_EQ(gegenbauer_weight_norm(0.0), std::numbers::pi);
    EXPECT_EQ(gegenbauer_weight_norm(0.5), 2.0);
    EXPECT_EQ(gegenbauer_weight_norm(1.0), std::numbers::pi / 2);
}

TEST(WeightNorm, AgreesWithTanhSinh) {
    for (double lambda : {-0.4, 0.0, 0.25, 0.5, 1.0, 2.5, 7.0, 40.0}) {
        EXPECT_NEAR(gegenbauer_weight_norm(lambda), oracle::weight_norm_numeric(lambda),
                    1e-10 * oracle::weight_norm_numeric(lambda))
            << lambda;
    }
}

TEST(WeightNorm, LargeLambdaUsesLogGamma) {
    // sqrt(pi) Gamma(l + 1/2) / Gamma(l + 1) ~ sqrt(pi / l) (1 - 1/(8l)).
    const double l = 1e6;
    EXPECT_NEAR(gegenbauer_weight_norm(l), std::sqrt(std::numbers::pi / l) * (1 - 1 / (8 * l)), 1e-15);
}

TEST(WeightNorm, HighPrecisionMatches) {
    const HighPrecision n = gegenbauer_weight_norm<HighPrecision>(2.5);
    EXPECT_NEAR(to_double(n), gegenbauer_weight_norm(2.5), 1e-15);
}

TEST(Moments, BetaFunction) {
    for (double lambda : {-0.4, 0.0, 0.5, 2.5}) {
        for (unsigned k = 0; k <= 30; ++k) {
            const double exact = oracle::gegenbauer_moment(lambda, static_cast<int>(k));
            EXPECT_NEAR(gegenbauer_moment<double>(lambda, k), exact, 1e-14 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST(WeightSpec, ParseAndName) {
    EXPECT_EQ(WeightSpec::parse("legendre"), WeightSpec::legendre());
    EXPECT_EQ(WeightSpec::parse("chebyshev1").lambda(), 0.0);
    EXPECT_EQ(WeightSpec::parse("chebyshev2").lambda(), 1.0);
    EXPECT_EQ(WeightSpec::parse("gegenbauer:2.5").lambda(), 2.5);
    EXPECT_EQ(WeightSpec::parse("gegenbauer:0.5"), WeightSpec::legendre());
    EXPECT_EQ(WeightSpec::legendre().name(), "legendre");
    EXPECT_EQ(WeightSpec::gegenbauer(2.5).name(), "gegenbauer(2.5)");
    EXPECT_THROW((void)WeightSpec::parse("hermite"), ParameterError);
    EXPECT_THROW((void)WeightSpec::parse("gegenbauer:-0.7"), ParameterError);
    EXPECT_THROW((void)WeightSpec::parse("gegenbauer:abc"), ParameterError);
}

TEST(WeightValue, Pointwise) {
    EXPECT_DOUBLE_EQ(weight_value(WeightSpec::legendre(), 0.3), 1.0);
    EXPECT_NEAR(weight_value(WeightSpec::chebyshev1(), 0.6), 1.25, 1e-15);
}
