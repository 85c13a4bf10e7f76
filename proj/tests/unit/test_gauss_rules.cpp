#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "quadbound/errors.hpp"
#include "quadbound/gauss_rules.hpp"
#include "quadbound/precision.hpp"
#include "quadbound/tridiagonal.hpp"

using namespace quadbound;

TEST(Tridiagonal, DiscreteLaplacianSpectrum) {
    const int n = 12;
    const auto eig = symmetric_tridiagonal_eigen<double>(std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0));
    auto values = eig.values;
    std::sort(values.begin(), values.end());
    for (int k = 1; k <= n; ++k) {
        EXPECT_NEAR(values[k - 1], 2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1)), 1e-13);
    }
    // The first components of an orthonormal basis have unit norm.
    double s = 0;
    for (double z : eig.first_components) s += z * z;
    EXPECT_NEAR(s, 1.0, 1e-13);
}

TEST(Recurrence, LegendreCoefficients) {
    const auto rc = recurrence_coefficients<double>(WeightSpec::legendre(), 6);
    EXPECT_DOUBLE_EQ(rc.betas[0], 2.0);
    for (int k = 1; k < 6; ++k) {
        EXPECT_NEAR(rc.betas[k], k * k / (4.0 * k * k - 1.0), 1e-16);
        EXPECT_EQ(rc.alphas[k], 0.0);
    }
}

TEST(Recurrence, ChebyshevFirstKind) {
    const auto rc = recurrence_coefficients<double>(WeightSpec::chebyshev1(), 5);
    EXPECT_DOUBLE_EQ(rc.betas[0], std::numbers::pi);
    EXPECT_DOUBLE_EQ(rc.betas[1], 0.5);
    for (int k = 2; k < 5; ++k) EXPECT_DOUBLE_EQ(rc.betas[k], 0.25);
}

TEST(GolubWelsch, LegendreAgainstNewtonOracle) {
    for (int n = 1; n <= 40; ++n) {
        const auto rule = golub_welsch<double>(WeightSpec::legendre(), n);
        const auto [x, w] = oracle::legendre_rule(n);
        for (int i = 0; i < n; ++i) {
            EXPECT_NEAR(rule.nodes[i], static_cast<double>(x[i]), 2e-15) << n << " " << i;
            EXPECT_NEAR(rule.weights[i], static_cast<double>(w[i]), 2e-15) << n << " " << i;
        }
    }
}

TEST(GolubWelsch, ChebyshevClosedForms) {
    for (int n = 1; n <= 30; ++n) {
        const auto gw = golub_welsch<double>(WeightSpec::chebyshev1(), n);
        const auto cf = gauss_chebyshev_closed_form<double>(n);
        for (int i = 0; i < n; ++i) {
            EXPECT_NEAR(gw.nodes[i], cf.nodes[i], 1e-13);
            EXPECT_NEAR(gw.weights[i], std::numbers::pi / n, 1e-13);
        }
        const auto u = golub_welsch<double>(WeightSpec::chebyshev2(), n);
        for (int i = 0; i < n; ++i) {
            const double theta = (n - i) * std::numbers::pi / (n + 1);
            EXPECT_NEAR(u.nodes[i], std::cos(theta), 1e-13);
            EXPECT_NEAR(u.weights[i], std::numbers::pi / (n + 1) * std::pow(std::sin(theta), 2), 1e-13);
        }
    }
}

TEST(GolubWelsch, PolynomialExactness) {
    for (double lambda : {-0.4, 0.0, 0.5, 1.0, 2.5, 7.0}) {
        const auto w = WeightSpec::gegenbauer(lambda);
        for (int n = 1; n <= 20; ++n) {
            const auto rule = golub_welsch<double>(w, n);
            for (int k = 0; k <= 2 * n - 1; ++k) {
                const double exact = oracle::gegenbauer_moment(lambda, k);
                const double q = integrate(rule, [k](double x) { return std::pow(x, k); });
                const double scale = exact != 0.0 ? std::abs(exact) : oracle::gegenbauer_moment(lambda, 0);
                EXPECT_LE(std::abs(q - exact) / scale, 1e-11) << lambda << " N=" << n << " k=" << k;
            }
        }
    }
}

TEST(GolubWelsch, StructuralProperties) {
    for (double lambda : {0.0, 0.5, 1.0, 2.5}) {
        const auto w = WeightSpec::gegenbauer(lambda);
        for (int n = 1; n <= 25; ++n) {
            const auto a = golub_welsch<double>(w, n);
            const auto b = golub_welsch<double>(w, n + 1);
            double sum = 0;
            for (int i = 0; i < n; ++i) {
                EXPECT_GT(a.weights[i], 0.0);
                EXPECT_EQ(a.nodes[i], -a.nodes[n - 1 - i]);
                EXPECT_EQ(a.weights[i], a.weights[n - 1 - i]);
                if (i + 1 < n) EXPECT_LT(a.nodes[i], a.nodes[i + 1]);
                // Nodes of consecutive sizes interlace.
                EXPECT_LT(b.nodes[i], a.nodes[i]);
                EXPECT_LT(a.nodes[i], b.nodes[i + 1]);
                sum += a.weights[i];
            }
            EXPECT_NEAR(sum, gegenbauer_weight_norm(lambda), 1e-13);
        }
    }
}

TEST(GolubWelsch, SingleNode) {
    const auto rule = golub_welsch<double>(WeightSpec::gegenbauer(2.5), 1);
    ASSERT_EQ(rule.size(), 1u);
    EXPECT_EQ(rule.nodes[0], 0.0);
    EXPECT_NEAR(rule.weights[0], gegenbauer_weight_norm(2.5), 1e-15);
    EXPECT_THROW((void)golub_welsch<double>(WeightSpec::legendre(), 0), ParameterError);
}

TEST(GolubWelsch, HighPrecisionAgreesWithDouble) {
    const auto hp = golub_welsch<HighPrecision>(WeightSpec::legendre(), 25);
    const auto d = golub_welsch<double>(WeightSpec::legendre(), 25);
    for (int i = 0; i < 25; ++i) {
        EXPECT_NEAR(to_double(hp.nodes[i]), d.nodes[i], 1e-15);
        EXPECT_NEAR(to_double(hp.weights[i]), d.weights[i], 1e-15);
    }
    // Degree 49 exactness in 100 digits.
    const HighPrecision q = integrate(hp, [](const HighPrecision& x) { return HighPrecision(pow(x, 48)); });
    EXPECT_LT(to_double(HighPrecision(abs(q - HighPrecision(2) / 49))), 1e-90);
}

TEST(ReferenceRule, CachedPerWeight) {
    const auto a = reference_rule<double>(WeightSpec::chebyshev1());
    const auto b = reference_rule<double>(WeightSpec::chebyshev1());
    EXPECT_EQ(a.get(), b.get());
    EXPECT_EQ(a->size(), reference_rule_size);
    const double exact = std::numbers::pi * std::cyl_bessel_i(0.0, 1.0);
    EXPECT_NEAR(reference_integral<double>(WeightSpec::chebyshev1(), [](double x) { return std::exp(x); }), exact,
                1e-13);
}

TEST(WeightSpec, InvalidLambda) {
    EXPECT_THROW((void)WeightSpec::gegenbauer(-0.5), ParameterError);
    EXPECT_THROW((void)WeightSpec::gegenbauer(-1.0), ParameterError);
    EXPECT_THROW((void)WeightSpec::gegenbauer(std::nan("")), ParameterError);
}
