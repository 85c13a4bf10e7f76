#pragma once

#include <cmath>
#include <compare>
#include <string>
#include <string_view>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "quadbound/errors.hpp"

namespace quadbound {

/// Gegenbauer-class weight w(x) = (1 - x^2)^(lambda - 1/2) on [-1, 1], lambda > -1/2.
class WeightSpec {
public:
    [[nodiscard]] static WeightSpec gegenbauer(double lambda) {
        if (!(lambda > -0.5) || !std::isfinite(lambda)) {
            throw ParameterError("Gegenbauer weight requires lambda > -1/2, got " +
                                 std::to_string(lambda));
        }
        return WeightSpec(lambda);
    }
    [[nodiscard]] static WeightSpec chebyshev1() { return WeightSpec(0.0); }
    [[nodiscard]] static WeightSpec legendre() { return WeightSpec(0.5); }
    [[nodiscard]] static WeightSpec chebyshev2() { return WeightSpec(1.0); }

    /// Accepts "chebyshev1", "legendre", "chebyshev2", or "gegenbauer:<lambda>".
    [[nodiscard]] static WeightSpec parse(std::string_view text);

    [[nodiscard]] double lambda() const noexcept { return lambda_; }

    /// Alias name for the three classical cases, "gegenbauer(<lambda>)" otherwise.
    [[nodiscard]] std::string name() const;

    friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
    friend auto operator<=>(const WeightSpec&, const WeightSpec&) = default;

private:
    explicit WeightSpec(double lambda) : lambda_(lambda) {}
    double lambda_;
};

/// ||w_lambda||_1 = sqrt(pi) Gamma(lambda + 1/2) / Gamma(lambda + 1).
/// The three aliases return their exact values (pi, 2, pi/2).
template <class Real>
[[nodiscard]] Real gegenbauer_weight_norm(double lambda) {
    using std::sqrt;
    if (!(lambda > -0.5)) {
        throw ParameterError("gegenbauer_weight_norm requires lambda > -1/2");
    }
    const Real pi = boost::math::constants::pi<Real>();
    if (lambda == 0.0) return pi;
    if (lambda == 0.5) return Real(2);
    if (lambda == 1.0) return pi / 2;
    // Gamma(a) / Gamma(a + 1/2) directly, without cancelling two large lgammas.
    const Real half = Real(1) / 2;
    return sqrt(pi) * boost::math::tgamma_delta_ratio(Real(lambda) + half, half);
}

[[nodiscard]] inline double gegenbauer_weight_norm(double lambda) {
    return gegenbauer_weight_norm<double>(lambda);
}

/// int x^k (1 - x^2)^(lambda - 1/2) dx: zero for odd k, and for even k = 2m the
/// Beta-function ratio m_{2m} = m_{2m-2} (2m - 1) / (2m + 2 lambda).
template <class Real>
[[nodiscard]] Real gegenbauer_moment(double lambda, unsigned k) {
    if (k % 2 == 1) return Real(0);
    Real m = gegenbauer_weight_norm<Real>(lambda);
    const Real lam(lambda);
    for (unsigned i = 1; 2 * i <= k; ++i) {
        m *= Real(2 * i - 1) / (Real(2 * i) + Real(2) * lam);
    }
    return m;
}

/// Pointwise weight value; infinite at x = +-1 when lambda < 1/2.
[[nodiscard]] inline double weight_value(const WeightSpec& w, double x) {
    return std::pow(1.0 - x * x, w.lambda() - 0.5);
}

} // namespace quadbound
