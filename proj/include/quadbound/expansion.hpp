#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "quadbound/errors.hpp"

namespace quadbound {

/// Coefficients a_0..a_M of f(x) ~ sum a_n T_n(x).
template <class Real>
struct BasicChebyshevExpansion {
    std::vector<Real> coeffs;

    [[nodiscard]] std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    [[nodiscard]] const Real& operator[](std::size_t n) const { return coeffs.at(n); }

    /// Clenshaw evaluation of the truncated series.
    [[nodiscard]] Real evaluate(const Real& x) const {
        Real b1(0);
        Real b2(0);
        for (std::size_t k = coeffs.size(); k-- > 1;) {
            const Real b0 = Real(2) * x * b1 - b2 + coeffs[k];
            b2 = b1;
            b1 = b0;
        }
        return coeffs.empty() ? Real(0) : Real(x * b1 - b2 + coeffs[0]);
    }
};

using ChebyshevExpansion = BasicChebyshevExpansion<double>;

/// Coefficient rule size used for integrands with an interior kink.
inline constexpr std::size_t kinked_coefficient_rule_size = 4096;

/// Default quadrature size for degree M: M + max(64, M).
[[nodiscard]] constexpr std::size_t default_coefficient_rule_size(std::size_t m) {
    return m + std::max<std::size_t>(64, m);
}

/// a_n = (2/pi) int f T_n / sqrt(1-x^2) (a_0 with 1/pi), evaluated with a
/// P-point Gauss-Chebyshev rule. Every cos(n theta_k) is read from one table of
/// cos(j pi / 2P), j < 4P, so the transform has no accumulated angle error.
/// rule_size = 0 selects default_coefficient_rule_size(M).
template <class Real, class F>
[[nodiscard]] BasicChebyshevExpansion<Real> chebyshev_coefficients(F&& f, std::size_t m,
                                                                   std::size_t rule_size = 0) {
    using std::cos;
    const std::size_t p = rule_size == 0 ? default_coefficient_rule_size(m) : rule_size;
    if (p < m + 1) {
        throw ParameterError("chebyshev_coefficients: rule size must exceed the truncation degree");
    }
    const std::size_t period = 4 * p;
    const Real pi = boost::math::constants::pi<Real>();
    const Real step = pi / Real(static_cast<unsigned long>(2 * p));
    std::vector<Real> table(period);
    for (std::size_t j = 0; j < period; ++j) table[j] = cos(Real(static_cast<unsigned long>(j)) * step);

    std::vector<Real> values(p);
    for (std::size_t k = 0; k < p; ++k) values[k] = f(table[2 * k + 1]);

    BasicChebyshevExpansion<Real> out;
    out.coeffs.resize(m + 1);
    const Real scale = Real(2) / Real(static_cast<unsigned long>(p));
    for (std::size_t n = 0; n <= m; ++n) {
        Real sum(0);
        std::size_t idx = n % period;  // n * (2k + 1) mod 4P, advanced by 2n each step
        const std::size_t stride = (2 * n) % period;
        for (std::size_t k = 0; k < p; ++k) {
            sum += values[k] * table[idx];
            idx += stride;
            if (idx >= period) idx -= period;
        }
        out.coeffs[n] = n == 0 ? Real(sum / Real(static_cast<unsigned long>(p))) : Real(sum * scale);
    }
    return out;
}

/// pi * sum_{k=N}^{floor((M-1)/2)} a_{2k+1}: the odd-index tail, truncated at M.
template <class Real>
[[nodiscard]] Real odd_tail_sum(const BasicChebyshevExpansion<Real>& e, std::size_t n) {
    const std::size_t m = e.degree();
    if (2 * n + 1 > m) throw ParameterError("odd_tail_sum: requires 2N+1 <= M");
    Real sum(0);
    for (std::size_t k = n; 2 * k + 1 <= m; ++k) sum += e.coeffs[2 * k + 1];
    return boost::math::constants::pi<Real>() * sum;
}

/// sum_{n=from}^{M} |a_n|.
template <class Real>
[[nodiscard]] Real abs_tail_sum(const BasicChebyshevExpansion<Real>& e, std::size_t from) {
    using std::abs;
    if (from > e.degree()) throw ParameterError("abs_tail_sum: start index exceeds M");
    Real sum(0);
    for (std::size_t k = from; k < e.coeffs.size(); ++k) sum += abs(e.coeffs[k]);
    return sum;
}

/// Exact Gauss-Chebyshev error from aliasing, truncated at M:
/// I[f] - Q_N[f] = -pi * sum_{k>=1} (-1)^k a_{2kN}, because the N-point rule
/// maps T_{2kN} to pi (-1)^k and every other positive mode to zero.
template <class Real>
[[nodiscard]] Real aliasing_error_sum(const BasicChebyshevExpansion<Real>& e, std::size_t n) {
    if (n < 1 || 2 * n > e.degree()) throw ParameterError("aliasing_error_sum: requires 1 <= 2N <= M");
    Real sum(0);
    for (std::size_t k = 1; 2 * k * n <= e.degree(); ++k) {
        const Real& a = e.coeffs[2 * k * n];
        sum += (k % 2 == 0) ? a : Real(-a);
    }
    return -boost::math::constants::pi<Real>() * sum;
}

} // namespace quadbound
