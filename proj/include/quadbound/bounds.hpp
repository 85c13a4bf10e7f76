#pragma once

#include <limits>
#include <optional>

#include "quadbound/chebyshev.hpp"
#include "quadbound/weight.hpp"

namespace quadbound {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// Regularity functionals of f at order r:
///   U_r = int |f^(r+1)|,  V_r = int |f^(r+1)| / sqrt(1 - x^2).
/// nullopt means "unavailable" (hypotheses fail at this r); V_r may be +inf.
struct RegularityProfile {
    int r = 0;
    std::optional<double> U;
    std::optional<double> V;
};

/// One experiment row: every bound for (f, rule, N, r) next to the measured error.
/// Bounds are +inf when the regularity functional they use diverges.
struct BoundReport {
    int N = 0;
    int r = 0;
    WeightSpec weight = WeightSpec::legendre();
    double classical_xiang = infinity;
    double new_t2 = infinity;
    std::optional<double> gegenbauer_t3;
    double actual_error = 0.0;

    /// classical / new; +inf when the classical bound is unavailable.
    [[nodiscard]] double ratio() const { return classical_xiang / new_t2; }
};

/// 2 V_r / (pi prod_{j=0}^{r} (n - j)), n >= r + 1.
[[nodiscard]] double trefethen_coeff_bound(double V, int r, int n);

/// 2 U_r / (pi prod_{j=0}^{r} (n - r + 2j)), n >= r + 1.
[[nodiscard]] double new_coeff_bound(double U, int r, int n);

/// 4 V_r ||w||_1 / (pi r (2N+1)(2N)...(2N-r+2)), 1 <= r <= 2N-1.
[[nodiscard]] double xiang_quadrature_bound(double V, double w_norm, int N, int r);

/// 4 U_r ||w||_1 / (r pi prod_{j=1}^{r} (2N - r + 2j + 1)), 1 <= r <= 2N-1.
[[nodiscard]] double new_quadrature_bound(double U, double w_norm, int N, int r);

/// Same denominator as new_quadrature_bound with prefactor 2 and ||w_lambda||_1.
[[nodiscard]] double gegenbauer_quadrature_bound(double U, double lambda, int N, int r);

/// (2N+1)(2N)...(2N-r+2): r descending factors.
[[nodiscard]] Integer xiang_denominator(int N, int r);
/// prod_{j=1}^{r} (2N - r + 2j + 1).
[[nodiscard]] Integer theta_denominator(int N, int r);

struct Table1Factors {
    double beta = 0.0;
    double theta = 0.0;
    double ratio = 0.0;
};

struct ExactTable1Factors {
    Rational beta;
    Rational theta;
    Rational ratio;
};

/// beta = 1/xiang_denominator, theta = 1/theta_denominator, ratio = beta/theta.
[[nodiscard]] ExactTable1Factors table1_factors_exact(int N, int r);
/// Doubles rounded once from the exact rationals.
[[nodiscard]] Table1Factors table1_factors(int N, int r);

} // namespace quadbound
