#include "quadbound/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "quadbound/errors.hpp"

namespace quadbound {

namespace {

void require_nonnegative(double value, const char* what) {
    if (!(value >= 0.0)) throw ParameterError(std::string(what) + " must be >= 0");
}

void require_quadrature_range(int N, int r, const char* who) {
    if (N < 1 || r < 1 || r > 2 * N - 1) {
        throw ParameterError(std::string(who) + ": requires N >= 1 and 1 <= r <= 2N-1, got N=" +
                             std::to_string(N) + ", r=" + std::to_string(r));
    }
}

// Pairwise (tree) product keeps the partial products balanced.
double pairwise_product(std::vector<double> f) {
    if (f.empty()) return 1.0;
    while (f.size() > 1) {
        std::vector<double> next;
        next.reserve((f.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < f.size(); i += 2) next.push_back(f[i] * f[i + 1]);
        if (f.size() % 2 == 1) next.push_back(f.back());
        f = std::move(next);
    }
    return f.front();
}

double descending_product(int top, int count) {
    std::vector<double> f;
    for (int i = 0; i < count; ++i) f.push_back(static_cast<double>(top - i));
    return pairwise_product(std::move(f));
}

double theta_product(int N, int r) {
    std::vector<double> f;
    for (int j = 1; j <= r; ++j) f.push_back(static_cast<double>(2 * N - r + 2 * j + 1));
    return pairwise_product(std::move(f));
}

} // namespace

double trefethen_coeff_bound(double V, int r, int n) {
    if (r < 0 || n < r + 1) throw ParameterError("trefethen_coeff_bound: requires n >= r+1 >= 1");
    require_nonnegative(V, "V_r");
    if (V == 0.0) return 0.0;
    return 2.0 * V / (std::numbers::pi * descending_product(n, r + 1));
}

double new_coeff_bound(double U, int r, int n) {
    if (r < 0 || n < r + 1) throw ParameterError("new_coeff_bound: requires n >= r+1 >= 1");
    require_nonnegative(U, "U_r");
    if (U == 0.0) return 0.0;
    std::vector<double> f;
    for (int j = 0; j <= r; ++j) f.push_back(static_cast<double>(n - r + 2 * j));
    return 2.0 * U / (std::numbers::pi * pairwise_product(std::move(f)));
}

double xiang_quadrature_bound(double V, double w_norm, int N, int r) {
    require_quadrature_range(N, r, "xiang_quadrature_bound");
    require_nonnegative(V, "V_r");
    if (!(w_norm > 0.0)) throw ParameterError("xiang_quadrature_bound: ||w||_1 must be > 0");
    if (std::isinf(V)) return infinity;
    if (V == 0.0) return 0.0;
    return 4.0 * V * w_norm / (std::numbers::pi * r * descending_product(2 * N + 1, r));
}

double new_quadrature_bound(double U, double w_norm, int N, int r) {
    require_quadrature_range(N, r, "new_quadrature_bound");
    require_nonnegative(U, "U_r");
    if (!(w_norm > 0.0)) throw ParameterError("new_quadrature_bound: ||w||_1 must be > 0");
    if (std::isinf(U)) return infinity;
    if (U == 0.0) return 0.0;
    return 4.0 * U * w_norm / (r * std::numbers::pi * theta_product(N, r));
}

double gegenbauer_quadrature_bound(double U, double lambda, int N, int r) {
    if (!(lambda > -0.5)) throw ParameterError("gegenbauer_quadrature_bound: requires lambda > -1/2");
    require_quadrature_range(N, r, "gegenbauer_quadrature_bound");
    require_nonnegative(U, "U_r");
    if (std::isinf(U)) return infinity;
    if (U == 0.0) return 0.0;
    return 2.0 * U * gegenbauer_weight_norm(lambda) / (r * std::numbers::pi * theta_product(N, r));
}

Integer xiang_denominator(int N, int r) {
    require_quadrature_range(N, r, "xiang_denominator");
    Integer p = 1;
    for (int i = 0; i < r; ++i) p *= (2 * N + 1 - i);
    return p;
}

Integer theta_denominator(int N, int r) {
    require_quadrature_range(N, r, "theta_denominator");
    Integer p = 1;
    for (int j = 1; j <= r; ++j) p *= (2 * N - r + 2 * j + 1);
    return p;
}

ExactTable1Factors table1_factors_exact(int N, int r) {
    const Integer xd = xiang_denominator(N, r);
    const Integer td = theta_denominator(N, r);
    return {Rational(1) / xd, Rational(1) / td, Rational(td) / xd};
}

Table1Factors table1_factors(int N, int r) {
    const auto exact = table1_factors_exact(N, r);
    return {static_cast<double>(exact.beta), static_cast<double>(exact.theta),
            static_cast<double>(exact.ratio)};
}

} // namespace quadbound
