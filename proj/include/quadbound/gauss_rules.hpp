#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "quadbound/errors.hpp"
#include "quadbound/tridiagonal.hpp"
#include "quadbound/weight.hpp"

namespace quadbound {

/// N-point Gauss rule for a Gegenbauer weight. Nodes ascending in (-1, 1),
/// weights positive, exactly antisymmetric / symmetric about 0.
template <class Real>
struct QuadratureRule {
    WeightSpec weight = WeightSpec::legendre();
    std::vector<Real> nodes;
    std::vector<Real> weights;

    [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

/// Three-term recurrence of the monic orthogonal polynomials,
/// p_{k+1}(x) = (x - alpha_k) p_k(x) - beta_k p_{k-1}(x), with beta_0 = ||w||_1.
template <class Real>
struct RecurrenceCoefficients {
    std::vector<Real> alphas;
    std::vector<Real> betas;
};

/// Size of the ground-truth rule used for "actual error" columns.
inline constexpr std::size_t reference_rule_size = 500;

template <class Real>
[[nodiscard]] RecurrenceCoefficients<Real> recurrence_coefficients(const WeightSpec& weight,
                                                                   std::size_t n) {
    if (n < 1) throw ParameterError("recurrence_coefficients: N must be >= 1");
    RecurrenceCoefficients<Real> rc;
    rc.alphas.assign(n, Real(0));
    rc.betas.resize(n);
    const Real lam(weight.lambda());
    rc.betas[0] = gegenbauer_weight_norm<Real>(weight.lambda());
    // Jacobi closed form with both exponents lambda - 1/2. The k = 1 entry is
    // written in its cancelled form so that lambda = 0 needs no special case.
    if (n > 1) rc.betas[1] = Real(1) / (Real(2) * (Real(1) + lam));
    for (std::size_t k = 2; k < n; ++k) {
        const Real kk(static_cast<unsigned>(k));
        rc.betas[k] = kk * (kk + Real(2) * lam - Real(1)) /
                      (Real(4) * (kk + lam) * (kk + lam - Real(1)));
    }
    return rc;
}

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix, weights are
/// beta_0 times the squared first eigenvector components. Output is sorted
/// ascending and symmetrized (+-pairs averaged) so the rule is exactly symmetric.
template <class Real>
[[nodiscard]] QuadratureRule<Real> golub_welsch(const WeightSpec& weight, std::size_t n) {
    using std::sqrt;
    if (n < 1) throw ParameterError("golub_welsch: N must be >= 1");
    const auto rc = recurrence_coefficients<Real>(weight, n);

    std::vector<Real> offdiag(n - 1);
    for (std::size_t k = 1; k < n; ++k) offdiag[k - 1] = sqrt(rc.betas[k]);
    auto eig = symmetric_tridiagonal_eigen<Real>(rc.alphas, std::move(offdiag));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return eig.values[a] < eig.values[b]; });

    QuadratureRule<Real> rule;
    rule.weight = weight;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& z = eig.first_components[order[i]];
        rule.nodes[i] = eig.values[order[i]];
        rule.weights[i] = rc.betas[0] * z * z;
    }
    for (std::size_t i = 0; i < n / 2; ++i) {
        const std::size_t j = n - 1 - i;
        const Real x = (rule.nodes[j] - rule.nodes[i]) / 2;
        const Real w = (rule.weights[i] + rule.weights[j]) / 2;
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        rule.weights[i] = w;
        rule.weights[j] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = Real(0);
    return rule;
}

/// Closed-form Gauss-Chebyshev (first kind) rule: x_i = cos((2i-1)pi/(2N)), w_i = pi/N.
/// Kept as an independent cross-check of the eigen-solver path.
template <class Real>
[[nodiscard]] QuadratureRule<Real> gauss_chebyshev_closed_form(std::size_t n) {
    using std::cos;
    if (n < 1) throw ParameterError("gauss_chebyshev_closed_form: N must be >= 1");
    const Real pi = boost::math::constants::pi<Real>();
    QuadratureRule<Real> rule;
    rule.weight = WeightSpec::chebyshev1();
    rule.nodes.resize(n);
    rule.weights.assign(n, pi / Real(static_cast<unsigned>(n)));
    for (std::size_t i = 0; i < n; ++i) {
        // ascending: i-th smallest node is cos((2(n-i)-1) pi / 2n)
        const auto k = static_cast<unsigned>(2 * (n - i) - 1);
        rule.nodes[i] = cos(Real(k) * pi / Real(static_cast<unsigned>(2 * n)));
    }
    return rule;
}

/// Q_N[f] = sum_i w_i f(x_i).
template <class Real, class F>
[[nodiscard]] Real integrate(const QuadratureRule<Real>& rule, F&& f) {
    Real sum(0);
    for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

/// The 500-point rule for `weight`, built once per process and precision.
/// Safe to call concurrently.
template <class Real>
[[nodiscard]] std::shared_ptr<const QuadratureRule<Real>> reference_rule(const WeightSpec& weight) {
    static std::mutex mutex;
    static std::map<WeightSpec, std::shared_ptr<const QuadratureRule<Real>>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(weight);
    if (it != cache.end()) return it->second;
    auto rule = std::make_shared<const QuadratureRule<Real>>(
        golub_welsch<Real>(weight, reference_rule_size));
    cache.emplace(weight, rule);
    return rule;
}

/// Ground truth for actual-error columns: the 500-point Gauss rule of the
/// same weight applied to f.
template <class Real, class F>
[[nodiscard]] Real reference_integral(const WeightSpec& weight, F&& f) {
    return integrate(*reference_rule<Real>(weight), std::forward<F>(f));
}

} // namespace quadbound
