#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quadbound/bounds.hpp"
#include "quadbound/precision.hpp"

namespace quadbound {

using RealFunction = std::function<double(double)>;
using HighPrecisionFunction = std::function<HighPrecision(const HighPrecision&)>;

/// A jump f^(k)(x+) - f^(k)(x-) = magnitude at `location`; it shows up as
/// magnitude * delta(x - location) in f^(k+1).
struct Jump {
    double location = 0.0;
    double magnitude = 0.0;
};

/// An integrand with the derivative information the bounds need.
struct TestFunction {
    std::string name;
    std::string description;
    RealFunction value;
    HighPrecisionFunction value_hp;
    /// k-th classical derivative on the smooth pieces between breakpoints.
    std::function<RealFunction(int)> derivative;
    /// Jumps of the k-th derivative.
    std::function<std::vector<Jump>(int)> jumps;
    std::vector<double> breakpoints;
    /// Largest r for which f^(r) is of bounded variation; nullopt = every r.
    std::optional<int> max_order;
    /// Closed-form profile where one is known.
    std::function<std::optional<RegularityProfile>(int)> analytic_profile;
    /// Gauss-Chebyshev size for coefficient computation (0 = default).
    std::size_t coefficient_rule_size = 0;

    [[nodiscard]] double operator()(double x) const { return value(x); }
};

/// f_j(x) = (x - t)^(j-1) |x - t| / j!, j >= 2, |t| < 1. f_j^(j) jumps by 2 at t,
/// so at r = j: U_j = 2 and V_j = 2 / sqrt(1 - t^2).
[[nodiscard]] TestFunction corner_family(int j, double t);

/// e^x; U_r = e - 1/e and V_r = pi I_0(1) for every r.
[[nodiscard]] TestFunction exp_function();

/// Recursive bisection with a 10-point Gauss-Legendre kernel per panel.
/// A panel is accepted once its two halves agree with the whole to
/// max(rel_tol * |estimate|, 1e-14). Throws NonConvergence past depth 50.
[[nodiscard]] double adaptive_integrate(const RealFunction& f, double a, double b,
                                        double rel_tol = 1e-9);

/// As adaptive_integrate over [-1, 1], split at `breakpoints`.
[[nodiscard]] double adaptive_integrate_split(const RealFunction& f,
                                              std::span<const double> breakpoints,
                                              double rel_tol = 1e-9);

/// int |g| over [-1, 1] where g = f^(r+1) on the smooth pieces; `deltas` are
/// the jumps of f^(r), each contributing |magnitude|.
[[nodiscard]] double numeric_U(const RealFunction& derivative,
                               std::span<const double> breakpoints = {},
                               std::span<const Jump> deltas = {});

/// int |g| / sqrt(1 - x^2), integrated as int_0^pi |g(cos theta)| d theta;
/// each delta contributes |magnitude| / sqrt(1 - t^2).
[[nodiscard]] double numeric_V(const RealFunction& derivative,
                               std::span<const double> breakpoints = {},
                               std::span<const Jump> deltas = {});

[[nodiscard]] double numeric_U(const TestFunction& f, int r);
[[nodiscard]] double numeric_V(const TestFunction& f, int r);

/// The closed-form profile where available, otherwise numeric U_r / V_r.
/// Both fields are nullopt when r exceeds f.max_order.
[[nodiscard]] RegularityProfile regularity_profile(const TestFunction& f, int r);

} // namespace quadbound
