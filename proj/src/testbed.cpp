#include "quadbound/testbed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "quadbound/errors.hpp"
#include "quadbound/expansion.hpp"
#include "quadbound/gauss_rules.hpp"

namespace quadbound {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

const QuadratureRule<double>& panel_kernel() {
    static const QuadratureRule<double> kernel = golub_welsch<double>(WeightSpec::legendre(), 10);
    return kernel;
}

double panel_estimate(const RealFunction& f, double a, double b) {
    const auto& k = panel_kernel();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) s += k.weights[i] * f(mid + half * k.nodes[i]);
    return half * s;
}

double bisect(const RealFunction& f, double a, double b, double whole, double rel_tol, int depth) {
    constexpr double abs_floor = 1e-14;
    constexpr int max_depth = 50;
    const double mid = 0.5 * (a + b);
    const double left = panel_estimate(f, a, mid);
    const double right = panel_estimate(f, mid, b);
    const double both = left + right;
    if (std::abs(both - whole) <= std::max(rel_tol * std::abs(both), abs_floor)) return both;
    if (depth >= max_depth) {
        throw NonConvergence("adaptive_integrate: subdivision depth exceeded near x = " +
                             std::to_string(mid));
    }
    return bisect(f, a, mid, left, rel_tol, depth + 1) + bisect(f, mid, b, right, rel_tol, depth + 1);
}

std::vector<double> interior_cuts(std::span<const double> breakpoints, double lo, double hi) {
    std::vector<double> cuts{lo};
    for (double b : breakpoints) {
        if (b > lo && b < hi) cuts.push_back(b);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

} // namespace

double adaptive_integrate(const RealFunction& f, double a, double b, double rel_tol) {
    if (!(b > a)) {
        if (a == b) return 0.0;
        throw ParameterError("adaptive_integrate: requires a <= b");
    }
    return bisect(f, a, b, panel_estimate(f, a, b), rel_tol, 0);
}

double adaptive_integrate_split(const RealFunction& f, std::span<const double> breakpoints,
                                double rel_tol) {
    const auto cuts = interior_cuts(breakpoints, -1.0, 1.0);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += adaptive_integrate(f, cuts[i], cuts[i + 1], rel_tol);
    }
    return total;
}

double numeric_U(const RealFunction& derivative, std::span<const double> breakpoints,
                 std::span<const Jump> deltas) {
    double total = adaptive_integrate_split([&](double x) { return std::abs(derivative(x)); },
                                            breakpoints);
    for (const auto& d : deltas) total += std::abs(d.magnitude);
    return total;
}

double numeric_V(const RealFunction& derivative, std::span<const double> breakpoints,
                 std::span<const Jump> deltas) {
    // x = cos(theta) maps [-1, 1] onto [0, pi] and absorbs the endpoint weight.
    std::vector<double> thetas;
    for (double b : breakpoints) {
        if (b > -1.0 && b < 1.0) thetas.push_back(std::acos(b));
    }
    const auto cuts = interior_cuts(thetas, 0.0, std::numbers::pi);
    const RealFunction g = [&](double theta) { return std::abs(derivative(std::cos(theta))); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += adaptive_integrate(g, cuts[i], cuts[i + 1]);
    for (const auto& d : deltas) {
        if (std::abs(d.location) >= 1.0) return infinity;
        total += std::abs(d.magnitude) / std::sqrt(1.0 - d.location * d.location);
    }
    return total;
}

namespace {

void require_defined_order(const TestFunction& f, int r, const char* who) {
    if (r < 0) throw ParameterError(std::string(who) + ": order r must be >= 0");
    if (f.max_order && r > *f.max_order) {
        throw ParameterError(std::string(who) + ": " + f.name + " has no bounded-variation derivative of order " +
                             std::to_string(r));
    }
}

} // namespace

double numeric_U(const TestFunction& f, int r) {
    require_defined_order(f, r, "numeric_U");
    const auto deltas = f.jumps(r);
    return numeric_U(f.derivative(r + 1), f.breakpoints, deltas);
}

double numeric_V(const TestFunction& f, int r) {
    require_defined_order(f, r, "numeric_V");
    const auto deltas = f.jumps(r);
    return numeric_V(f.derivative(r + 1), f.breakpoints, deltas);
}

RegularityProfile regularity_profile(const TestFunction& f, int r) {
    if (r < 0) throw ParameterError("regularity_profile: order r must be >= 0");
    if (f.max_order && r > *f.max_order) return {r, std::nullopt, std::nullopt};
    if (f.analytic_profile) {
        if (auto p = f.analytic_profile(r)) return *p;
    }
    return {r, numeric_U(f, r), numeric_V(f, r)};
}

TestFunction corner_family(int j, double t) {
    if (j < 2) throw ParameterError("corner_family: requires j >= 2");
    if (!(std::abs(t) < 1.0)) throw ParameterError("corner_family: requires |t| < 1");

    const double jfact = factorial(j);
    TestFunction f;
    std::ostringstream name;
    name << "corner(j=" << j << ",t=" << t << ")";
    f.name = name.str();
    f.description = "(x - t)^(j-1) |x - t| / j!";
    f.value = [=](double x) { return std::pow(x - t, j - 1) * std::abs(x - t) / jfact; };
    f.value_hp = [=](const HighPrecision& x) {
        const HighPrecision d = x - HighPrecision(t);
        return HighPrecision(pow(d, j - 1) * abs(d) / HighPrecision(jfact));
    };
    // f_j = sign(x - t) (x - t)^j / j!, so on each side of t
    // f_j^(k) = sign(x - t) (x - t)^(j-k) / (j-k)!  for k <= j, and 0 beyond.
    f.derivative = [=](int k) -> RealFunction {
        if (k < 0) throw ParameterError("corner_family: negative derivative order");
        if (k > j) return [](double) { return 0.0; };
        const double kfact = factorial(j - k);
        return [=](double x) {
            const double s = x > t ? 1.0 : (x < t ? -1.0 : 0.0);
            return s * std::pow(x - t, j - k) / kfact;
        };
    };
    f.jumps = [=](int k) -> std::vector<Jump> {
        if (k == j) return {Jump{t, 2.0}};
        if (k > j) throw ParameterError("corner_family: derivative of order > j is not a function");
        return {};
    };
    f.breakpoints = {t};
    f.max_order = j;
    f.analytic_profile = [=](int r) -> std::optional<RegularityProfile> {
        if (r != j) return std::nullopt;
        return RegularityProfile{r, 2.0, 2.0 / std::sqrt(1.0 - t * t)};
    };
    f.coefficient_rule_size = kinked_coefficient_rule_size;
    return f;
}

TestFunction exp_function() {
    TestFunction f;
    f.name = "exp";
    f.description = "e^x";
    f.value = [](double x) { return std::exp(x); };
    f.value_hp = [](const HighPrecision& x) { return HighPrecision(exp(x)); };
    f.derivative = [](int k) -> RealFunction {
        if (k < 0) throw ParameterError("exp_function: negative derivative order");
        return [](double x) { return std::exp(x); };
    };
    f.jumps = [](int) { return std::vector<Jump>{}; };
    f.analytic_profile = [](int r) -> std::optional<RegularityProfile> {
        const double U = std::numbers::e - 1.0 / std::numbers::e;
        const double V = std::numbers::pi * std::cyl_bessel_i(0.0, 1.0);
        return RegularityProfile{r, U, V};
    };
    return f;
}

} // namespace quadbound
