#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quadbound {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Absolute slack admitted on |x| <= 1 checks.
inline constexpr double chebyshev_domain_tolerance = 1e-12;

/// T_n(x) = cos(n arccos x).
[[nodiscard]] double eval_T(int n, double x);

/// Scaled derivative sqrt(1 - x^2) T_n'(x) / n^2 = sin(n arccos x) / n.
/// Exactly zero at x = +-1.
[[nodiscard]] double eval_scaled_T(int n, double x);

/// Finite linear combination sum_m c_m * S_m of scaled derivatives S_m, with
/// exact rational coefficients. Zero coefficients are never stored, so an
/// empty map is the zero combination.
class ModeCombination {
public:
    ModeCombination() = default;
    /// The single term coefficient * S_mode.
    ModeCombination(int mode, Rational coefficient);

    void add(int mode, const Rational& coefficient);

    [[nodiscard]] const std::map<int, Rational>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(int mode) const;
    [[nodiscard]] int min_mode() const;
    [[nodiscard]] int max_mode() const;

    /// Numeric value of sum_m c_m * S_m(x).
    [[nodiscard]] double evaluate(double x) const;

    friend bool operator==(const ModeCombination&, const ModeCombination&) = default;

private:
    std::map<int, Rational> terms_;
};

/// One application of S_m -> (-S_{m-1} + S_{m+1}) / (2m) to every term, with like
/// modes merged. If C' is the result then (C')' = C, so starting from S_n and
/// applying this r times gives a combination whose r-th derivative is S_n.
/// Throws ParameterError if any mode is < 2.
[[nodiscard]] ModeCombination rewrite_once(const ModeCombination& c);

/// rewrite_once applied r times to {n: 1}. Requires n >= 2, 1 <= r <= n - 1.
[[nodiscard]] ModeCombination lemma_key_expansion(int n, int r);

/// prod_{j=0}^{r} (n - r + 2j), exactly.
[[nodiscard]] Integer centered_product(int n, int r);

struct Key2Sides {
    Rational lhs;
    Rational rhs;
};

/// lhs = sum over modes m of |c_m| / m for the merged expansion of (n, r),
/// rhs = 1 / prod_{j=0}^{r}(n - r + 2j).
[[nodiscard]] Key2Sides lemma_key2_check(int n, int r);

/// One of the 2^r unmerged terms produced by r rewrites: the path picks "down"
/// or "up" at each step. Its coefficient is sign / beta, beta being the product
/// of 2m over the modes m the path is rewritten from.
struct LadderTerm {
    int mode = 0;
    int sign = 1;
    Integer beta;
};

/// The unmerged ladder for (n, r). Terms are ordered with the first rewrite
/// step most significant and "down" before "up", so terms 2j-1 and 2j differ
/// only in the final step.
struct BetaLadder {
    int n = 0;
    int r = 0;
    std::vector<LadderTerm> terms;

    /// Re-merge by mode; must reproduce lemma_key_expansion(n, r).
    [[nodiscard]] ModeCombination merged() const;
};

[[nodiscard]] BetaLadder beta_ladder(int n, int r);

/// prod_{i=1}^{r} (2n - 2i + 2): the smallest ladder denominator.
[[nodiscard]] Integer ladder_beta_min(int n, int r);
/// prod_{i=1}^{r} (2n + 2i - 2): the largest ladder denominator.
[[nodiscard]] Integer ladder_beta_max(int n, int r);

[[nodiscard]] std::string to_string(const Rational& q);

} // namespace quadbound
