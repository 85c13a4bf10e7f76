#include "quadbound/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quadbound/errors.hpp"

namespace quadbound {

namespace {

double checked_arccos(double x, const char* who) {
    if (!(std::abs(x) <= 1.0 + chebyshev_domain_tolerance)) {
        throw DomainError(std::string(who) + ": x = " + std::to_string(x) + " outside [-1, 1]");
    }
    return std::acos(std::clamp(x, -1.0, 1.0));
}

void check_key_range(int n, int r, const char* who) {
    if (n < 2 || r < 1 || r > n - 1) {
        throw ParameterError(std::string(who) + ": requires n >= 2 and 1 <= r <= n-1, got n=" +
                             std::to_string(n) + ", r=" + std::to_string(r));
    }
}

} // namespace

double eval_T(int n, double x) {
    if (n < 0) throw ParameterError("eval_T: degree must be >= 0");
    return std::cos(n * checked_arccos(x, "eval_T"));
}

double eval_scaled_T(int n, double x) {
    if (n < 1) throw ParameterError("eval_scaled_T: degree must be >= 1");
    const double theta = checked_arccos(x, "eval_scaled_T");
    if (std::abs(x) >= 1.0) return 0.0;
    return std::sin(n * theta) / n;
}

ModeCombination::ModeCombination(int mode, Rational coefficient) {
    add(mode, coefficient);
}

void ModeCombination::add(int mode, const Rational& coefficient) {
    if (mode < 0) throw ParameterError("ModeCombination: negative mode index");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(mode, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational ModeCombination::coefficient(int mode) const {
    auto it = terms_.find(mode);
    return it == terms_.end() ? Rational(0) : it->second;
}

int ModeCombination::min_mode() const {
    if (terms_.empty()) throw ParameterError("ModeCombination: empty combination has no modes");
    return terms_.begin()->first;
}

int ModeCombination::max_mode() const {
    if (terms_.empty()) throw ParameterError("ModeCombination: empty combination has no modes");
    return terms_.rbegin()->first;
}

double ModeCombination::evaluate(double x) const {
    double sum = 0.0;
    for (const auto& [mode, c] : terms_) sum += static_cast<double>(c) * eval_scaled_T(mode, x);
    return sum;
}

ModeCombination rewrite_once(const ModeCombination& c) {
    ModeCombination out;
    for (const auto& [m, coeff] : c.terms()) {
        if (m < 2) {
            throw ParameterError("rewrite_once: mode " + std::to_string(m) +
                                 " cannot be rewritten (needs m >= 2)");
        }
        const Rational step = coeff / (2 * m);
        out.add(m - 1, -step);
        out.add(m + 1, step);
    }
    return out;
}

ModeCombination lemma_key_expansion(int n, int r) {
    check_key_range(n, r, "lemma_key_expansion");
    ModeCombination c(n, Rational(1));
    for (int k = 0; k < r; ++k) c = rewrite_once(c);
    return c;
}

Integer centered_product(int n, int r) {
    Integer p = 1;
    for (int j = 0; j <= r; ++j) p *= (n - r + 2 * j);
    return p;
}

Key2Sides lemma_key2_check(int n, int r) {
    check_key_range(n, r, "lemma_key2_check");
    const auto c = lemma_key_expansion(n, r);
    Rational lhs = 0;
    for (const auto& [m, coeff] : c.terms()) lhs += abs(coeff) / m;
    return {lhs, Rational(1) / centered_product(n, r)};
}

ModeCombination BetaLadder::merged() const {
    ModeCombination c;
    for (const auto& t : terms) c.add(t.mode, Rational(t.sign) / t.beta);
    return c;
}

namespace {

void grow_ladder(int mode, int sign, const Integer& beta, int remaining,
                 std::vector<LadderTerm>& out) {
    if (remaining == 0) {
        out.push_back({mode, sign, beta});
        return;
    }
    const Integer next = beta * (2 * mode);
    grow_ladder(mode - 1, -sign, next, remaining - 1, out);
    grow_ladder(mode + 1, sign, next, remaining - 1, out);
}

} // namespace

BetaLadder beta_ladder(int n, int r) {
    check_key_range(n, r, "beta_ladder");
    BetaLadder ladder{n, r, {}};
    ladder.terms.reserve(std::size_t{1} << r);
    grow_ladder(n, 1, Integer(1), r, ladder.terms);
    return ladder;
}

Integer ladder_beta_min(int n, int r) {
    Integer p = 1;
    for (int i = 1; i <= r; ++i) p *= (2 * n - 2 * i + 2);
    return p;
}

Integer ladder_beta_max(int n, int r) {
    Integer p = 1;
    for (int i = 1; i <= r; ++i) p *= (2 * n + 2 * i - 2);
    return p;
}

std::string to_string(const Rational& q) {
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace quadbound
