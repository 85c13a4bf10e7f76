#include "quadbound/experiments.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <future>
#include <sstream>

#include "quadbound/chebyshev.hpp"
#include "quadbound/errors.hpp"
#include "quadbound/expansion.hpp"
#include "quadbound/gauss_rules.hpp"
#include "quadbound/precision.hpp"

namespace quadbound {

double actual_error(const TestFunction& f, const WeightSpec& weight, int N) {
    if (N < 1) throw ParameterError("actual_error: requires N >= 1");
    if (!f.value_hp) throw ParameterError("actual_error: " + f.name + " has no high-precision evaluator");
    const auto rule = golub_welsch<HighPrecision>(weight, static_cast<std::size_t>(N));
    const HighPrecision exact = reference_integral<HighPrecision>(weight, f.value_hp);
    const HighPrecision approx = integrate(rule, f.value_hp);
    return to_double(HighPrecision(abs(exact - approx)));
}

BoundReport bound_row(const TestFunction& f, const WeightSpec& weight, int N, int r) {
    const auto profile = regularity_profile(f, r);
    if (!profile.U) {
        throw ParameterError("bound_row: " + f.name + " has no bounded-variation derivative of order " +
                             std::to_string(r));
    }
    const double w_norm = gegenbauer_weight_norm(weight.lambda());
    BoundReport row;
    row.N = N;
    row.r = r;
    row.weight = weight;
    row.classical_xiang = profile.V ? xiang_quadrature_bound(*profile.V, w_norm, N, r) : infinity;
    row.new_t2 = new_quadrature_bound(*profile.U, w_norm, N, r);
    row.gegenbauer_t3 = gegenbauer_quadrature_bound(*profile.U, weight.lambda(), N, r);
    row.actual_error = actual_error(f, weight, N);
    return row;
}

std::vector<BoundReport> bound_table(const TestFunction& f, const WeightSpec& weight, int r,
                                     std::span<const int> sizes) {
    // Build the shared reference rule once before fanning out.
    (void)reference_rule<HighPrecision>(weight);
    std::vector<std::future<BoundReport>> pending;
    pending.reserve(sizes.size());
    for (int N : sizes) {
        pending.push_back(std::async(std::launch::async, [&f, &weight, N, r] { return bound_row(f, weight, N, r); }));
    }
    std::vector<BoundReport> rows;
    rows.reserve(sizes.size());
    for (auto& p : pending) rows.push_back(p.get());
    return rows;
}

std::vector<std::pair<int, int>> default_table1_pairs() {
    return {{10, 5}, {20, 10}, {30, 15}, {10, 9}, {20, 19}, {30, 29}};
}

std::vector<Table1Row> table1_rows(std::span<const std::pair<int, int>> pairs) {
    std::vector<Table1Row> rows;
    rows.reserve(pairs.size());
    for (const auto& [N, r] : pairs) {
        rows.push_back({N, r, table1_factors(N, r), static_cast<double>(r) / (N - 1)});
    }
    return rows;
}

std::span<const PublishedTable1Row> published_table1() {
    static constexpr std::array<PublishedTable1Row, 6> rows{{
        {10, 5, 4.10e-7, 2.02e-7, 2.0},
        {20, 10, 2.88e-12, 1.14e-12, 2.5},
        {30, 15, 5.22e-20, 2.03e-20, 2.6},
        {10, 9, 9.38e-12, 1.08e-12, 8.7},
        {20, 19, 1.12e-25, 1.32e-28, 848.5},
        {30, 29, 1.23e-39, 4.96e-46, 2.48e6},
    }};
    return rows;
}

std::span<const PublishedBoundRow> published_example1() {
    static constexpr std::array<PublishedBoundRow, 4> rows{{
        {5, "1.24e-2", "6.78e-4", "3.21e-5", "18.3"},
        {10, "5.67e-4", "1.45e-5", "2.14e-7", "39.1"},
        {15, "7.89e-6", "9.22e-8", "4.57e-10", "85.6"},
        {20, "1.56e-7", "1.03e-9", "1.33e-12", "151.5"},
    }};
    return rows;
}

std::span<const PublishedBoundRow> published_example2() {
    static constexpr std::array<PublishedBoundRow, 3> rows{{
        {5, "3.41e-8", "8.72e-9", "2.14e-10", nullptr},
        {10, "4.52e-16", "6.31e-17", "<1e-18", nullptr},
        {15, "<1e-20", "<1e-21", "<1e-22", nullptr},
    }};
    return rows;
}

void validate(const VerifyOptions& options) {
    if (options.max_n < 2) throw ParameterError("verify: max_n must be >= 2");
    if (options.max_r < 1) throw ParameterError("verify: max_r must be >= 1");
    if (options.max_r > options.max_n - 1) {
        throw ParameterError("verify: max_r must not exceed max_n - 1 (got max_r=" + std::to_string(options.max_r) +
                             ", max_n=" + std::to_string(options.max_n) + ")");
    }
    if (options.max_rule_size < 1) throw ParameterError("verify: max_rule_size must be >= 1");
}

namespace {

Rational weighted_abs_sum(const ModeCombination& c) {
    Rational sum = 0;
    for (const auto& [mode, coeff] : c.terms()) sum += abs(coeff) / mode;
    return sum;
}

double relative_gap(const Rational& value, const Rational& target) {
    if (value == target) return 0.0;
    if (target == 0) return infinity;
    return static_cast<double>(abs(value - target) / abs(target));
}

bool is_fault_case(const VerifyOptions& o, int n, int r) {
    return o.inject_fault && n == o.max_n && r == o.max_r;
}

BetaLadder ladder_for(const VerifyOptions& o, int n, int r) {
    auto ladder = beta_ladder(n, r);
    if (is_fault_case(o, n, r)) ladder.terms.front().beta += 2;
    return ladder;
}

std::string first_failure_note(const std::string& current, const std::string& note) {
    return current.empty() ? note : current;
}

} // namespace

SuiteResult verify_lemma_key2(const VerifyOptions& options) {
    validate(options);
    SuiteResult out{"rewrite_weighted_sum", true, 0.0, {}};
    int cases = 0;
    for (int n = 2; n <= options.max_n; ++n) {
        for (int r = 1; r <= std::min(options.max_r, n - 1); ++r) {
            ++cases;
            Rational lhs;
            const Rational rhs = Rational(1) / centered_product(n, r);
            if (is_fault_case(options, n, r)) {
                lhs = weighted_abs_sum(ladder_for(options, n, r).merged());
            } else {
                lhs = lemma_key2_check(n, r).lhs;
            }
            const double gap = relative_gap(lhs, rhs);
            out.worst_margin = std::max(out.worst_margin, gap);
            if (lhs != rhs) {
                out.passed = false;
                out.detail = first_failure_note(out.detail, "mismatch at n=" + std::to_string(n) +
                                                                ", r=" + std::to_string(r) + ": " +
                                                                to_string(lhs) + " vs " + to_string(rhs));
            }
        }
    }
    if (out.passed) out.detail = std::to_string(cases) + " cases exact";
    return out;
}

SuiteResult verify_lemma_key_structure(const VerifyOptions& options) {
    validate(options);
    SuiteResult out{"rewrite_ladder_structure", true, 0.0, {}};
    int cases = 0;
    auto fail = [&](int n, int r, const std::string& what, double gap) {
        out.passed = false;
        out.worst_margin = std::max(out.worst_margin, gap);
        out.detail = first_failure_note(out.detail, what + " at n=" + std::to_string(n) + ", r=" + std::to_string(r));
    };
    for (int n = 2; n <= options.max_n; ++n) {
        for (int r = 1; r <= std::min(options.max_r, n - 1); ++r) {
            ++cases;
            const auto expansion = lemma_key_expansion(n, r);
            if (expansion.min_mode() != n - r || expansion.max_mode() != n + r) {
                fail(n, r, "support endpoints", 1.0);
            }
            for (const auto& [mode, coeff] : expansion.terms()) {
                if ((mode - (n - r)) % 2 != 0) fail(n, r, "mode of wrong parity", 1.0);
            }

            const auto ladder = ladder_for(options, n, r);
            if (ladder.terms.size() != (std::size_t{1} << r)) fail(n, r, "ladder length", 1.0);
            const Integer lo = ladder_beta_min(n, r);
            const Integer hi = ladder_beta_max(n, r);
            if (ladder.terms.front().beta != lo) {
                fail(n, r, "smallest denominator", relative_gap(Rational(ladder.terms.front().beta), Rational(lo)));
            }
            if (ladder.terms.back().beta != hi) {
                fail(n, r, "largest denominator", relative_gap(Rational(ladder.terms.back().beta), Rational(hi)));
            }
            for (std::size_t i = 0; i < ladder.terms.size(); ++i) {
                const auto& term = ladder.terms[i];
                if (term.beta < lo || term.beta > hi) fail(n, r, "denominator outside extremes", 1.0);
                if (i % 2 == 1 && term.beta != ladder.terms[i - 1].beta) {
                    fail(n, r, "unequal denominator pair",
                         relative_gap(Rational(term.beta), Rational(ladder.terms[i - 1].beta)));
                }
                const int downs = r - std::popcount(static_cast<unsigned>(i));
                if (term.sign != (downs % 2 == 0 ? 1 : -1)) fail(n, r, "sign", 1.0);
            }
            if (!(ladder.merged() == expansion)) fail(n, r, "merged ladder differs from expansion", 1.0);
        }
    }
    if (out.passed) out.detail = std::to_string(cases) + " cases";
    return out;
}

SuiteResult verify_coefficient_envelope() {
    constexpr std::size_t top = 200;
    constexpr double slack = 1e-6;
    SuiteResult out{"coefficient_envelope", true, 0.0, {}};
    std::ostringstream worst;
    auto check = [&](const TestFunction& f, int r) {
        const auto profile = regularity_profile(f, r);
        const auto e = chebyshev_coefficients<HighPrecision>(f.value_hp, top, f.coefficient_rule_size);
        for (std::size_t n = static_cast<std::size_t>(r) + 1; n <= top; ++n) {
            const double bound = new_coeff_bound(*profile.U, r, static_cast<int>(n));
            const double a = to_double(HighPrecision(abs(e.coeffs[n])));
            const double ratio = a / bound;
            if (ratio > out.worst_margin) {
                out.worst_margin = ratio;
                worst.str("");
                worst << f.name << " r=" << r << " n=" << n;
            }
            if (ratio > 1.0 + slack) out.passed = false;
        }
    };
    for (double t : {0.0, 0.5, 0.9, 0.99}) check(corner_family(4, t), 4);
    const auto e = exp_function();
    for (int r = 1; r <= 6; ++r) check(e, r);
    out.detail = "largest |a_n|/bound at " + worst.str();
    return out;
}

SuiteResult verify_gauss_exactness(const VerifyOptions& options) {
    validate(options);
    SuiteResult out{"gauss_exactness", true, 0.0, {}};
    std::string note;
    for (const auto& w : {WeightSpec::chebyshev1(), WeightSpec::legendre(), WeightSpec::chebyshev2()}) {
        const double norm = gegenbauer_weight_norm(w.lambda());
        for (int N = 1; N <= options.max_rule_size; ++N) {
            const auto rule = golub_welsch<double>(w, static_cast<std::size_t>(N));
            for (int k = 0; k <= 2 * N - 1; ++k) {
                const double exact = gegenbauer_moment<double>(w.lambda(), static_cast<unsigned>(k));
                const double q = integrate(rule, [k](double x) { return std::pow(x, k); });
                const double scale = exact != 0.0 ? std::abs(exact) : norm;
                const double err = std::abs(q - exact) / scale;
                out.worst_margin = std::max(out.worst_margin, err);
                if (err > 1e-11) {
                    out.passed = false;
                    note = first_failure_note(note, w.name() + " N=" + std::to_string(N) + " x^" + std::to_string(k));
                }
            }
        }
    }
    for (int N = 1; N <= options.max_rule_size; ++N) {
        const auto gw = golub_welsch<double>(WeightSpec::chebyshev1(), static_cast<std::size_t>(N));
        const auto cf = gauss_chebyshev_closed_form<double>(static_cast<std::size_t>(N));
        for (std::size_t i = 0; i < gw.size(); ++i) {
            const double d = std::max(std::abs(gw.nodes[i] - cf.nodes[i]), std::abs(gw.weights[i] - cf.weights[i]));
            if (d > 1e-13) {
                out.passed = false;
                note = first_failure_note(note, "closed form mismatch at N=" + std::to_string(N));
            }
        }
    }
    out.detail = out.passed ? "degree 2N-1 exact for N <= " + std::to_string(options.max_rule_size) : note;
    return out;
}

SuiteResult verify_gegenbauer_parity(const VerifyOptions& options) {
    validate(options);
    SuiteResult out{"gegenbauer_parity", true, 0.0, {}};
    std::string note;
    for (double lambda : {0.0, 0.5, 1.0, 2.5}) {
        const auto w = WeightSpec::gegenbauer(lambda);
        for (int N = 1; N <= options.max_rule_size; ++N) {
            const auto rule = golub_welsch<double>(w, static_cast<std::size_t>(N));
            for (int j = 1; j <= 4 * N + 1; j += 2) {
                const double q = std::abs(integrate(rule, [j](double x) { return eval_T(j, x); }));
                out.worst_margin = std::max(out.worst_margin, q);
                if (q > 1e-13) {
                    out.passed = false;
                    note = first_failure_note(note, w.name() + " N=" + std::to_string(N) + " T_" + std::to_string(j));
                }
            }
        }
    }
    out.detail = out.passed ? "odd modes vanish" : note;
    return out;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    validate(options);
    return {verify_lemma_key2(options), verify_lemma_key_structure(options), verify_coefficient_envelope(),
            verify_gauss_exactness(options), verify_gegenbauer_parity(options)};
}

} // namespace quadbound
