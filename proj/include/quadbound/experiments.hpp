#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadbound/bounds.hpp"
#include "quadbound/testbed.hpp"
#include "quadbound/weight.hpp"

namespace quadbound {

/// |I[f] - Q_N[f]| with I from the 500-point reference rule of the same weight.
/// Both sides are evaluated in HighPrecision and rounded once.
[[nodiscard]] double actual_error(const TestFunction& f, const WeightSpec& weight, int N);

/// All bounds for (f, weight, N, r) plus the measured error. Requires
/// 1 <= r <= 2N - 1 and U_r available for f.
[[nodiscard]] BoundReport bound_row(const TestFunction& f, const WeightSpec& weight, int N, int r);

/// One bound_row per entry of `sizes`, returned in the order given. Rows are
/// computed on worker threads.
[[nodiscard]] std::vector<BoundReport> bound_table(const TestFunction& f, const WeightSpec& weight,
                                                   int r, std::span<const int> sizes);

struct Table1Row {
    int N = 0;
    int r = 0;
    Table1Factors factors;
    double r_over_n_minus_1 = 0.0;
};

/// The six (N, r) pairs of the denominator-factor comparison.
[[nodiscard]] std::vector<std::pair<int, int>> default_table1_pairs();
[[nodiscard]] std::vector<Table1Row> table1_rows(std::span<const std::pair<int, int>> pairs);

/// Values as printed in the published comparison tables. Kept for side-by-side
/// display only; several rows do not follow from the stated formulas.
struct PublishedTable1Row {
    int N;
    int r;
    double beta;
    double theta;
    double ratio;
};
[[nodiscard]] std::span<const PublishedTable1Row> published_table1();

struct PublishedBoundRow {
    int N;
    const char* classical;
    const char* new_bound;
    const char* actual;
    const char* ratio;  // nullptr where no ratio is printed
};
/// Corner family j = 4, t = 0.9, Legendre weight.
[[nodiscard]] std::span<const PublishedBoundRow> published_example1();
/// e^x, r = 4, Legendre weight.
[[nodiscard]] std::span<const PublishedBoundRow> published_example2();

/// Outcome of one verification suite. worst_margin is the suite's figure of
/// merit: the largest relative discrepancy for exact identities (0 when
/// exact), the largest value/bound ratio for envelope checks, and the largest
/// absolute residual for quadrature checks.
struct SuiteResult {
    std::string name;
    bool passed = false;
    double worst_margin = 0.0;
    std::string detail;
};

struct VerifyOptions {
    int max_n = 40;
    int max_r = 12;
    int max_rule_size = 20;
    /// Negative control: corrupt one ladder denominator before checking.
    bool inject_fault = false;
};

/// Throws ParameterError for max_n < 2, max_r < 1 or max_r > max_n - 1.
void validate(const VerifyOptions& options);

[[nodiscard]] SuiteResult verify_lemma_key2(const VerifyOptions& options);
[[nodiscard]] SuiteResult verify_lemma_key_structure(const VerifyOptions& options);
/// |a_n| <= new_coeff_bound(U_r, r, n) (1 + 1e-6) for r+1 <= n <= 200: corner
/// family j = 4 at t in {0, 0.5, 0.9, 0.99} with r = 4, and e^x with r = 1..6.
[[nodiscard]] SuiteResult verify_coefficient_envelope();
/// Degree 2N-1 exactness for the three aliases (relative 1e-11) and the
/// Gauss-Chebyshev closed form (1e-13), N <= max_rule_size.
[[nodiscard]] SuiteResult verify_gauss_exactness(const VerifyOptions& options);
/// |Q_N[T_j]| <= 1e-13 for odd j <= 4N+1, lambda in {0, 1/2, 1, 5/2}.
[[nodiscard]] SuiteResult verify_gegenbauer_parity(const VerifyOptions& options);

[[nodiscard]] std::vector<SuiteResult> run_verification(const VerifyOptions& options);

} // namespace quadbound
