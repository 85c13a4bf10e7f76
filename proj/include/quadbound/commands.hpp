#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadbound/report.hpp"
#include "quadbound/testbed.hpp"
#include "quadbound/weight.hpp"

namespace quadbound {

enum class Command { table1, example1, example2, verify, rule, coeffs, bound };

[[nodiscard]] Command parse_command(std::string_view name);
[[nodiscard]] std::string_view command_name(Command c);

/// Everything a command can consume. Unset optionals take per-command defaults.
struct ExperimentConfig {
    Command command = Command::table1;
    std::vector<int> N_list;
    /// table1 pairs r_list[i] with N_list[i]; other commands read one value.
    std::vector<int> r_list;
    std::optional<double> lambda;
    std::optional<double> t;
    std::optional<int> j;
    std::optional<int> M;
    OutputFormat output_format = OutputFormat::pretty;
    std::optional<std::string> output_path;
    bool paper_values = false;

    /// Weight alias or "gegenbauer:<lambda>"; --lambda takes precedence.
    std::optional<std::string> weight;
    /// exp, abs, corner, T<k>.
    std::optional<std::string> function;
    /// bound kinds: table1-factor, trefethen-coeff, new-coeff, xiang, new-quadrature,
    /// gegenbauer, weight-norm.
    std::optional<std::string> kind;
    std::optional<double> U;
    std::optional<double> V;
    std::optional<int> n;

    int max_n = 40;
    int max_r = 12;
    bool inject_fault = false;
};

/// Builds the report for cfg.command. The report's config block holds the
/// fully resolved parameters.
[[nodiscard]] Report run_command(const ExperimentConfig& cfg);

[[nodiscard]] Report cmd_table1(std::span<const std::pair<int, int>> rows, bool paper_values = false);
[[nodiscard]] Report cmd_example1(double t, int j, std::span<const int> sizes, bool paper_values = false,
                                  const WeightSpec& weight = WeightSpec::legendre());
[[nodiscard]] Report cmd_example2(int r, std::span<const int> sizes, bool paper_values = false,
                                  const WeightSpec& weight = WeightSpec::legendre());
[[nodiscard]] Report cmd_verify(const VerifyOptions& options);
[[nodiscard]] Report cmd_rule(const WeightSpec& weight, int N);
[[nodiscard]] Report cmd_coeffs(const TestFunction& f, int M);
[[nodiscard]] Report cmd_bound(const ExperimentConfig& cfg);

/// "exp", "abs", "corner" (with j, t), or "T<k>".
[[nodiscard]] TestFunction named_function(std::string_view name, int j = 4, double t = 0.9);

} // namespace quadbound
