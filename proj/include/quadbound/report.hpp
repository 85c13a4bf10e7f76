#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "quadbound/experiments.hpp"

namespace quadbound {

inline constexpr int report_schema_version = 1;

enum class OutputFormat { csv, json, pretty };

/// "csv", "json" or "pretty".
[[nodiscard]] OutputFormat parse_output_format(std::string_view text);

/// Empty cells render as "" (csv), null (json) and "-" (pretty).
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Report {
    std::string command;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<SuiteResult> suites;

    [[nodiscard]] bool all_suites_passed() const;
};

/// 17 significant digits (round-trip exact); "inf", "-inf", "nan" for
/// non-finite values. Locale independent.
[[nodiscard]] std::string format_exact(double v);
/// Three significant digits for tables (five in [100, 1e5), so 848.5 survives).
[[nodiscard]] std::string format_pretty(double v);

/// Non-finite doubles become null.
[[nodiscard]] nlohmann::ordered_json to_json(const Report& report);
[[nodiscard]] std::string render(const Report& report, OutputFormat format);

} // namespace quadbound
