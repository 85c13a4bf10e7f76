#include "quadbound/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "quadbound/errors.hpp"

namespace quadbound {

OutputFormat parse_output_format(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    if (text == "pretty") return OutputFormat::pretty;
    throw ParameterError("unknown output format '" + std::string(text) + "' (expected csv, json or pretty)");
}

bool Report::all_suites_passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

namespace {

std::string non_finite(double v) {
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

std::string chars(double v, std::chars_format fmt, int precision) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, fmt, precision);
    return std::string(buf, res.ptr);
}

std::string cell_text(const Cell& c, bool pretty) {
    return std::visit(
        [pretty](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return pretty ? "-" : "";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return pretty ? format_pretty(v) : format_exact(v);
            } else {
                return v;
            }
        },
        c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::ordered_json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return nullptr;
                return v;
            } else {
                return v;
            }
        },
        c);
}

void write_csv_table(std::ostringstream& os, const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_escape(columns[i]);
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
        os << '\n';
    }
}

void write_aligned(std::ostringstream& os, const std::vector<std::string>& columns,
                   const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) text += "  ";
            text += std::string(width[i] - cells[i].size(), ' ') + cells[i];
        }
        os << text << '\n';
    };
    line(columns);
    std::size_t total = 0;
    for (auto w : width) total += w;
    os << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << '\n';
    for (const auto& row : rows) line(row);
}

std::vector<std::vector<std::string>> text_rows(const Report& r, bool pretty) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : r.rows) {
        std::vector<std::string> cells;
        for (const auto& c : row) cells.push_back(cell_text(c, pretty));
        out.push_back(std::move(cells));
    }
    return out;
}

std::vector<std::vector<std::string>> suite_rows(const Report& r, bool pretty) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : r.suites) {
        out.push_back({s.name, s.passed ? "pass" : "FAIL",
                       pretty ? format_pretty(s.worst_margin) : format_exact(s.worst_margin), s.detail});
    }
    return out;
}

const std::vector<std::string> suite_columns{"suite", "status", "worst_margin", "detail"};

} // namespace

std::string format_exact(double v) {
    if (!std::isfinite(v)) return non_finite(v);
    return chars(v, std::chars_format::general, 17);
}

std::string format_pretty(double v) {
    if (!std::isfinite(v)) return non_finite(v);
    if (v == 0.0) return "0";
    const double a = std::abs(v);
    if (a >= 1e-2 && a < 1e5) return chars(v, std::chars_format::general, a >= 100.0 ? 5 : 3);
    return chars(v, std::chars_format::scientific, 2);
}

nlohmann::ordered_json to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["schema_version"] = report_schema_version;
    j["command"] = report.command;
    j["config"] = report.config;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < report.columns.size() && i < row.size(); ++i) obj[report.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(obj));
    }
    j["rows"] = std::move(rows);
    auto suites = nlohmann::ordered_json::array();
    for (const auto& s : report.suites) {
        nlohmann::ordered_json obj;
        obj["name"] = s.name;
        obj["passed"] = s.passed;
        obj["worst_margin"] = std::isfinite(s.worst_margin) ? nlohmann::ordered_json(s.worst_margin) : nullptr;
        obj["detail"] = s.detail;
        suites.push_back(std::move(obj));
    }
    j["suites"] = std::move(suites);
    return j;
}

std::string render(const Report& report, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
    case OutputFormat::json:
        os << to_json(report).dump(2) << '\n';
        break;
    case OutputFormat::csv:
        if (!report.columns.empty()) write_csv_table(os, report.columns, text_rows(report, false));
        if (!report.suites.empty()) {
            if (!report.columns.empty()) os << '\n';
            write_csv_table(os, suite_columns, suite_rows(report, false));
        }
        break;
    case OutputFormat::pretty:
        os << report.command << '\n';
        if (!report.columns.empty()) write_aligned(os, report.columns, text_rows(report, true));
        if (!report.suites.empty()) {
            if (!report.columns.empty()) os << '\n';
            write_aligned(os, suite_columns, suite_rows(report, true));
        }
        break;
    }
    return os.str();
}

} // namespace quadbound
