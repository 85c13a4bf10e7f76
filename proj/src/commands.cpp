#include "quadbound/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "quadbound/bounds.hpp"
#include "quadbound/chebyshev.hpp"
#include "quadbound/errors.hpp"
#include "quadbound/expansion.hpp"
#include "quadbound/experiments.hpp"
#include "quadbound/gauss_rules.hpp"

namespace quadbound {

namespace {

constexpr std::pair<Command, std::string_view> command_names[] = {
    {Command::table1, "table1"}, {Command::example1, "example1"}, {Command::example2, "example2"},
    {Command::verify, "verify"}, {Command::rule, "rule"},         {Command::coeffs, "coeffs"},
    {Command::bound, "bound"},
};

std::vector<int> sorted_sizes(std::span<const int> sizes) {
    if (sizes.empty()) throw ParameterError("N list must not be empty");
    std::vector<int> out(sizes.begin(), sizes.end());
    for (int N : out) {
        if (N < 1) throw ParameterError("N must be >= 1, got " + std::to_string(N));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Cell text_or_empty(const char* s) {
    if (s == nullptr) return std::monostate{};
    return std::string(s);
}

const PublishedBoundRow* find_published(std::span<const PublishedBoundRow> table, int N) {
    for (const auto& row : table) {
        if (row.N == N) return &row;
    }
    return nullptr;
}

Report bound_report(const std::string& command, const TestFunction& f, const WeightSpec& weight, int r,
                    std::span<const int> sizes, std::span<const PublishedBoundRow> published, bool paper_values) {
    const auto ordered = sorted_sizes(sizes);
    for (int N : ordered) {
        if (r > 2 * N - 1) {
            throw ParameterError(command + ": r=" + std::to_string(r) + " exceeds 2N-1 for N=" + std::to_string(N));
        }
    }
    Report report;
    report.command = command;
    report.columns = {"N", "r", "classical_bound", "new_bound", "actual_error", "ratio"};
    if (paper_values) {
        for (const char* c : {"published_classical", "published_new", "published_actual", "published_ratio"}) {
            report.columns.emplace_back(c);
        }
    }
    for (const auto& row : bound_table(f, weight, r, ordered)) {
        std::vector<Cell> cells{std::int64_t{row.N}, std::int64_t{row.r}, row.classical_xiang, row.new_t2,
                                row.actual_error, row.ratio()};
        if (paper_values) {
            const auto* p = find_published(published, row.N);
            for (const char* s : {p ? p->classical : nullptr, p ? p->new_bound : nullptr, p ? p->actual : nullptr,
                                  p ? p->ratio : nullptr}) {
                cells.push_back(text_or_empty(s));
            }
        }
        report.rows.push_back(std::move(cells));
    }
    report.config["weight"] = weight.name();
    report.config["lambda"] = weight.lambda();
    report.config["N"] = ordered;
    report.config["r"] = r;
    report.config["paper_values"] = paper_values;
    return report;
}

WeightSpec resolve_weight(const ExperimentConfig& cfg, const WeightSpec& fallback) {
    if (cfg.lambda) return WeightSpec::gegenbauer(*cfg.lambda);
    if (cfg.weight) return WeightSpec::parse(*cfg.weight);
    return fallback;
}

int single(const std::vector<int>& values, const char* flag, std::optional<int> fallback = std::nullopt) {
    if (values.empty()) {
        if (fallback) return *fallback;
        throw ParameterError(std::string("missing ") + flag);
    }
    if (values.size() != 1) throw ParameterError(std::string(flag) + " takes a single value here");
    return values.front();
}

template <class T>
T require(const std::optional<T>& v, const char* flag) {
    if (!v) throw ParameterError(std::string("missing ") + flag);
    return *v;
}

TestFunction chebyshev_mode(int k) {
    if (k < 0) throw ParameterError("T<k> requires k >= 0");
    TestFunction f;
    f.name = "T" + std::to_string(k);
    f.description = "Chebyshev polynomial T_" + std::to_string(k);
    f.value = [k](double x) { return eval_T(k, x); };
    f.value_hp = [k](const HighPrecision& x) {
        // Recurrence keeps the value polynomial in x.
        HighPrecision a(1), b(x);
        if (k == 0) return a;
        for (int i = 1; i < k; ++i) {
            HighPrecision c = 2 * x * b - a;
            a = b;
            b = c;
        }
        return b;
    };
    f.derivative = [name = f.name](int) -> RealFunction {
        throw ParameterError(name + ": derivative data not available");
    };
    f.jumps = [](int) { return std::vector<Jump>{}; };
    return f;
}

TestFunction abs_function() {
    TestFunction f;
    f.name = "abs";
    f.description = "|x|";
    f.value = [](double x) { return std::abs(x); };
    f.value_hp = [](const HighPrecision& x) { return HighPrecision(abs(x)); };
    f.derivative = [](int k) -> RealFunction {
        if (k < 0) throw ParameterError("abs: negative derivative order");
        if (k == 0) return [](double x) { return std::abs(x); };
        if (k == 1) return [](double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); };
        return [](double) { return 0.0; };
    };
    f.jumps = [](int k) -> std::vector<Jump> {
        if (k == 1) return {Jump{0.0, 2.0}};
        if (k > 1) throw ParameterError("abs: derivative of order > 1 is not a function");
        return {};
    };
    f.breakpoints = {0.0};
    f.max_order = 1;
    f.coefficient_rule_size = kinked_coefficient_rule_size;
    return f;
}

double weight_norm_for(const ExperimentConfig& cfg) {
    return gegenbauer_weight_norm(resolve_weight(cfg, WeightSpec::legendre()).lambda());
}

RegularityProfile profile_for(const ExperimentConfig& cfg, int r) {
    RegularityProfile p{r, cfg.U, cfg.V};
    if ((!p.U || !p.V) && cfg.function) {
        const auto f = named_function(*cfg.function, cfg.j.value_or(4), cfg.t.value_or(0.9));
        const auto derived = regularity_profile(f, r);
        if (!p.U) p.U = derived.U;
        if (!p.V) p.V = derived.V;
    }
    return p;
}

} // namespace

Command parse_command(std::string_view name) {
    for (const auto& [c, n] : command_names) {
        if (n == name) return c;
    }
    throw ParameterError("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command c) {
    for (const auto& [cmd, n] : command_names) {
        if (cmd == c) return n;
    }
    return "unknown";
}

TestFunction named_function(std::string_view name, int j, double t) {
    if (name == "exp") return exp_function();
    if (name == "abs") return abs_function();
    if (name == "corner") return corner_family(j, t);
    if (name.size() > 1 && name.front() == 'T') {
        int k = 0;
        const auto* end = name.data() + name.size();
        const auto res = std::from_chars(name.data() + 1, end, k);
        if (res.ec == std::errc{} && res.ptr == end) return chebyshev_mode(k);
    }
    throw ParameterError("unknown function '" + std::string(name) + "' (expected exp, abs, corner or T<k>)");
}

Report cmd_table1(std::span<const std::pair<int, int>> rows, bool paper_values) {
    Report report;
    report.command = "table1";
    report.columns = {"N", "r", "beta", "theta", "ratio", "r_over_N_minus_1"};
    if (paper_values) {
        for (const char* c : {"published_beta", "published_theta", "published_ratio"}) report.columns.emplace_back(c);
    }
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& row : table1_rows(rows)) {
        std::vector<Cell> cells{std::int64_t{row.N}, std::int64_t{row.r}, row.factors.beta, row.factors.theta,
                                row.factors.ratio, row.r_over_n_minus_1};
        if (paper_values) {
            const PublishedTable1Row* match = nullptr;
            for (const auto& p : published_table1()) {
                if (p.N == row.N && p.r == row.r) match = &p;
            }
            if (match) {
                cells.insert(cells.end(), {match->beta, match->theta, match->ratio});
            } else {
                cells.insert(cells.end(), {std::monostate{}, std::monostate{}, std::monostate{}});
            }
        }
        report.rows.push_back(std::move(cells));
        pairs.push_back({row.N, row.r});
    }
    report.config["rows"] = std::move(pairs);
    report.config["paper_values"] = paper_values;
    return report;
}

Report cmd_example1(double t, int j, std::span<const int> sizes, bool paper_values, const WeightSpec& weight) {
    const auto f = corner_family(j, t);
    auto report = bound_report("example1", f, weight, j, sizes, published_example1(), paper_values);
    report.config["t"] = t;
    report.config["j"] = j;
    return report;
}

Report cmd_example2(int r, std::span<const int> sizes, bool paper_values, const WeightSpec& weight) {
    if (r < 1) throw ParameterError("example2: r must be >= 1");
    return bound_report("example2", exp_function(), weight, r, sizes, published_example2(), paper_values);
}

Report cmd_verify(const VerifyOptions& options) {
    Report report;
    report.command = "verify";
    report.suites = run_verification(options);
    report.config["max_n"] = options.max_n;
    report.config["max_r"] = options.max_r;
    report.config["max_rule_size"] = options.max_rule_size;
    if (options.inject_fault) report.config["inject_fault"] = true;
    return report;
}

Report cmd_rule(const WeightSpec& weight, int N) {
    if (N < 1) throw ParameterError("rule: N must be >= 1");
    const auto rule = golub_welsch<double>(weight, static_cast<std::size_t>(N));
    Report report;
    report.command = "rule";
    report.columns = {"i", "node", "weight"};
    for (std::size_t i = 0; i < rule.size(); ++i) {
        report.rows.push_back({static_cast<std::int64_t>(i), rule.nodes[i], rule.weights[i]});
    }
    report.config["weight"] = weight.name();
    report.config["lambda"] = weight.lambda();
    report.config["N"] = N;
    return report;
}

Report cmd_coeffs(const TestFunction& f, int M) {
    if (M < 0) throw ParameterError("coeffs: M must be >= 0");
    const auto e = chebyshev_coefficients<double>(f.value, static_cast<std::size_t>(M), f.coefficient_rule_size);
    Report report;
    report.command = "coeffs";
    report.columns = {"n", "a_n"};
    for (std::size_t n = 0; n < e.coeffs.size(); ++n) report.rows.push_back({static_cast<std::int64_t>(n), e.coeffs[n]});
    report.config["function"] = f.name;
    report.config["M"] = M;
    return report;
}

Report cmd_bound(const ExperimentConfig& cfg) {
    const std::string kind = require(cfg.kind, "--kind");
    Report report;
    report.command = "bound";
    report.columns = {"quantity", "value"};
    report.config["kind"] = kind;
    auto add = [&](const char* name, double v) { report.rows.push_back({std::string(name), v}); };

    if (kind == "weight-norm") {
        const auto w = resolve_weight(cfg, WeightSpec::legendre());
        report.config["lambda"] = w.lambda();
        add("weight_norm", gegenbauer_weight_norm(w.lambda()));
        return report;
    }

    const int r = single(cfg.r_list, "--r");
    report.config["r"] = r;
    if (kind == "trefethen-coeff" || kind == "new-coeff") {
        const int n = require(cfg.n, "--n");
        const auto p = profile_for(cfg, r);
        report.config["n"] = n;
        if (kind == "trefethen-coeff") {
            report.config["V"] = require(p.V, "--V");
            add("trefethen_coeff_bound", trefethen_coeff_bound(*p.V, r, n));
        } else {
            report.config["U"] = require(p.U, "--U");
            add("new_coeff_bound", new_coeff_bound(*p.U, r, n));
        }
        return report;
    }

    const int N = single(cfg.N_list, "--N");
    report.config["N"] = N;
    if (kind == "table1-factor") {
        const auto f = table1_factors(N, r);
        add("beta", f.beta);
        add("theta", f.theta);
        add("ratio", f.ratio);
        return report;
    }
    const auto w = resolve_weight(cfg, WeightSpec::legendre());
    report.config["lambda"] = w.lambda();
    const auto p = profile_for(cfg, r);
    if (kind == "xiang") {
        report.config["V"] = require(p.V, "--V");
        add("xiang_quadrature_bound", xiang_quadrature_bound(*p.V, weight_norm_for(cfg), N, r));
    } else if (kind == "new-quadrature") {
        report.config["U"] = require(p.U, "--U");
        add("new_quadrature_bound", new_quadrature_bound(*p.U, weight_norm_for(cfg), N, r));
    } else if (kind == "gegenbauer") {
        report.config["U"] = require(p.U, "--U");
        add("gegenbauer_quadrature_bound", gegenbauer_quadrature_bound(*p.U, w.lambda(), N, r));
    } else {
        throw ParameterError("unknown bound kind '" + kind +
                             "' (expected table1-factor, trefethen-coeff, new-coeff, xiang, new-quadrature, "
                             "gegenbauer or weight-norm)");
    }
    return report;
}

Report run_command(const ExperimentConfig& cfg) {
    switch (cfg.command) {
    case Command::table1: {
        std::vector<std::pair<int, int>> pairs;
        if (cfg.N_list.empty() && cfg.r_list.empty()) {
            pairs = default_table1_pairs();
        } else {
            if (cfg.N_list.size() != cfg.r_list.size()) {
                throw ParameterError("table1: --N and --r must list the same number of values");
            }
            for (std::size_t i = 0; i < cfg.N_list.size(); ++i) pairs.emplace_back(cfg.N_list[i], cfg.r_list[i]);
        }
        return cmd_table1(pairs, cfg.paper_values);
    }
    case Command::example1: {
        const std::vector<int> fallback{5, 10, 15, 20};
        const auto& sizes = cfg.N_list.empty() ? fallback : cfg.N_list;
        if (!cfg.r_list.empty() && single(cfg.r_list, "--r") != cfg.j.value_or(4)) {
            throw ParameterError("example1: the order is fixed at r = j");
        }
        return cmd_example1(cfg.t.value_or(0.9), cfg.j.value_or(4), sizes, cfg.paper_values,
                            resolve_weight(cfg, WeightSpec::legendre()));
    }
    case Command::example2: {
        const std::vector<int> fallback{5, 10, 15};
        const auto& sizes = cfg.N_list.empty() ? fallback : cfg.N_list;
        return cmd_example2(single(cfg.r_list, "--r", 4), sizes, cfg.paper_values,
                            resolve_weight(cfg, WeightSpec::legendre()));
    }
    case Command::verify:
        return cmd_verify({cfg.max_n, cfg.max_r, VerifyOptions{}.max_rule_size, cfg.inject_fault});
    case Command::rule:
        return cmd_rule(resolve_weight(cfg, WeightSpec::legendre()), single(cfg.N_list, "--N"));
    case Command::coeffs:
        return cmd_coeffs(named_function(cfg.function.value_or("exp"), cfg.j.value_or(4), cfg.t.value_or(0.9)),
                          cfg.M.value_or(32));
    case Command::bound:
        return cmd_bound(cfg);
    }
    throw ParameterError("unknown command");
}

} // namespace quadbound
