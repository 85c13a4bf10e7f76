// quadbound: run the bound experiments and identity suites from the command line.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "quadbound/commands.hpp"
#include "quadbound/errors.hpp"

namespace {

using quadbound::Command;
using quadbound::ExitCode;
using quadbound::ExperimentConfig;

int code(ExitCode c) { return static_cast<int>(c); }

struct Flags {
    std::vector<int> N;
    std::vector<int> r;
    std::optional<double> lambda;
    std::optional<double> t;
    std::optional<int> j;
    std::optional<int> M;
    std::string format = "pretty";
    std::optional<std::string> out;
    bool paper_values = false;
    bool seedless = false;
    std::optional<std::string> weight;
    std::optional<std::string> function;
    std::optional<std::string> kind;
    std::optional<double> U;
    std::optional<double> V;
    std::optional<int> n;
    int max_n = 40;
    int max_r = 12;
    bool inject_fault = false;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json", "pretty"}));
    sub->add_option("--out", f.out, "Write the report to PATH instead of stdout");
    sub->add_flag("--seedless", f.seedless, "Reserved; rejected (nothing here is random)");
}

void add_sizes(CLI::App* sub, Flags& f, const char* help) {
    sub->add_option("--N", f.N, help)->delimiter(',');
}

void add_weight(CLI::App* sub, Flags& f) {
    sub->add_option("--weight", f.weight, "chebyshev1, legendre, chebyshev2 or gegenbauer:<lambda>");
    sub->add_option("--lambda", f.lambda, "Gegenbauer parameter (overrides --weight)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev-coefficient and Gauss quadrature error bounds"};
    app.require_subcommand(1);
    Flags f;

    auto* table1 = app.add_subcommand("table1", "Denominator factors beta and theta for (N, r) pairs");
    add_sizes(table1, f, "Sizes, paired with --r");
    table1->add_option("--r", f.r, "Orders, paired with --N")->delimiter(',');
    table1->add_flag("--paper-values", f.paper_values, "Add the published values as extra columns");

    auto* example1 = app.add_subcommand("example1", "Bounds for the corner family (x-t)^(j-1)|x-t|/j!");
    add_sizes(example1, f, "Rule sizes (default 5,10,15,20)");
    example1->add_option("--t", f.t, "Kink location (default 0.9)");
    example1->add_option("--j", f.j, "Smoothness order, also the bound order (default 4)");
    example1->add_option("--r", f.r, "Must equal j if given");
    example1->add_flag("--paper-values", f.paper_values, "Add the published values as extra columns");
    add_weight(example1, f);

    auto* example2 = app.add_subcommand("example2", "Bounds for e^x");
    add_sizes(example2, f, "Rule sizes (default 5,10,15)");
    example2->add_option("--r", f.r, "Bound order (default 4)");
    example2->add_flag("--paper-values", f.paper_values, "Add the published values as extra columns");
    add_weight(example2, f);

    auto* verify = app.add_subcommand("verify", "Run the exact identity and quadrature suites");
    verify->add_option("--max-n", f.max_n, "Largest mode n (default 40)");
    verify->add_option("--max-r", f.max_r, "Largest rewrite depth r (default 12)");
    verify->add_flag("--inject-fault", f.inject_fault, "Corrupt one ladder denominator")->group("");

    auto* rule = app.add_subcommand("rule", "Gauss nodes and weights");
    add_sizes(rule, f, "Number of nodes");
    add_weight(rule, f);

    auto* coeffs = app.add_subcommand("coeffs", "Chebyshev coefficients a_0..a_M");
    coeffs->add_option("--function", f.function, "exp, abs, corner or T<k> (default exp)");
    coeffs->add_option("--M", f.M, "Truncation degree (default 32)");
    coeffs->add_option("--j", f.j, "Corner order (default 4)");
    coeffs->add_option("--t", f.t, "Corner location (default 0.9)");

    auto* bound = app.add_subcommand("bound", "Evaluate a single bound formula");
    bound->add_option("--kind", f.kind,
                      "table1-factor, trefethen-coeff, new-coeff, xiang, new-quadrature, gegenbauer, weight-norm")
        ->required();
    add_sizes(bound, f, "Rule size");
    bound->add_option("--r", f.r, "Order");
    bound->add_option("--n", f.n, "Coefficient index");
    bound->add_option("--U", f.U, "U_r (otherwise taken from --function)");
    bound->add_option("--V", f.V, "V_r (otherwise taken from --function)");
    bound->add_option("--function", f.function, "exp, abs or corner, to derive U_r and V_r");
    bound->add_option("--j", f.j, "Corner order (default 4)");
    bound->add_option("--t", f.t, "Corner location (default 0.9)");
    add_weight(bound, f);

    for (auto* sub : {table1, example1, example2, verify, rule, coeffs, bound}) add_common(sub, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return code(ExitCode::parameter_error);
    }

    try {
        if (f.seedless) throw quadbound::ParameterError("--seedless is reserved: no command uses randomness");
        ExperimentConfig cfg;
        cfg.command = quadbound::parse_command(app.get_subcommands().front()->get_name());
        cfg.N_list = f.N;
        cfg.r_list = f.r;
        cfg.lambda = f.lambda;
        cfg.t = f.t;
        cfg.j = f.j;
        cfg.M = f.M;
        cfg.output_format = quadbound::parse_output_format(f.format);
        cfg.output_path = f.out;
        cfg.paper_values = f.paper_values;
        cfg.weight = f.weight;
        cfg.function = f.function;
        cfg.kind = f.kind;
        cfg.U = f.U;
        cfg.V = f.V;
        cfg.n = f.n;
        cfg.max_n = f.max_n;
        cfg.max_r = f.max_r;
        cfg.inject_fault = f.inject_fault;

        auto report = quadbound::run_command(cfg);
        report.config["format"] = f.format;
        const std::string text = quadbound::render(report, cfg.output_format);
        if (cfg.output_path) {
            std::ofstream os(*cfg.output_path, std::ios::binary);
            if (!os) throw quadbound::ParameterError("cannot open output file " + *cfg.output_path);
            os << text;
        } else {
            std::cout << text;
        }
        if (!report.all_suites_passed()) {
            std::cerr << "verification failed\n";
            return code(ExitCode::verification_failure);
        }
        return code(ExitCode::success);
    } catch (const quadbound::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return code(ExitCode::parameter_error);
    } catch (const quadbound::VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return code(ExitCode::verification_failure);
    } catch (const quadbound::NonConvergence& e) {
        std::cerr << "no convergence: " << e.what() << '\n';
        return code(ExitCode::non_convergence);
    }
}
