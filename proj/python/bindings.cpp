#include <optional>
#include <string>
#include <vector>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadbound/bounds.hpp"
#include "quadbound/chebyshev.hpp"
#include "quadbound/commands.hpp"
#include "quadbound/errors.hpp"
#include "quadbound/expansion.hpp"
#include "quadbound/experiments.hpp"
#include "quadbound/gauss_rules.hpp"

namespace py = pybind11;
using namespace quadbound;

namespace {

py::object fraction(const Rational& q) {
    return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

WeightSpec weight_from(const py::object& w) {
    if (py::isinstance<py::str>(w)) return WeightSpec::parse(w.cast<std::string>());
    return WeightSpec::gegenbauer(w.cast<double>());
}

TestFunction function_from(const std::string& name, int j, double t) { return named_function(name, j, t); }

} // namespace

PYBIND11_MODULE(_quadbound, m) {
    m.doc() = "Chebyshev coefficient and Gauss quadrature error bounds";

    py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);

    m.def("eval_T", &eval_T, py::arg("n"), py::arg("x"));
    m.def("eval_scaled_T", &eval_scaled_T, py::arg("n"), py::arg("x"));

    m.def(
        "lemma_key_expansion",
        [](int n, int r) {
            const auto expansion = lemma_key_expansion(n, r);
            py::dict out;
            for (const auto& [mode, c] : expansion.terms()) out[py::int_(mode)] = fraction(c);
            return out;
        },
        py::arg("n"), py::arg("r"), "Merged coefficients {mode: Fraction} after r rewrites of S_n.");
    m.def(
        "lemma_key2_check",
        [](int n, int r) {
            const auto s = lemma_key2_check(n, r);
            return py::make_tuple(fraction(s.lhs), fraction(s.rhs));
        },
        py::arg("n"), py::arg("r"));

    m.def("gegenbauer_weight_norm", [](double lam) { return gegenbauer_weight_norm<double>(lam); }, py::arg("lam"));
    m.def(
        "golub_welsch",
        [](const py::object& weight, int N) {
            if (N < 1) throw ParameterError("golub_welsch: N must be >= 1");
            const auto rule = golub_welsch<double>(weight_from(weight), static_cast<std::size_t>(N));
            return py::make_tuple(rule.nodes, rule.weights);
        },
        py::arg("weight"), py::arg("N"), "Nodes and weights; weight is an alias name or a lambda value.");
    m.def(
        "chebyshev_coefficients",
        [](const std::function<double(double)>& f, int M, std::size_t rule_size) {
            if (M < 0) throw ParameterError("chebyshev_coefficients: M must be >= 0");
            return chebyshev_coefficients<double>(f, static_cast<std::size_t>(M), rule_size).coeffs;
        },
        py::arg("f"), py::arg("M"), py::arg("rule_size") = 0);

    m.def("trefethen_coeff_bound", &trefethen_coeff_bound, py::arg("V"), py::arg("r"), py::arg("n"));
    m.def("new_coeff_bound", &new_coeff_bound, py::arg("U"), py::arg("r"), py::arg("n"));
    m.def("xiang_quadrature_bound", &xiang_quadrature_bound, py::arg("V"), py::arg("w_norm"), py::arg("N"),
          py::arg("r"));
    m.def("new_quadrature_bound", &new_quadrature_bound, py::arg("U"), py::arg("w_norm"), py::arg("N"), py::arg("r"));
    m.def("gegenbauer_quadrature_bound", &gegenbauer_quadrature_bound, py::arg("U"), py::arg("lam"), py::arg("N"),
          py::arg("r"));
    m.def(
        "table1_factors",
        [](int N, int r) {
            const auto f = table1_factors(N, r);
            return py::make_tuple(f.beta, f.theta, f.ratio);
        },
        py::arg("N"), py::arg("r"));

    m.def(
        "regularity_profile",
        [](const std::string& function, int r, int j, double t) {
            const auto p = regularity_profile(function_from(function, j, t), r);
            return py::make_tuple(p.U, p.V);
        },
        py::arg("function"), py::arg("r"), py::arg("j") = 4, py::arg("t") = 0.9, "(U_r, V_r); None where undefined.");
    m.def(
        "actual_error",
        [](const std::string& function, const py::object& weight, int N, int j, double t) {
            return actual_error(function_from(function, j, t), weight_from(weight), N);
        },
        py::arg("function"), py::arg("weight"), py::arg("N"), py::arg("j") = 4, py::arg("t") = 0.9);

    m.def(
        "run",
        [](const std::string& command, std::vector<int> N, std::vector<int> r, std::optional<double> lam,
           std::optional<double> t, std::optional<int> j, std::optional<int> M, bool paper_values,
           std::optional<std::string> weight, std::optional<std::string> function, std::optional<std::string> kind,
           std::optional<double> U, std::optional<double> V, std::optional<int> n, int max_n, int max_r,
           const std::string& format) {
            ExperimentConfig cfg;
            cfg.command = parse_command(command);
            cfg.N_list = std::move(N);
            cfg.r_list = std::move(r);
            cfg.lambda = lam;
            cfg.t = t;
            cfg.j = j;
            cfg.M = M;
            cfg.paper_values = paper_values;
            cfg.weight = std::move(weight);
            cfg.function = std::move(function);
            cfg.kind = std::move(kind);
            cfg.U = U;
            cfg.V = V;
            cfg.n = n;
            cfg.max_n = max_n;
            cfg.max_r = max_r;
            cfg.output_format = parse_output_format(format);
            py::gil_scoped_release release;
            return render(run_command(cfg), cfg.output_format);
        },
        py::arg("command"), py::kw_only(), py::arg("N") = std::vector<int>{}, py::arg("r") = std::vector<int>{},
        py::arg("lam") = py::none(), py::arg("t") = py::none(), py::arg("j") = py::none(), py::arg("M") = py::none(),
        py::arg("paper_values") = false, py::arg("weight") = py::none(), py::arg("function") = py::none(),
        py::arg("kind") = py::none(), py::arg("U") = py::none(), py::arg("V") = py::none(), py::arg("n") = py::none(),
        py::arg("max_n") = 40, py::arg("max_r") = 12, py::arg("format") = "json",
        "Run a report command and return the rendered text (json by default).");
}
