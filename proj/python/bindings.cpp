#include <pybind11/pybind11.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

#include "cylsum/analysis.hpp"
#include "cylsum/runner.hpp"
#include "cylsum/testfunctions.hpp"

namespace py = pybind11;
using namespace cylsum;

namespace {

std::vector<double> check_point(const std::vector<double>& v, int want,
                                const char* name) {
    if ((int)v.size() != want)
        throw py::value_error(std::string(name) + " must have " +
                              std::to_string(want) + " coordinates");
    return v;
}

CylinderFn wrap_fn(const std::function<double(std::vector<double>, std::vector<double>)>& f,
                   int m, int d) {
    return [f, m, d](const double* x, const double* y) {
        return f(std::vector<double>(x, x + m), std::vector<double>(y, y + d));
    };
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Fourier orthogonal expansions and Cesaro means on the cylinder";
    mod.attr("__version__") = kToolVersion;

    py::class_<CylinderSpace>(mod, "CylinderSpace")
        .def(py::init<int, int, double, std::vector<double>, std::vector<double>>(),
             py::arg("d"), py::arg("m"), py::arg("mu"), py::arg("alpha"), py::arg("beta"))
        .def_readonly("d", &CylinderSpace::d)
        .def_readonly("m", &CylinderSpace::m)
        .def_readonly("mu", &CylinderSpace::mu)
        .def_readonly("alpha", &CylinderSpace::alpha)
        .def_readonly("beta", &CylinderSpace::beta)
        .def("alpha_beta_condition", &CylinderSpace::alpha_beta_condition)
        .def("weight_mass", &CylinderSpace::weight_mass)
        .def("ball_mass", &CylinderSpace::ball_mass);

    py::class_<CriticalIndexReport>(mod, "CriticalIndexReport")
        .def_readonly("first_term", &CriticalIndexReport::first_term)
        .def_readonly("second_term", &CriticalIndexReport::second_term)
        .def_readonly("bound", &CriticalIndexReport::bound)
        .def_readonly("hypothesis_ok", &CriticalIndexReport::hypothesis_ok);

    py::class_<LebesgueEstimate>(mod, "LebesgueEstimate")
        .def_readonly("n", &LebesgueEstimate::n)
        .def_readonly("delta", &LebesgueEstimate::delta)
        .def_readonly("value", &LebesgueEstimate::value)
        .def_readonly("refinement", &LebesgueEstimate::refinement)
        .def_readonly("reliable", &LebesgueEstimate::reliable)
        .def_readonly("argmax_y", &LebesgueEstimate::argmax_y);

    py::class_<ExpansionCoeffs>(mod, "ExpansionCoeffs")
        .def_readonly("max_degree", &ExpansionCoeffs::max_degree)
        .def_readonly("coeffs", &ExpansionCoeffs::coeffs)
        .def("__len__", [](const ExpansionCoeffs& e) { return e.coeffs.size(); });

    mod.def("pochhammer", &pochhammer, py::arg("a"), py::arg("j"));
    mod.def("cesaro_coeff", &cesaro_coeff, py::arg("n"), py::arg("j"), py::arg("delta"));
    mod.def(
        "eval_jacobi",
        [](int n, double a, double b, double x) { return eval_jacobi(n, {a, b}, x); },
        py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("x"));
    mod.def("eval_gegenbauer", &eval_gegenbauer, py::arg("n"), py::arg("lambda_"),
            py::arg("x"));

    mod.def("critical_delta", &critical_delta, py::arg("space"));

    mod.def(
        "kernel",
        [](const CylinderSpace& sp, int n, std::vector<double> x, std::vector<double> xp,
           std::vector<double> y, std::vector<double> yp) {
            check_point(x, sp.m, "x");
            check_point(xp, sp.m, "xp");
            check_point(y, sp.d, "y");
            check_point(yp, sp.d, "yp");
            return kernel(sp, n, x.data(), xp.data(), y.data(), yp.data());
        },
        py::arg("space"), py::arg("n"), py::arg("x"), py::arg("xp"), py::arg("y"),
        py::arg("yp"));

    mod.def(
        "cesaro_kernel",
        [](const CylinderSpace& sp, int n, double delta, std::vector<double> x,
           std::vector<double> xp, std::vector<double> y, std::vector<double> yp) {
            check_point(x, sp.m, "x");
            check_point(xp, sp.m, "xp");
            check_point(y, sp.d, "y");
            check_point(yp, sp.d, "yp");
            return cesaro_kernel(sp, CesaroCoeffs(n, delta), x.data(), xp.data(),
                                 y.data(), yp.data());
        },
        py::arg("space"), py::arg("n"), py::arg("delta"), py::arg("x"), py::arg("xp"),
        py::arg("y"), py::arg("yp"));

    mod.def(
        "expand",
        [](const CylinderSpace& sp, int n,
           const std::function<double(std::vector<double>, std::vector<double>)>& f,
           int rule_degree) { return expand(sp, n, wrap_fn(f, sp.m, sp.d), rule_degree); },
        py::arg("space"), py::arg("n"), py::arg("f"), py::arg("rule_degree"));

    mod.def(
        "expand_named",
        [](const CylinderSpace& sp, int n, const std::string& name,
           const std::vector<double>& poly_coeffs, int rule_degree) {
            return expand(sp, n, make_test_function(name, poly_coeffs, sp.d), rule_degree);
        },
        py::arg("space"), py::arg("n"), py::arg("name"),
        py::arg("poly_coeffs") = std::vector<double>{}, py::arg("rule_degree"));

    mod.def(
        "cesaro_sum_eval",
        [](const ExpansionCoeffs& ec, int n, double delta, std::vector<double> xp,
           std::vector<double> yp) {
            check_point(xp, ec.space.m, "xp");
            check_point(yp, ec.space.d, "yp");
            return cesaro_sum_eval(ec, CesaroCoeffs(n, delta), xp.data(), yp.data());
        },
        py::arg("coeffs"), py::arg("n"), py::arg("delta"), py::arg("xp"), py::arg("yp"));

    mod.def(
        "partial_sum_eval",
        [](const ExpansionCoeffs& ec, int n, std::vector<double> xp,
           std::vector<double> yp) {
            check_point(xp, ec.space.m, "xp");
            check_point(yp, ec.space.d, "yp");
            return partial_sum_eval(ec, n, xp.data(), yp.data());
        },
        py::arg("coeffs"), py::arg("n"), py::arg("xp"), py::arg("yp"));

    mod.def("lebesgue_quantity", &lebesgue_quantity_at_corner, py::arg("space"),
            py::arg("n"), py::arg("delta"), py::arg("yp"), py::arg("refinement_level") = 1);
    mod.def("lebesgue_sup", &lebesgue_sup, py::arg("space"), py::arg("n"),
            py::arg("delta"), py::arg("grid"), py::arg("refinement_level") = 1);
    mod.def("ball_grid", &ball_grid, py::arg("d"), py::arg("n_radii"),
            py::arg("n_angles"));

    mod.def("dlambda", &dlambda, py::arg("lambda_"), py::arg("v"), py::arg("p"),
            py::arg("u"));
    mod.def("dlambda_identity_check", &dlambda_identity_check, py::arg("lambda_"),
            py::arg("v"), py::arg("u"), py::arg("node_count") = 4000);

    mod.def(
        "run_command",
        [](const std::string& command, const std::string& config_text) {
            RunConfig cfg = parse_config(config_text);
            validate_config(cfg);
            const RunResult res = run_command(command, cfg);
            return py::make_tuple(res.report.render(cfg.format), res.exit_code);
        },
        py::arg("command"), py::arg("config_text"),
        "Run a CLI command on a config string; returns (rendered report, exit code).");

    py::register_exception<ConfigError>(mod, "ConfigError");
}
