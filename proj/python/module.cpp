#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contourint/complexfn.hpp"
#include "contourint/contour.hpp"
#include "contourint/quadrature.hpp"
#include "contourint/verify.hpp"

namespace py = pybind11;
using namespace contourint;

namespace {

Tolerance make_tol(double tol) { return {tol, tol}; }

py::dict quad_to_dict(const QuadResult& q) {
    py::dict d;
    d["value"] = q.value;
    d["err_estimate"] = q.err_estimate;
    d["n_evals"] = q.n_evals;
    return d;
}

}  // namespace

PYBIND11_MODULE(_contourint, m) {
    m.doc() = "Numerical certification of the arctan/arctanh contour integral "
              "identity: function evaluation, quadrature, contour integration "
              "and the verification suite.";

    py::register_exception<Error>(m, "ContourintError");

    py::enum_<RegionTag>(m, "RegionTag")
        .value("InnerDisk", RegionTag::InnerDisk)
        .value("LogformInterior", RegionTag::LogformInterior)
        .value("OuterQuadrant", RegionTag::OuterQuadrant)
        .value("RealBoundaryOuter", RegionTag::RealBoundaryOuter)
        .value("ImagBoundaryOuter", RegionTag::ImagBoundaryOuter)
        .value("Excluded", RegionTag::Excluded);

    m.attr("CLOSED_FORM_VALUE") = closed_form_value;

    m.def("principal_log", &principal_log, py::arg("z"));
    m.def("classify_region", &classify_region, py::arg("z"));
    m.def("f", [](Complex z) {
        const FEval fe = f_eval(z);
        return py::make_tuple(fe.value, fe.method, fe.trunc_bound);
    }, py::arg("z"), "Evaluate f with automatic representation dispatch; "
       "returns (value, region, trunc_bound).");
    m.def("f_oracle", [](Complex z, double tol) {
        return f_oracle_integral(z, make_tol(tol));
    }, py::arg("z"), py::arg("tol") = 1e-12);
    m.def("G", &G_eval, py::arg("z"));
    m.def("real_integrand", &real_integrand, py::arg("x"));

    m.def("gk_adaptive", [](const std::function<Complex(double)>& fn, double a,
                            double b, double tol) {
        return quad_to_dict(gk_adaptive(fn, a, b, make_tol(tol)));
    }, py::arg("fn"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-12);
    m.def("tanh_sinh", [](const std::function<Complex(double)>& fn, double tol) {
        return quad_to_dict(tanh_sinh(fn, make_tol(tol)));
    }, py::arg("fn"), py::arg("tol") = 1e-12);

    m.def("integral_direct", [](double tol) {
        return tanh_sinh([](double x) {
            return Complex{real_integrand(x), 0.0};
        }, make_tol(tol)).value.real();
    }, py::arg("tol") = 1e-12, "Tanh-sinh value of the target integral.");

    m.def("cauchy_residual", [](double R, double eps, double tol) {
        const auto q = integrate_path([](Complex z) { return G_eval(z); },
                                      build_paper_contour({R, eps}), make_tol(tol));
        return std::abs(q.value);
    }, py::arg("R") = 10.0, py::arg("eps") = 1e-3, py::arg("tol") = 1e-12,
       "|closed contour integral of G|, analytically zero.");

    m.def("semicircle_integral", [](const std::string& which, double eps, double tol) {
        const Semicircle s = which == "at_1" ? Semicircle::at_1 : Semicircle::at_i;
        return quad_to_dict(semicircle_integral(s, eps, make_tol(tol)));
    }, py::arg("which"), py::arg("eps"), py::arg("tol") = 1e-12);

    m.def("check_names", [] { return check_names(); });
    m.def("run_check", [](const std::string& name) {
        const CheckResult r = run_check(name, VerifyConfig{});
        py::dict d;
        d["name"] = r.name;
        d["residual"] = r.residual;
        d["tolerance"] = r.tolerance;
        d["passed"] = r.passed;
        d["details"] = py::module_::import("json").attr("loads")(r.details.dump());
        return d;
    }, py::arg("name"));
    m.def("run_all", [](double tol, int n_samples, unsigned long long seed) {
        VerifyConfig cfg;
        cfg.tol = make_tol(tol);
        cfg.n_samples = n_samples;
        cfg.seed = seed;
        return py::module_::import("json").attr("loads")(
            report_to_json(run_all(cfg)).dump());
    }, py::arg("tol") = 1e-12, py::arg("n_samples") = 200, py::arg("seed") = 42,
       "Run every verification check; returns the report as a dict.");
}
