#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qcorr/dynamics.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/oracle.hpp"
#include "qcorr/sweep.hpp"
#include "qcorr/validation.hpp"

namespace py = pybind11;
using namespace qcorr;

namespace {

SweepConfig make_config(std::vector<double> n, std::vector<double> r, std::vector<double> x, double gamma,
                        double t_max, int steps, const std::string& integrator) {
    SweepConfig cfg;
    cfg.n_values = std::move(n);
    cfg.r_values = std::move(r);
    cfg.x_values = std::move(x);
    cfg.gamma = gamma;
    cfg.t_max = t_max;
    cfg.t_steps = steps;
    apply_setting(cfg, "integrator", integrator);
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-qubit correlation measures under thermal dissipation";

    // Messages start with the error code name, e.g. "NotPositive: ...".
    py::register_exception<Error>(m, "QcorrError", PyExc_ValueError);

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init([](const Mat4& rho) { return DensityMatrix::validate(rho); }), py::arg("rho"))
        .def_property_readonly("matrix", [](const DensityMatrix& d) { return Mat4(d.matrix()); });

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init(&ModelParams::make), py::arg("gamma"), py::arg("n"), py::arg("r"))
        .def_property_readonly("gamma", &ModelParams::gamma)
        .def_property_readonly("n", &ModelParams::n)
        .def_property_readonly("r", &ModelParams::r);

    py::class_<WeakStrength>(m, "WeakStrength")
        .def(py::init(&WeakStrength::make), py::arg("x"))
        .def_property_readonly("x", &WeakStrength::x)
        .def_property_readonly("t1", &WeakStrength::t1)
        .def_property_readonly("t2", &WeakStrength::t2);

    m.def("initial_state", &initial_state, py::arg("params"));
    m.def("analytic_state_at", &analytic_state_at, py::arg("params"), py::arg("gamma_t"));
    m.def("sudden_death_time", &sudden_death_time, py::arg("params"));
    m.def(
        "integrate",
        [](const ModelParams& p, double t_max, int steps) {
            const Trajectory t = integrate(p, t_max, steps);
            return py::make_tuple(t.times, t.states);
        },
        py::arg("params"), py::arg("t_max"), py::arg("steps"));

    m.def("concurrence", &concurrence, py::arg("rho"));
    m.def("concurrence_xstate", &concurrence_xstate, py::arg("rho"));
    m.def("hs_min", &hs_min, py::arg("rho"));
    m.def("trace_min", py::overload_cast<const DensityMatrix&>(&trace_min), py::arg("rho"));
    m.def("weak_factor", &weak_factor, py::arg("w"));
    m.def("weak_hs_min", &weak_hs_min, py::arg("rho"), py::arg("w"));
    m.def("weak_trace_min", &weak_trace_min, py::arg("rho"), py::arg("w"));

    m.def("brute_force_hs_min", [](const DensityMatrix& rho) { return brute_force_hs_min(rho); }, py::arg("rho"));
    m.def("brute_force_trace_min", [](const DensityMatrix& rho) { return brute_force_trace_min(rho); },
          py::arg("rho"));

    m.def(
        "time_sweep_csv",
        [](std::vector<double> n, std::vector<double> r, double gamma, double t_max, int steps,
           const std::string& integrator) {
            std::ostringstream out;
            write_time_sweep(make_config(std::move(n), std::move(r), {1.0}, gamma, t_max, steps, integrator), out);
            return out.str();
        },
        py::arg("n"), py::arg("r"), py::arg("gamma") = 1.0, py::arg("t_max") = 5.0, py::arg("steps") = 101,
        py::arg("integrator") = "analytic");
    m.def(
        "strength_sweep_csv",
        [](double n, double r, std::vector<double> x, double gamma, double t_max, int steps,
           const std::string& integrator) {
            std::ostringstream out;
            write_strength_sweep(make_config({n}, {r}, std::move(x), gamma, t_max, steps, integrator), out);
            return out.str();
        },
        py::arg("n"), py::arg("r"), py::arg("x"), py::arg("gamma") = 1.0, py::arg("t_max") = 5.0,
        py::arg("steps") = 101, py::arg("integrator") = "analytic");

    m.def(
        "run_validation",
        [](int samples, std::uint64_t seed, int rk4_steps) {
            const ValidationReport r = run_validation(samples, seed, rk4_steps);
            return py::make_tuple(r.passed(), r.text());
        },
        py::arg("samples") = 100, py::arg("seed") = 20240101, py::arg("rk4_steps") = 500);
}
