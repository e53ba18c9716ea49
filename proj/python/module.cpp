#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lk/apps.hpp"
#include "lk/boundary.hpp"
#include "lk/diagnostics.hpp"
#include "lk/driving.hpp"
#include "lk/experiment.hpp"
#include "lk/flow.hpp"

namespace py = pybind11;
using namespace lk;

PYBIND11_MODULE(_loewner, m) {
    m.doc() = "Loewner-Kufarev evolution engine";

    py::class_<Schedule>(m, "Schedule")
        .def(py::init<double>())
        .def(py::init<std::vector<std::pair<double, double>>>())
        .def("at", &Schedule::at);
    py::implicitly_convertible<double, Schedule>();

    py::class_<SpectralMeasure>(m, "SpectralMeasure")
        .def(py::init([](const std::vector<std::pair<double, double>>& atoms) {
            SpectralMeasure mu;
            for (const auto& [theta, weight] : atoms) mu.atoms.push_back({theta, weight});
            mu.validate();
            return mu;
        }))
        .def_property_readonly("raw_mass", [](const SpectralMeasure& mu) { return mu.raw_mass; })
        .def_property_readonly("atoms", [](const SpectralMeasure& mu) {
            std::vector<std::pair<double, double>> out;
            for (const auto& a : mu.atoms) out.emplace_back(a.theta, a.weight);
            return out;
        });

    py::class_<SelfMap>(m, "SelfMap")
        .def(py::init([](double rotation, Complex point, bool multiply_by_z) {
                 return SelfMap{rotation, point, multiply_by_z};
             }),
             py::arg("rotation") = 0.0, py::arg("point") = Complex{0.0, 0.0},
             py::arg("multiply_by_z") = false)
        .def("__call__", &SelfMap::operator());

    py::class_<DrivingTerm>(m, "DrivingTerm")
        .def_static("constant", &DrivingTerm::constant)
        .def_static("half_plane", &DrivingTerm::half_plane)
        .def_static("strip", &DrivingTerm::strip)
        .def_static("sector", &DrivingTerm::sector)
        .def_static("sector_from_alpha", &DrivingTerm::sector_from_alpha)
        .def_static("point_kernel", &DrivingTerm::point_kernel)
        .def_static("measure", &DrivingTerm::measure)
        .def_static("composed", &DrivingTerm::composed)
        .def("evaluate", &DrivingTerm::evaluate)
        .def("evaluate_derivative", &DrivingTerm::evaluate_derivative)
        .def("family_name", &DrivingTerm::family_name)
        .def("describe", &DrivingTerm::describe);

    m.def("herglotz_from_density", &herglotz_from_density);
    m.def("herglotz_from_samples", &herglotz_from_samples);
    m.def("renormalize_time",
          [](const DrivingTerm& term) { return renormalize_time(term).first; });

    py::enum_<FlowDirection>(m, "FlowDirection")
        .value("Forward", FlowDirection::Forward)
        .value("Backward", FlowDirection::Backward);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("rel", &Tolerances::rel)
        .def_readwrite("abs", &Tolerances::abs)
        .def_readwrite("boundary", &Tolerances::boundary);

    py::class_<FlowField>(m, "FlowField")
        .def(py::init([](DrivingTerm term, FlowDirection direction, double horizon,
                         Tolerances tol) {
                 return FlowField{std::move(term), direction, horizon, tol};
             }),
             py::arg("term"), py::arg("direction") = FlowDirection::Forward,
             py::arg("horizon") = 1.0, py::arg("tol") = Tolerances{})
        .def_readwrite("horizon", &FlowField::horizon);

    py::enum_<ExitStatus>(m, "ExitStatus")
        .value("HorizonReached", ExitStatus::HorizonReached)
        .value("BoundaryReached", ExitStatus::BoundaryReached)
        .value("StepFailure", ExitStatus::StepFailure);

    py::class_<TrajectorySample>(m, "TrajectorySample")
        .def_readonly("t", &TrajectorySample::t)
        .def_readonly("w", &TrajectorySample::w)
        .def_readonly("wz", &TrajectorySample::wz);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("seed", &Trajectory::seed)
        .def_readonly("samples", &Trajectory::samples)
        .def_readonly("exit", &Trajectory::exit)
        .def_property_readonly("end",
                               [](const Trajectory& t) { return t.back(); });

    m.def("integrate", &integrate);
    m.def("integrate_grid", &integrate_grid);
    m.def("arc_length_in_annulus", &arc_length_in_annulus);

    py::class_<BoundaryCurve>(m, "BoundaryCurve")
        .def_readonly("time", &BoundaryCurve::time)
        .def_readonly("radius", &BoundaryCurve::radius)
        .def_readonly("points", &BoundaryCurve::points);

    m.def("trace_boundary", &trace_boundary);
    m.def("jordan_check", &jordan_check);
    m.def("polyline_length", &polyline_length);
    m.def("three_point_ratio", [](const BoundaryCurve& c) {
        const ThreePointResult r = three_point_ratio(c);
        return std::make_pair(r.normalized_ratio, r.bounded_turning);
    });
    m.def("estimate_holder", [](const FlowField& f, double time) {
        const HolderEstimate e = estimate_holder(f, time);
        return std::make_pair(e.exponent, e.constant);
    });

    m.def("estimate_H", &estimate_H, py::arg("term"), py::arg("t") = 0.0,
          py::arg("n_r") = 256, py::arg("n_theta") = 256);
    m.def("fit_growth", [](const DrivingTerm& term, const std::string& which, double t) {
        const GrowthFit fit = fit_growth(
            term, which == "est1" ? GrowthCondition::Est1 : GrowthCondition::Est2, t);
        py::dict out;
        out["C"] = fit.C;
        out["alpha"] = fit.alpha;
        out["residual"] = fit.residual;
        out["satisfied"] = fit.satisfied;
        return out;
    }, py::arg("term"), py::arg("which"), py::arg("t") = 0.0);
    m.def("driver_sqrt_norm",
          [](const std::vector<double>& t, const std::vector<double>& u, double window) {
              const SqrtNorm n = driver_sqrt_norm(t, u, window);
              return std::make_pair(n.value, n.empty_window);
          });

    py::class_<CoupledState>(m, "CoupledState")
        .def_readonly("step", &CoupledState::step)
        .def_readonly("time", &CoupledState::time)
        .def_readonly("boundary", &CoupledState::boundary)
        .def_readonly("timescale_accumulated", &CoupledState::timescale_accumulated);

    m.def("initial_coupled_state", &initial_coupled_state);
    m.def("hele_shaw_step", [](const CoupledState& state, double dt) {
        return hele_shaw_step(state, dt, HeleShawConfig{});
    });
    m.def("carleson_makarov_density", [](const CoupledState& state, double delta) {
        std::vector<std::pair<double, double>> out;
        for (const auto& s : carleson_makarov_density(state, delta)) {
            out.emplace_back(s.theta, s.xi);
        }
        return out;
    });

    m.def("list_catalogue", &list_catalogue);
}
