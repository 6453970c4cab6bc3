#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sfspin/bound_spin.hpp"
#include "sfspin/scenario.hpp"
#include "sfspin/simpleman.hpp"

namespace py = pybind11;
using namespace sfspin;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Spin-resolved tunnel ionization of hydrogenlike ions";
    m.attr("speed_of_light") = kSpeedOfLight;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::enum_<Variant>(m, "Variant").value("standard", Variant::Standard).value("dressed", Variant::Dressed);
    py::enum_<AverageWindow>(m, "AverageWindow")
        .value("none", AverageWindow::None)
        .value("spin_period", AverageWindow::SpinPeriod)
        .value("laser_period", AverageWindow::LaserPeriod);

    py::class_<IonSpecies>(m, "IonSpecies")
        .def_readonly("kappa", &IonSpecies::kappa)
        .def_readonly("Ip", &IonSpecies::Ip)
        .def_readonly("eps0", &IonSpecies::eps0)
        .def_readonly("delta", &IonSpecies::delta)
        .def_readonly("rho", &IonSpecies::rho)
        .def_readonly("Ea", &IonSpecies::Ea);
    m.def("make_ion", &make_ion, py::arg("kappa"));

    py::class_<LaserPulseParams>(m, "LaserPulseParams")
        .def_readonly("E0", &LaserPulseParams::E0)
        .def_readonly("omega", &LaserPulseParams::omega)
        .def_readonly("zeta", &LaserPulseParams::zeta)
        .def_property_readonly("xi", &LaserPulseParams::xi)
        .def_property_readonly("period", &LaserPulseParams::period);
    m.def("make_laser", &make_laser, py::arg("E0"), py::arg("omega"), py::arg("zeta"));
    m.def("keldysh_gamma", &keldysh_gamma, py::arg("ion"), py::arg("laser"));

    py::class_<SpinAxis>(m, "SpinAxis")
        .def(py::init(&make_axis), py::arg("theta") = 0.0, py::arg("phi") = 0.0)
        .def_readonly("theta", &SpinAxis::theta)
        .def_readonly("phi", &SpinAxis::phi)
        .def_static("propagation", &SpinAxis::propagation)
        .def_static("minus_E", &SpinAxis::minus_E)
        .def_static("minus_B", &SpinAxis::minus_B);

    py::class_<SpinObservables>(m, "SpinObservables")
        .def_readonly("F_plus", &SpinObservables::F_plus)
        .def_readonly("F_minus", &SpinObservables::F_minus)
        .def_readonly("A_t", &SpinObservables::A_t)
        .def_readonly("A_p", &SpinObservables::A_p)
        .def("__repr__", [](const SpinObservables& o) {
            return "SpinObservables(F_plus=" + std::to_string(o.F_plus) + ", F_minus=" + std::to_string(o.F_minus) +
                   ", A_t=" + std::to_string(o.A_t) + ", A_p=" + std::to_string(o.A_p) + ")";
        });

    py::class_<Scenario>(m, "Scenario")
        .def(py::init([](const IonSpecies& ion, const LaserPulseParams& laser, Variant v, const SpinAxis& axis,
                         double t_r, AverageWindow avg) { return Scenario{ion, laser, v, axis, t_r, avg}; }),
             py::arg("ion"), py::arg("laser"), py::arg("variant") = Variant::Dressed,
             py::arg("axis") = SpinAxis::propagation(), py::arg("t_r") = 0.0,
             py::arg("average") = AverageWindow::None);
    py::class_<ScenarioResult>(m, "ScenarioResult")
        .def_readonly("obs", &ScenarioResult::obs)
        .def_readonly("p", &ScenarioResult::p)
        .def_readonly("xi", &ScenarioResult::xi)
        .def_readonly("gamma", &ScenarioResult::gamma)
        .def_readonly("rho", &ScenarioResult::rho)
        .def_readonly("averaged", &ScenarioResult::averaged)
        .def_readonly("period_ok", &ScenarioResult::period_ok);
    m.def("evaluate", &evaluate, py::arg("scenario"));

    py::class_<Table1Row>(m, "Table1Row")
        .def_property_readonly("variant", [](const Table1Row& r) { return std::string(to_string(r.variant)); })
        .def_readonly("axis", &Table1Row::axis)
        .def_readonly("zeta", &Table1Row::zeta)
        .def_readonly("observable", &Table1Row::observable)
        .def_readonly("computed", &Table1Row::computed)
        .def_readonly("expected", &Table1Row::expected)
        .def_readonly("deviation", &Table1Row::deviation)
        .def_readonly("tolerance", &Table1Row::tolerance)
        .def_readonly("passed", &Table1Row::pass);
    m.def("table1", &table1, py::arg("kappa"), py::arg("xi") = 1000.0);

    py::class_<SaddleResult>(m, "SaddleResult")
        .def_readonly("eta_s", &SaddleResult::eta_s)
        .def_readonly("action", &SaddleResult::action)
        .def_readonly("residual", &SaddleResult::residual)
        .def_readonly("iterations", &SaddleResult::iterations)
        .def_readonly("used_fallback", &SaddleResult::used_fallback);
    m.def("solve_saddle", [](const Vec3& p, const IonSpecies& ion, const LaserPulseParams& L,
                             double t_r) { return solve_saddle(p, ion, L, t_r); },
          py::arg("p"), py::arg("ion"), py::arg("laser"), py::arg("t_r") = 0.0);
    m.def("most_probable_momentum", [](const IonSpecies& ion, const LaserPulseParams& L) {
        return most_probable_momentum(ion, L).p;
    }, py::arg("ion"), py::arg("laser"));
    m.def("momentum_scan", [](const IonSpecies& ion, const LaserPulseParams& L, int n, double span) {
        const auto rows = momentum_scan(ion, L, MomentumGrid{n, n, span, span});
        Eigen::MatrixXd out(rows.size(), 4);
        for (std::size_t i = 0; i < rows.size(); ++i)
            out.row(Eigen::Index(i)) << rows[i].delta_py, rows[i].delta_pz, rows[i].probability, double(rows[i].ok);
        return out;
    }, py::arg("ion"), py::arg("laser"), py::arg("n") = 101, py::arg("span") = 0.2,
       "Rows of (delta_py, delta_pz, probability, ok).");

    m.def("exact_coeffs", [](double t, const IonSpecies& ion, const LaserPulseParams& L) {
        return Mat2(exact_coeffs(t, ion, L).C);
    }, py::arg("t"), py::arg("ion"), py::arg("laser"));
    m.def("simpleman_observables", [](Variant v, double t_r, const SpinAxis& a, const IonSpecies& ion,
                                      const LaserPulseParams& L, bool improved) {
        return simpleman_observables(v, t_r, a, ion, L, improved);
    }, py::arg("variant"), py::arg("t_r"), py::arg("axis"), py::arg("ion"), py::arg("laser"),
       py::arg("improved") = false);

    m.def("intensity_to_field", &intensity_to_field);
    m.def("field_to_intensity", &field_to_intensity);
    m.def("wavelength_to_omega", &wavelength_to_omega);
    m.def("omega_to_wavelength", &omega_to_wavelength);
}
