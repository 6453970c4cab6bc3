#pragma once

#include <string>
#include <vector>

#include "sfspin/amplitudes.hpp"

namespace sfspin {

struct Scenario {
    IonSpecies ion;
    LaserPulseParams laser;
    Variant variant = Variant::Dressed;
    SpinAxis axis{};
    double t_r = 0.0;
    AverageWindow average = AverageWindow::None;
};

struct ScenarioResult {
    SpinObservables obs;
    Vec3 p = Vec3::Zero();
    double xi = 0.0;
    double gamma = 0.0;
    double rho = 0.0;
    bool averaged = false;
    bool period_ok = true;
};

// Observables at the most probable momentum (t_r = 0) or at the momentum
// mapped from the requested ionization instant.
ScenarioResult evaluate(const Scenario& sc);

struct Table1Row {
    Variant variant;
    std::string axis;  // "k", "-E", "-B"
    double zeta;
    std::string observable;  // "F+", "F-", "At", "Ap"
    double computed;
    double expected;
    double deviation;
    double tolerance;
    bool pass;
};

// Strong-field table at E0 = Ea/30 and omega = E0/(c xi): standard variant at
// the peak instant, dressed variant averaged over one precession period.
std::vector<Table1Row> table1(double kappa, double xi = 1000.0);

// Atomic-unit conversions.
double intensity_to_field(double intensity_w_cm2);
double field_to_intensity(double E0);
double wavelength_to_omega(double lambda_nm);
double omega_to_wavelength(double omega);

}  // namespace sfspin
