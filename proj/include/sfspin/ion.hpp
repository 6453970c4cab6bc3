#pragma once

#include "sfspin/laser.hpp"

namespace sfspin {

// Hydrogenlike ion in its relativistic 1s ground state.
struct IonSpecies {
    double kappa = 0.0;
    double Ip = 0.0;
    double eps0 = 0.0;
    double delta = 0.0;
    double rho = 0.0;
    double Ea = 0.0;
};

IonSpecies make_ion(double kappa);

// Keldysh parameter sqrt(2 Ip) omega / E0.
double keldysh_gamma(const IonSpecies& ion, const LaserPulseParams& laser);

}  // namespace sfspin
