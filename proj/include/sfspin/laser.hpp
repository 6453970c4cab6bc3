#pragma once

#include "sfspin/common.hpp"

namespace sfspin {

// Monochromatic elliptically polarized plane wave travelling along +z.
struct LaserPulseParams {
    double E0 = 0.0;
    double omega = 0.0;
    double zeta = 0.0;

    double xi() const { return E0 / (kSpeedOfLight * omega); }
    double period() const { return 2.0 * kPi / omega; }
};

// Validates the invariants and returns the record.
LaserPulseParams make_laser(double E0, double omega, double zeta);

Vec3c vector_potential(const LaserPulseParams& laser, cplx eta);
Vec3c electric_field(const LaserPulseParams& laser, cplx eta);
Vec3c magnetic_field(const LaserPulseParams& laser, cplx eta);

}  // namespace sfspin
