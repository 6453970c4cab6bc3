#include "sfspin/laser.hpp"

#include <cmath>

namespace sfspin {

LaserPulseParams make_laser(double E0, double omega, double zeta)
{
    if (!(E0 > 0.0) || !std::isfinite(E0)) throw DomainError("laser: E0 must be positive");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("laser: omega must be positive");
    if (!(zeta >= 0.0 && zeta <= 1.0)) throw DomainError("laser: zeta must lie in [0, 1]");
    return LaserPulseParams{E0, omega, zeta};
}

Vec3c vector_potential(const LaserPulseParams& L, cplx eta)
{
    const cplx ph = L.omega * eta;
    const double a = L.E0 / L.omega;
    return Vec3c(a * std::sin(ph), -L.zeta * a * std::cos(ph), 0.0);
}

Vec3c electric_field(const LaserPulseParams& L, cplx eta)
{
    const cplx ph = L.omega * eta;
    return Vec3c(-L.E0 * std::cos(ph), -L.zeta * L.E0 * std::sin(ph), 0.0);
}

Vec3c magnetic_field(const LaserPulseParams& L, cplx eta)
{
    const cplx ph = L.omega * eta;
    return Vec3c(L.zeta * L.E0 * std::sin(ph), -L.E0 * std::cos(ph), 0.0);
}

}  // namespace sfspin
