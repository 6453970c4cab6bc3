#include "sfspin/ion.hpp"

#include <cmath>

namespace sfspin {

IonSpecies make_ion(double kappa)
{
    constexpr double c = kSpeedOfLight;
    if (!(kappa > 0.0) || !(kappa < c)) throw DomainError("ion: kappa must lie in (0, c)");
    IonSpecies ion;
    ion.kappa = kappa;
    // c^2 - sqrt(c^4 - c^2 k^2) written without cancellation for small kappa
    const double k2 = kappa * kappa;
    ion.Ip = k2 / (1.0 + std::sqrt(1.0 - k2 / (c * c)));
    ion.eps0 = c * c - ion.Ip;
    ion.rho = std::sqrt(2.0 * ion.Ip) / c;
    ion.delta = 1.0 - 2.0 * ion.Ip / (3.0 * c * c);
    ion.Ea = std::pow(2.0 * ion.Ip, 1.5);
    return ion;
}

double keldysh_gamma(const IonSpecies& ion, const LaserPulseParams& laser)
{
    return std::sqrt(2.0 * ion.Ip) * laser.omega / laser.E0;
}

}  // namespace sfspin
