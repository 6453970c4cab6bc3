#pragma once

#include <cmath>
#include <random>

#include "sfspin/ion.hpp"

namespace testing_support {

inline constexpr double c = sfspin::kSpeedOfLight;

// Charge that yields a prescribed rho = sqrt(2 Ip) / c.
inline sfspin::IonSpecies ion_for_rho(double rho)
{
    const double Ip = 0.5 * rho * rho * c * c;
    return sfspin::make_ion(std::sqrt(2.0 * Ip - Ip * Ip / (c * c)));
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline std::mt19937_64& rng()
{
    static std::mt19937_64 g(20240611);
    return g;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

}  // namespace testing_support
