#pragma once

#include <cmath>

#include "sfspin/bound_spin.hpp"

namespace testing_support {

// Analytic time derivative of the exact coefficient matrices.
inline sfspin::Mat2 circular_derivative(double t, const sfspin::IonSpecies& ion, const sfspin::LaserPulseParams& L)
{
    const sfspin::Mat2 C = circular_coeffs(t, ion, L).C;
    const double dx = ion.delta * L.xi(), X = std::sqrt(1 + dx * dx), w = L.omega;
    sfspin::Mat2 D;
    D(0, 0) = C(0, 0) * (-0.5 * sfspin::kI * w * (1 - X));
    D(1, 1) = C(1, 1) * (0.5 * sfspin::kI * w * (1 - X));
    D(0, 1) = C(0, 1) * (0.5 * sfspin::kI * w * (1 + X));
    D(1, 0) = C(1, 0) * (-0.5 * sfspin::kI * w * (1 + X));
    return D;
}

inline sfspin::Mat2 linear_derivative(double t, const sfspin::IonSpecies& ion, const sfspin::LaserPulseParams& L)
{
    const double a = 0.5 * ion.delta * L.xi() * std::sin(L.omega * t);
    const double da = 0.5 * ion.delta * L.xi() * L.omega * std::cos(L.omega * t);
    sfspin::Mat2 D;
    D << -std::sin(a), -std::cos(a), std::cos(a), -std::sin(a);
    return da * D;
}

}  // namespace testing_support
