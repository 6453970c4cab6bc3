#pragma once

#include <algorithm>
#include <cmath>

#include "sfspin/ion.hpp"
#include "sfspin/ode.hpp"

namespace sfspin {

// C(s, s') with index 0 for spin up (+) and 1 for spin down (-).
struct SpinCoeffMatrix {
    Mat2 C = Mat2::Identity();
    double t = 0.0;
    bool extrapolated = false;  // oracle run for 0 < zeta < 1
};

struct UnderBarrierStep {
    Mat2 Pi = Mat2::Identity();
    cplx phi = 0.0;
};

SpinCoeffMatrix circular_coeffs(double t, const IonSpecies& ion, const LaserPulseParams& laser);
SpinCoeffMatrix linear_coeffs(double t, const IonSpecies& ion, const LaserPulseParams& laser);
// Dispatches on zeta in {0, 1}.
SpinCoeffMatrix exact_coeffs(double t, const IonSpecies& ion, const LaserPulseParams& laser);

// Coupling matrix K with dC/dt = C K: K(+,-) = F+, K(-,+) = F-.
Mat2 spin_coupling(double t, const IonSpecies& ion, const LaserPulseParams& laser);

SpinCoeffMatrix ode_oracle(double t, const IonSpecies& ion, const LaserPulseParams& laser,
                           const OdeOptions& opt = {1e-12, 0.0, 1e-14, 2000000});

// Pi(phi, 0): column c(phi) = Pi c(0) for the first Volterra iteration.
UnderBarrierStep under_barrier_step(cplx phi, const IonSpecies& ion, const LaserPulseParams& laser);
Eigen::Vector2cd volterra_step(cplx phi, const Eigen::Vector2cd& initial, const IonSpecies& ion,
                               const LaserPulseParams& laser);

// Precession period 2 pi / (delta xi omega) of the bound spin in a strong field.
double spin_period(const IonSpecies& ion, const LaserPulseParams& laser);

// Soft check of 1/(delta xi omega) << T << T0.
bool period_condition(double T, const IonSpecies& ion, const LaserPulseParams& laser);

// Composite Simpson mean of f over [center - T/2, center + T/2]; works for any
// value type closed under + and scalar *. T = 0 returns f(center).
template <class F>
auto window_mean(F&& f, double T, double center, int intervals)
{
    using R = decltype(f(center));
    if (T <= 0.0) return R(f(center));
    const int n = std::max(2, intervals + (intervals & 1));
    const double h = T / n;
    const double a = center - 0.5 * T;
    R sum = f(a) + f(a + T);
    for (int k = 1; k < n; ++k) sum = sum + (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    return R(sum * (h / (3.0 * T)));
}

// Intervals giving at least 64 samples per precession period over the window.
int average_intervals(double T, const IonSpecies& ion, const LaserPulseParams& laser);

struct AverageResult {
    double value = 0.0;
    bool period_ok = true;
};

template <class F>
AverageResult spin_average(F&& f, double T, double center, const IonSpecies& ion, const LaserPulseParams& laser)
{
    AverageResult r;
    r.value = window_mean(f, T, center, average_intervals(T, ion, laser));
    r.period_ok = T <= 0.0 || period_condition(T, ion, laser);
    return r;
}

}  // namespace sfspin
