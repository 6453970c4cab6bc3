#pragma once

#include <vector>

#include "sfspin/amplitudes.hpp"

namespace sfspin {

enum class Stage { Bound, Tunnel, Continuum };

// 2x2 propagator acting on column spinors, U(s', s) = <s'|U|s>.
struct StagePropagator {
    Mat2 U = Mat2::Identity();
    Stage stage = Stage::Bound;
    Variant variant = Variant::Standard;
    double t_r = 0.0;
};

// exp(n . sigma) for a complex 3-vector n.
Mat2 pauli_exp(const Vec3c& n);

StagePropagator propagator_continuum(double t_r, const LaserPulseParams& laser);
// The scalar tunneling amplitude is omitted; only the spin structure is kept.
StagePropagator propagator_tunnel_standard(double t_r, const IonSpecies& ion, const LaserPulseParams& laser);
StagePropagator propagator_tunnel_dressed(double t_r);
StagePropagator propagator_bound(Variant v, double t_r, const IonSpecies& ion, const LaserPulseParams& laser);
// Rest-frame corrected under-barrier step at the peak instant, exp(sigma_y rho^3 / 12).
StagePropagator propagator_tunnel_improved(const IonSpecies& ion, const LaserPulseParams& laser);

// U_C U_T U_B at the requested axis. `improved` swaps in the rest-frame
// tunnel step (dressed variant, t_r = 0 only).
TransitionMatrix transition_simpleman(Variant v, double t_r, const SpinAxis& axis, const IonSpecies& ion,
                                      const LaserPulseParams& laser, bool improved = false);

SpinObservables simpleman_observables(Variant v, double t_r, const SpinAxis& axis, const IonSpecies& ion,
                                      const LaserPulseParams& laser, bool improved = false);

// Ratio of rate means over one laser period, 1024-point uniform rule.
SpinObservables simpleman_period_mean(Variant v, const SpinAxis& axis, const IonSpecies& ion,
                                      const LaserPulseParams& laser);

// Ratio of rate means over [center - T/2, center + T/2]. Only the bound stage is
// averaged; the continuum and tunnel stages are held at the window centre.
SpinObservables simpleman_window_mean(Variant v, const SpinAxis& axis, double center, double T,
                                      const IonSpecies& ion, const LaserPulseParams& laser);

struct SimplemanRow {
    double t_r = 0.0;
    SpinObservables obs;
};

std::vector<SimplemanRow> observables_vs_ionization_time(Variant v, const SpinAxis& axis, const IonSpecies& ion,
                                                         const LaserPulseParams& laser,
                                                         const std::vector<double>& t_grid,
                                                         AverageWindow average = AverageWindow::None,
                                                         bool improved = false);

}  // namespace sfspin
