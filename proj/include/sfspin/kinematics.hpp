#pragma once

#include "sfspin/laser.hpp"
#include "sfspin/ode.hpp"

namespace sfspin {

struct ParticleState {
    Vec3 p = Vec3::Zero();
    double energy = kSpeedOfLight * kSpeedOfLight;
    double eta = 0.0;
};

// On-shell state with energy sqrt(c^4 + c^2 p^2).
ParticleState make_state(const Vec3& p, double eta);

double free_energy(const Vec3& p);

// Light-front invariant eps/c^2 - p_z/c.
double lambda_invariant(const ParticleState& s);

// Closed-form plane-wave evolution from initial.eta to eta.
ParticleState momentum_at_phase(const ParticleState& initial, double eta, const LaserPulseParams& laser);

// Numerical integration of the Lorentz force written in the phase variable.
ParticleState lorentz_oracle(const ParticleState& initial, double eta, const LaserPulseParams& laser,
                             const OdeOptions& opt = {1e-12, 0.0, 1e-14, 2000000});

}  // namespace sfspin
