#pragma once

#include <vector>

#include "sfspin/ion.hpp"
#include "sfspin/kinematics.hpp"

namespace sfspin {

struct SaddleResult {
    cplx eta_s;
    cplx action;      // contracted action from Re(eta_s) to eta_s
    double residual;  // |q(eta_s)^2 + kappa^2|
    int iterations = 0;
    bool used_fallback = false;
};

struct MomentumPoint {
    Vec3 p = Vec3::Zero();
    Vec3 exit_p = Vec3::Zero();
    bool tunneling_regime = true;  // gamma < 1
};

struct SaddleOptions {
    double tol = 1e-10;
    int max_iter = 50;
};

// lambda = eps/c^2 - p_z/c of a free electron with momentum p.
double lambda_of(const Vec3& p);

Vec3c kinetic_momentum(const Vec3& p, cplx eta, const IonSpecies& ion, const LaserPulseParams& laser);

// q(eta)^2 + kappa^2
cplx saddle_function(const Vec3& p, cplx eta, const IonSpecies& ion, const LaserPulseParams& laser);

// (1/2 lambda) * integral of (q^2 + kappa^2) along the straight segment eta_ref -> eta.
cplx contracted_action(const Vec3& p, cplx eta, double eta_ref, const IonSpecies& ion,
                       const LaserPulseParams& laser);
// Reference point Re(eta).
cplx contracted_action(const Vec3& p, cplx eta, const IonSpecies& ion, const LaserPulseParams& laser);

// Closed form of the action at a saddle with p_x = 0 and Re(eta_s) = 0.
cplx contracted_action_at_saddle(double p_y, double lambda, cplx eta_s, const LaserPulseParams& laser);

// Leading-order analytic saddle i sqrt(2Ip)/E0 [1 - 5Ip/36c^2 + gamma^2 (zeta^2-3)/18].
cplx analytic_saddle(const IonSpecies& ion, const LaserPulseParams& laser);

SaddleResult solve_saddle(const Vec3& p, const IonSpecies& ion, const LaserPulseParams& laser, double t_r = 0.0,
                          const SaddleOptions& opt = {});

MomentumPoint most_probable_momentum(const IonSpecies& ion, const LaserPulseParams& laser);

// Final momentum of an electron released at t_r with the peak exit conditions
// carried along the instantaneous vector potential.
Vec3 final_momentum_for_instant(double t_r, const IonSpecies& ion, const LaserPulseParams& laser);

struct GradientResidual {
    double eq_py = 0.0;  // p_y^2 - 2p_z^2 - Ip + c p_z (3 + Ip/c^2)
    double eq_pz = 0.0;  // 6 E0 p_y + zeta omega (5p_y^2 - p_z^2 - 2Ip(1 - p_z/c))
    // Same equations in momenta measured in units of c.
    double scaled_py() const;
    double scaled_pz(double omega) const;
};

GradientResidual gradient_conditions(const Vec3& exit_p, const IonSpecies& ion, const LaserPulseParams& laser);

struct TunnelingExponent {
    double closed_form = 0.0;
    double numeric = 0.0;
};

TunnelingExponent tunneling_exponent(const IonSpecies& ion, const LaserPulseParams& laser);

struct MomentumGrid {
    int n_y = 101;
    int n_z = 101;
    double span_y = 0.2;
    double span_z = 0.2;
};

struct ScanRow {
    double delta_py = 0.0;
    double delta_pz = 0.0;
    double p_y = 0.0;
    double p_z = 0.0;
    double probability = 0.0;  // normalized to the grid maximum; 0 for failed points
    bool ok = false;
};

// Row-major over (delta_py, delta_pz) around the most probable momentum.
std::vector<ScanRow> momentum_scan(const IonSpecies& ion, const LaserPulseParams& laser, const MomentumGrid& grid);

}  // namespace sfspin
