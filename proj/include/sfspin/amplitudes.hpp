#pragma once

#include "sfspin/bound_spin.hpp"
#include "sfspin/saddle.hpp"

namespace sfspin {

struct DiracAlgebra {
    static Mat2 sigma(int i);  // i = 0, 1, 2 for x, y, z
    static Mat4 alpha(int i);
    static Mat4 beta();
};

struct SpinAxis {
    double theta = 0.0;
    double phi = 0.0;

    static SpinAxis propagation() { return {0.0, 0.0}; }
    static SpinAxis minus_E() { return {kPi / 2, 0.0}; }  // -E(0), along +x
    static SpinAxis minus_B() { return {kPi / 2, kPi / 2}; }  // -B(0), along +y
};

SpinAxis make_axis(double theta, double phi);

// D(theta, phi) = [[cos, e^{-i phi} sin], [e^{i phi} sin, -cos]] of theta/2.
Mat2 wigner_d(const SpinAxis& axis);

// M(s, s') is the amplitude for initial spin s and final spin s' (0 = +, 1 = -).
// The physical amplitude is M * exp(log_scale); the scale keeps deep tunneling
// exponents representable and drops out of every observable.
struct TransitionMatrix {
    Mat2 M = Mat2::Zero();
    Variant variant = Variant::Standard;
    SpinAxis axis{};
    double t_r = 0.0;
    double log_scale = 0.0;
};

struct RateMatrix {
    Eigen::Matrix2d W = Eigen::Matrix2d::Zero();
    bool averaged = false;
    bool period_ok = true;
    double log_scale = 0.0;  // physical rate is W * exp(log_scale)
};

struct SpinObservables {
    double F_plus = 0.0;
    double F_minus = 0.0;
    double A_t = 0.0;
    double A_p = 0.0;
};

// Free-electron bispinor normalized with sqrt((eps + c^2) / 2c^2).
Spinor4 volkov_bispinor(const Vec3& p, int s);

// Bound bispinor at the saddle with q-hat = q / (i kappa).
Spinor4 bound_bispinor_tilde_u(cplx eta_s, const Vec3& p, const IonSpecies& ion, const LaserPulseParams& laser,
                               int s);

// Scalar factor shared by all spin channels, returned as (value, log_scale).
struct ScalarPrefactor {
    cplx value;
    double log_scale;
};
ScalarPrefactor amplitude_prefactor(const Vec3& p, const SaddleResult& saddle, const IonSpecies& ion,
                                    const LaserPulseParams& laser);

// Spin structure of the standard amplitude, v_{s'}^dagger (1 - alpha_z) u_s.
Mat2 standard_spin_factor(const Vec3& p, cplx eta_s, const IonSpecies& ion, const LaserPulseParams& laser);

// Spin structure of the dressed amplitude before the bound coefficients:
// S(s'', s') = v_{s'}^dagger [1 + alpha.A (1 + alpha_z) / 2 c lambda] U_{s''}.
Mat2 dressed_spin_factor(const Vec3& p, cplx eta_s, double t_r, const IonSpecies& ion,
                         const LaserPulseParams& laser);

TransitionMatrix amplitude_standard(const Vec3& p, double t_r, const IonSpecies& ion, const LaserPulseParams& laser);
TransitionMatrix amplitude_dressed(const Vec3& p, double t_r, const IonSpecies& ion, const LaserPulseParams& laser);
TransitionMatrix amplitude(Variant v, const Vec3& p, double t_r, const IonSpecies& ion, const LaserPulseParams& laser);

// M(axis) = D^T M_z D^* in the (initial, final) index order.
TransitionMatrix rotate_to_axis(const TransitionMatrix& Mz, const SpinAxis& axis);

RateMatrix rate_matrix(const TransitionMatrix& M, const LaserPulseParams& laser);

// Rates at an arbitrary axis from the z-axis amplitudes by the explicit four-index sum.
RateMatrix rate_matrix_direct(const TransitionMatrix& Mz, const SpinAxis& axis, const LaserPulseParams& laser);

enum class AverageWindow { None, SpinPeriod, LaserPeriod };

// Window length for the option; the spin-period window collapses to 0 when xi <= 1.
double window_length(AverageWindow w, const IonSpecies& ion, const LaserPulseParams& laser);

// Dressed rates averaged over t_r in [t_center - T/2, t_center + T/2] with the
// saddle-dependent factors frozen at t_center.
RateMatrix averaged_rate_matrix(Variant v, const SpinAxis& axis, const Vec3& p, const IonSpecies& ion,
                                const LaserPulseParams& laser, double T, double t_center = 0.0);

SpinObservables observables(const RateMatrix& W);

}  // namespace sfspin
