#include "sfspin/bound_spin.hpp"

#include <cmath>

namespace sfspin {

namespace {
constexpr double c = kSpeedOfLight;

using Flat = Eigen::Matrix<cplx, 4, 1>;

Flat flatten(const Mat2& m) { return Flat(m(0, 0), m(0, 1), m(1, 0), m(1, 1)); }
Mat2 unflatten(const Flat& v)
{
    Mat2 m;
    m << v[0], v[1], v[2], v[3];
    return m;
}
}  // namespace

SpinCoeffMatrix circular_coeffs(double t, const IonSpecies& ion, const LaserPulseParams& L)
{
    if (L.zeta != 1.0) throw DomainError("circular_coeffs: requires zeta = 1");
    const double dx = ion.delta * L.xi();
    const double X = std::sqrt(1.0 + dx * dx);
    const double n = std::sqrt(dx * dx + (1.0 + X) * (1.0 + X));
    const double w = L.omega;
    SpinCoeffMatrix r;
    r.t = t;
    r.C(0, 0) = (1.0 + X) / n * std::exp(-0.5 * kI * w * t * (1.0 - X));
    r.C(1, 1) = (1.0 + X) / n * std::exp(0.5 * kI * w * t * (1.0 - X));
    r.C(0, 1) = kI * dx / n * std::exp(0.5 * kI * w * t * (1.0 + X));
    r.C(1, 0) = kI * dx / n * std::exp(-0.5 * kI * w * t * (1.0 + X));
    return r;
}

SpinCoeffMatrix linear_coeffs(double t, const IonSpecies& ion, const LaserPulseParams& L)
{
    if (L.zeta != 0.0) throw DomainError("linear_coeffs: requires zeta = 0");
    const double a = 0.5 * ion.delta * L.xi() * std::sin(L.omega * t);
    SpinCoeffMatrix r;
    r.t = t;
    r.C << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    return r;
}

SpinCoeffMatrix exact_coeffs(double t, const IonSpecies& ion, const LaserPulseParams& L)
{
    if (L.zeta == 1.0) return circular_coeffs(t, ion, L);
    if (L.zeta == 0.0) return linear_coeffs(t, ion, L);
    throw DomainError("bound spin closed forms cover zeta = 0 and zeta = 1 only");
}

Mat2 spin_coupling(double t, const IonSpecies& ion, const LaserPulseParams& L)
{
    const Vec3c E = electric_field(L, t);
    const double f = ion.delta / (2.0 * c);
    Mat2 K = Mat2::Zero();
    K(0, 1) = (kI * E[1] + E[0]) * f;
    K(1, 0) = (kI * E[1] - E[0]) * f;
    return K;
}

SpinCoeffMatrix ode_oracle(double t, const IonSpecies& ion, const LaserPulseParams& L, const OdeOptions& opt)
{
    SpinCoeffMatrix start;
    if (L.zeta == 0.0 || L.zeta == 1.0) {
        start = exact_coeffs(0.0, ion, L);
    } else {
        start.C = Mat2::Identity();
        start.extrapolated = true;
    }
    auto rhs = [&](double tt, const Flat& y) { return flatten(unflatten(y) * spin_coupling(tt, ion, L)); };
    OdeOptions o = opt;
    if (o.h_init == 0.0) o.h_init = 0.01 / (L.omega * (1.0 + ion.delta * L.xi()));
    SpinCoeffMatrix r;
    r.C = unflatten(integrate_dopri5(rhs, 0.0, t, flatten(start.C), o));
    r.t = t;
    r.extrapolated = start.extrapolated;
    return r;
}

UnderBarrierStep under_barrier_step(cplx phi, const IonSpecies& ion, const LaserPulseParams& L)
{
    const double d = ion.delta, x = L.xi(), z = L.zeta;
    const cplx p2 = phi * phi, p3 = p2 * phi;
    const cplx cubic = (d * d * d * x * x * x / 48.0 + d * x / 12.0) * p3;
    UnderBarrierStep s;
    s.phi = phi;
    s.Pi(0, 0) = 1.0 - d * d * x * x * p2 / 8.0 + kI * d * d * z * x * x * p3 / 24.0;
    s.Pi(1, 1) = 1.0 - d * d * x * x * p2 / 8.0 - kI * d * d * z * x * x * p3 / 24.0;
    s.Pi(1, 0) = -(d * x * phi / 2.0 + kI * d * z * x * p2 / 4.0 - cubic);
    s.Pi(0, 1) = d * x * phi / 2.0 - kI * d * z * x * p2 / 4.0 - cubic;
    return s;
}

Eigen::Vector2cd volterra_step(cplx phi, const Eigen::Vector2cd& initial, const IonSpecies& ion,
                               const LaserPulseParams& L)
{
    return under_barrier_step(phi, ion, L).Pi * initial;
}

double spin_period(const IonSpecies& ion, const LaserPulseParams& L)
{
    return 2.0 * kPi / (ion.delta * L.xi() * L.omega);
}

bool period_condition(double T, const IonSpecies& ion, const LaserPulseParams& L)
{
    return T * ion.delta * L.xi() * L.omega >= 2.0 * kPi * (1.0 - 1e-9) && T <= 0.5 * L.period();
}

int average_intervals(double T, const IonSpecies& ion, const LaserPulseParams& L)
{
    const double periods = T / spin_period(ion, L);
    return std::max(64, int(std::ceil(64.0 * periods)));
}

}  // namespace sfspin
