#include "sfspin/kinematics.hpp"

#include <cmath>

namespace sfspin {

namespace {
constexpr double c = kSpeedOfLight;

Vec3 real_vec(const Vec3c& v) { return v.real(); }
}  // namespace

double free_energy(const Vec3& p) { return c * std::sqrt(c * c + p.squaredNorm()); }

ParticleState make_state(const Vec3& p, double eta) { return ParticleState{p, free_energy(p), eta}; }

double lambda_invariant(const ParticleState& s)
{
    // eps/c^2 - p_z/c = (c^2 + p_perp^2) / (c (eps/c + p_z)); no cancellation for p_z >> c
    const double pz = s.p.z();
    const double pperp2 = s.p.x() * s.p.x() + s.p.y() * s.p.y();
    if (pz > 0) return (c * c + pperp2) / (c * (s.energy / c + pz));
    return s.energy / (c * c) - pz / c;
}

ParticleState momentum_at_phase(const ParticleState& initial, double eta, const LaserPulseParams& laser)
{
    const double lam = lambda_invariant(initial);
    const Vec3 dA = real_vec(vector_potential(laser, eta) - vector_potential(laser, initial.eta));
    const Vec3 kz(0.0, 0.0, 1.0);
    ParticleState out;
    out.p = initial.p + dA + kz * ((initial.p + 0.5 * dA).dot(dA) / (lam * c));
    out.energy = initial.energy + (initial.p + 0.5 * dA).dot(dA) / lam;
    out.eta = eta;
    return out;
}

ParticleState lorentz_oracle(const ParticleState& initial, double eta, const LaserPulseParams& laser,
                             const OdeOptions& opt)
{
    using State = Eigen::Vector4d;
    // y = (p, eps); d/deta = (eps / (c^2 lambda)) * d/dt with the electron charge -1
    auto rhs = [&](double et, const State& y) {
        const Vec3 p = y.head<3>();
        const double eps = y[3];
        const double lam = eps / (c * c) - p.z() / c;
        const Vec3 E = electric_field(laser, et).real();
        const Vec3 B = magnetic_field(laser, et).real();
        const Vec3 v = (c * c / eps) * p;
        const double dtdeta = eps / (c * c * lam);
        State d;
        d.head<3>() = dtdeta * (-E - v.cross(B) / c);
        d[3] = dtdeta * (-v.dot(E));
        return d;
    };
    State y0;
    y0 << initial.p, initial.energy;
    OdeOptions o = opt;
    if (o.h_init == 0.0) o.h_init = 0.01 / laser.omega;
    const State y = integrate_dopri5(rhs, initial.eta, eta, y0, o);
    return ParticleState{y.head<3>(), y[3], eta};
}

}  // namespace sfspin
