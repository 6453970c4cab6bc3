#include "sfspin/amplitudes.hpp"

#include <cmath>

namespace sfspin {

namespace {
constexpr double c = kSpeedOfLight;

Eigen::Vector2cd chi(int s) { return s == 0 ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0); }

Mat2 dot_sigma(const Vec3c& v)
{
    return v[0] * DiracAlgebra::sigma(0) + v[1] * DiracAlgebra::sigma(1) + v[2] * DiracAlgebra::sigma(2);
}

Mat4 dot_alpha(const Vec3c& v)
{
    return v[0] * DiracAlgebra::alpha(0) + v[1] * DiracAlgebra::alpha(1) + v[2] * DiracAlgebra::alpha(2);
}

void check_zeta_exact(const LaserPulseParams& L)
{
    if (L.zeta != 0.0 && L.zeta != 1.0) throw DomainError("dressed variant requires zeta = 0 or zeta = 1");
}
}  // namespace

Mat2 DiracAlgebra::sigma(int i)
{
    Mat2 m;
    switch (i) {
    case 0: m << 0, 1, 1, 0; break;
    case 1: m << 0, -kI, kI, 0; break;
    case 2: m << 1, 0, 0, -1; break;
    default: throw DomainError("sigma: index must be 0, 1 or 2");
    }
    return m;
}

Mat4 DiracAlgebra::alpha(int i)
{
    Mat4 a = Mat4::Zero();
    a.topRightCorner<2, 2>() = sigma(i);
    a.bottomLeftCorner<2, 2>() = sigma(i);
    return a;
}

Mat4 DiracAlgebra::beta()
{
    Mat4 b = Mat4::Identity();
    b(2, 2) = b(3, 3) = -1.0;
    return b;
}

SpinAxis make_axis(double theta, double phi)
{
    if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("axis: theta must lie in [0, pi]");
    if (!std::isfinite(phi)) throw DomainError("axis: phi must be finite");
    return {theta, phi};
}

Mat2 wigner_d(const SpinAxis& a)
{
    const double ct = std::cos(0.5 * a.theta), st = std::sin(0.5 * a.theta);
    Mat2 D;
    D << ct, std::exp(-kI * a.phi) * st, std::exp(kI * a.phi) * st, -ct;
    return D;
}

Spinor4 volkov_bispinor(const Vec3& p, int s)
{
    const double eps = free_energy(p);
    Spinor4 v;
    v.head<2>() = chi(s);
    v.tail<2>() = (c / (eps + c * c)) * dot_sigma(p.cast<cplx>()) * chi(s);
    return std::sqrt((eps + c * c) / (2.0 * c * c)) * v;
}

Spinor4 bound_bispinor_tilde_u(cplx eta_s, const Vec3& p, const IonSpecies& ion, const LaserPulseParams& L, int s)
{
    const Vec3c qhat = kinetic_momentum(p, eta_s, ion, L) / (kI * ion.kappa);
    Spinor4 u;
    u.head<2>() = chi(s);
    u.tail<2>() = kI * (ion.Ip / (c * ion.kappa)) * dot_sigma(qhat) * chi(s);
    return u;
}

ScalarPrefactor amplitude_prefactor(const Vec3& p, const SaddleResult& sd, const IonSpecies& ion,
                                    const LaserPulseParams& L)
{
    const double k = ion.kappa, Ip = ion.Ip, r = Ip / (c * c);
    const double eps = free_energy(p);
    const double lam = lambda_of(p);
    const cplx N = -kI * std::sqrt(c * c / eps) * std::pow(k, 1.5) / std::sqrt(kPi) *
                   std::sqrt((2.0 - r) / std::tgamma(3.0 - 2.0 * r)) * std::pow(2.0 * k, -r);
    const cplx Nt = kI * N * std::pow(2.0 * kPi * kI, 1.5) * k * std::exp(2.0 * r) * (1.0 - r / 6.0) *
                    std::pow(cplx(-4.0 * Ip, 0.0), 1.0 - r);
    const Vec3c q = kinetic_momentum(p, sd.eta_s, ion, L);
    const Vec3c E = electric_field(L, sd.eta_s);
    const cplx qE = (q.array() * E.array()).sum();
    const cplx Emod = std::sqrt((E.array() * E.array()).sum());
    const cplx value = Nt * std::exp(kI * sd.action.real()) / std::pow(qE, 1.5) * std::pow(Emod, r) / std::sqrt(lam);
    return {value, -sd.action.imag()};
}

Mat2 standard_spin_factor(const Vec3& p, cplx eta_s, const IonSpecies& ion, const LaserPulseParams& L)
{
    const Mat4 O = Mat4::Identity() - DiracAlgebra::alpha(2);
    Mat2 S;
    for (int s = 0; s < 2; ++s) {
        const Spinor4 u = bound_bispinor_tilde_u(eta_s, p, ion, L, s);
        for (int sp = 0; sp < 2; ++sp) S(s, sp) = volkov_bispinor(p, sp).adjoint() * O * u;
    }
    return S;
}

Mat2 dressed_spin_factor(const Vec3& p, cplx eta_s, double t_r, const IonSpecies& ion, const LaserPulseParams& L)
{
    const double lam = lambda_of(p);
    const Mat4 O = Mat4::Identity() + dot_alpha(vector_potential(L, eta_s)) *
                                          (Mat4::Identity() + DiracAlgebra::alpha(2)) / (2.0 * c * lam);
    const Mat2 Pi = under_barrier_step(L.omega * (eta_s - t_r), ion, L).Pi;
    const Spinor4 u[2] = {bound_bispinor_tilde_u(eta_s, p, ion, L, 0), bound_bispinor_tilde_u(eta_s, p, ion, L, 1)};
    Mat2 S;
    for (int s2 = 0; s2 < 2; ++s2) {
        const Spinor4 U = Pi(0, s2) * u[0] + Pi(1, s2) * u[1];
        for (int sp = 0; sp < 2; ++sp) S(s2, sp) = volkov_bispinor(p, sp).adjoint() * O * U;
    }
    return S;
}

TransitionMatrix amplitude_standard(const Vec3& p, double t_r, const IonSpecies& ion, const LaserPulseParams& L)
{
    const SaddleResult sd = solve_saddle(p, ion, L, t_r);
    const ScalarPrefactor pf = amplitude_prefactor(p, sd, ion, L);
    TransitionMatrix T;
    T.M = pf.value * standard_spin_factor(p, sd.eta_s, ion, L);
    T.variant = Variant::Standard;
    T.t_r = t_r;
    T.log_scale = pf.log_scale;
    return T;
}

TransitionMatrix amplitude_dressed(const Vec3& p, double t_r, const IonSpecies& ion, const LaserPulseParams& L)
{
    check_zeta_exact(L);
    const SaddleResult sd = solve_saddle(p, ion, L, t_r);
    const ScalarPrefactor pf = amplitude_prefactor(p, sd, ion, L);
    TransitionMatrix T;
    T.M = pf.value * exact_coeffs(t_r, ion, L).C * dressed_spin_factor(p, sd.eta_s, t_r, ion, L);
    T.variant = Variant::Dressed;
    T.t_r = t_r;
    T.log_scale = pf.log_scale;
    return T;
}

TransitionMatrix amplitude(Variant v, const Vec3& p, double t_r, const IonSpecies& ion, const LaserPulseParams& L)
{
    return v == Variant::Standard ? amplitude_standard(p, t_r, ion, L) : amplitude_dressed(p, t_r, ion, L);
}

TransitionMatrix rotate_to_axis(const TransitionMatrix& Mz, const SpinAxis& axis)
{
    const Mat2 D = wigner_d(axis);
    TransitionMatrix R = Mz;
    R.M = D.transpose() * Mz.M * D.conjugate();
    R.axis = axis;
    return R;
}

RateMatrix rate_matrix(const TransitionMatrix& M, const LaserPulseParams& L)
{
    RateMatrix R;
    R.W = (L.omega / kPi) * M.M.cwiseAbs2();
    R.log_scale = 2.0 * M.log_scale;
    return R;
}

RateMatrix rate_matrix_direct(const TransitionMatrix& Mz, const SpinAxis& axis, const LaserPulseParams& L)
{
    const Mat2 D = wigner_d(axis);
    const Mat2& M = Mz.M;
    RateMatrix R;
    for (int s = 0; s < 2; ++s)
        for (int sp = 0; sp < 2; ++sp) {
            cplx acc = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k)
                        for (int l = 0; l < 2; ++l)
                            acc += std::conj(D(j, sp)) * D(l, sp) * M(i, j) * std::conj(M(k, l)) * D(i, s) *
                                   std::conj(D(k, s));
            R.W(s, sp) = (L.omega / kPi) * acc.real();
        }
    R.log_scale = 2.0 * Mz.log_scale;
    return R;
}

double window_length(AverageWindow w, const IonSpecies& ion, const LaserPulseParams& L)
{
    switch (w) {
    case AverageWindow::None: return 0.0;
    case AverageWindow::SpinPeriod: return L.xi() > 1.0 ? spin_period(ion, L) : 0.0;
    case AverageWindow::LaserPeriod: return L.period();
    }
    return 0.0;
}

RateMatrix averaged_rate_matrix(Variant v, const SpinAxis& axis, const Vec3& p, const IonSpecies& ion,
                                const LaserPulseParams& L, double T, double t_center)
{
    if (v != Variant::Dressed) throw DomainError("averaged_rate_matrix: only the dressed variant is averaged");
    check_zeta_exact(L);
    if (T < 0.0) throw DomainError("averaged_rate_matrix: window must be nonnegative");
    const SaddleResult sd = solve_saddle(p, ion, L, t_center);
    const ScalarPrefactor pf = amplitude_prefactor(p, sd, ion, L);
    const Mat2 S = pf.value * dressed_spin_factor(p, sd.eta_s, t_center, ion, L);
    const Mat2 D = wigner_d(axis);
    auto rates = [&](double t) -> Eigen::Matrix2d {
        const Mat2 M = D.transpose() * (exact_coeffs(t, ion, L).C * S) * D.conjugate();
        return (L.omega / kPi) * M.cwiseAbs2();
    };
    RateMatrix R;
    R.W = window_mean(rates, T, t_center, T > 0.0 ? average_intervals(T, ion, L) : 2);
    R.averaged = T > 0.0;
    R.period_ok = T <= 0.0 || period_condition(T, ion, L);
    R.log_scale = 2.0 * pf.log_scale;
    return R;
}

SpinObservables observables(const RateMatrix& R)
{
    const auto& W = R.W;
    const double WT = 0.5 * W.sum();
    if (!(WT > 0.0) || !std::isfinite(WT)) throw NumericalError("observables: total rate vanishes");
    SpinObservables o;
    o.A_t = (W(0, 0) + W(0, 1) - W(1, 0) - W(1, 1)) / WT;
    o.A_p = (W(0, 0) + W(1, 0) - W(0, 1) - W(1, 1)) / WT;
    o.F_plus = W(0, 1) / WT;
    o.F_minus = W(1, 0) / WT;
    return o;
}

}  // namespace sfspin
