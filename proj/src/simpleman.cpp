#include "sfspin/simpleman.hpp"

#include <cmath>

namespace sfspin {

namespace {
Mat2 sx() { return DiracAlgebra::sigma(0); }
Mat2 sy() { return DiracAlgebra::sigma(1); }

Eigen::Matrix2d rates_of(const Mat2& M) { return M.cwiseAbs2(); }

SpinObservables ratio(const Eigen::Matrix2d& W)
{
    RateMatrix R;
    R.W = W;
    return observables(R);
}
}  // namespace

Mat2 pauli_exp(const Vec3c& n)
{
    const cplx s = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    const Mat2 ns = n[0] * sx() + n[1] * sy() + n[2] * DiracAlgebra::sigma(2);
    const cplx sinc = std::abs(s) < 1e-8 ? 1.0 + s * s / 6.0 : std::sinh(s) / s;
    return std::cosh(s) * Mat2::Identity() + sinc * ns;
}

StagePropagator propagator_continuum(double t_r, const LaserPulseParams& L)
{
    const double ph = L.omega * t_r;
    StagePropagator P;
    P.U = Mat2::Identity() - kI * (0.5 * L.xi()) * (std::sin(ph) * sy() + L.zeta * std::cos(ph) * sx());
    P.stage = Stage::Continuum;
    P.t_r = t_r;
    return P;
}

StagePropagator propagator_tunnel_standard(double t_r, const IonSpecies& ion, const LaserPulseParams& L)
{
    const double ph = L.omega * t_r;
    StagePropagator P;
    P.U = pauli_exp(Vec3c(-0.5 * ion.rho * L.zeta * std::sin(ph), 0.5 * ion.rho * std::cos(ph), 0.0));
    P.stage = Stage::Tunnel;
    P.t_r = t_r;
    return P;
}

StagePropagator propagator_tunnel_dressed(double t_r)
{
    StagePropagator P;
    P.stage = Stage::Tunnel;
    P.variant = Variant::Dressed;
    P.t_r = t_r;
    return P;
}

StagePropagator propagator_bound(Variant v, double t_r, const IonSpecies& ion, const LaserPulseParams& L)
{
    (void)ion;
    StagePropagator P;
    P.stage = Stage::Bound;
    P.variant = v;
    P.t_r = t_r;
    if (v == Variant::Standard) return P;
    const double x = L.xi(), ph = L.omega * t_r;
    if (L.zeta == 0.0) {
        const double a = 0.5 * x * std::sin(ph);
        P.U = std::cos(a) * Mat2::Identity() + kI * std::sin(a) * sy();
    } else if (L.zeta == 1.0) {
        const double X = std::sqrt(1.0 + x * x);
        const double n = std::sqrt(x * x + (1.0 + X) * (1.0 + X));
        P.U(0, 0) = (1.0 + X) / n * std::exp(-0.5 * kI * ph * (1.0 - X));
        P.U(1, 1) = (1.0 + X) / n * std::exp(0.5 * kI * ph * (1.0 - X));
        P.U(0, 1) = kI * x / n * std::exp(-0.5 * kI * ph * (1.0 + X));
        P.U(1, 0) = kI * x / n * std::exp(0.5 * kI * ph * (1.0 + X));
    } else {
        throw DomainError("dressed bound propagator requires zeta = 0 or zeta = 1");
    }
    return P;
}

StagePropagator propagator_tunnel_improved(const IonSpecies& ion, const LaserPulseParams& L)
{
    (void)L;
    StagePropagator P;
    P.U = pauli_exp(Vec3c(0.0, std::pow(ion.rho, 3) / 12.0, 0.0));
    P.stage = Stage::Tunnel;
    P.variant = Variant::Dressed;
    return P;
}

TransitionMatrix transition_simpleman(Variant v, double t_r, const SpinAxis& axis, const IonSpecies& ion,
                                      const LaserPulseParams& L, bool improved)
{
    if (improved && v != Variant::Dressed)
        throw DomainError("improved tunnel propagator belongs to the dressed variant");
    if (improved && t_r != 0.0) throw DomainError("improved tunnel propagator is defined at t_r = 0 only");
    const Mat2 UB = propagator_bound(v, t_r, ion, L).U;
    Mat2 UT;
    if (v == Variant::Standard)
        UT = propagator_tunnel_standard(t_r, ion, L).U;
    else
        UT = improved ? propagator_tunnel_improved(ion, L).U : propagator_tunnel_dressed(t_r).U;
    const Mat2 U = propagator_continuum(t_r, L).U * UT * UB;
    const Mat2 D = wigner_d(axis);
    TransitionMatrix T;
    T.M = (D.adjoint() * U * D).transpose();
    T.variant = v;
    T.axis = axis;
    T.t_r = t_r;
    return T;
}

SpinObservables simpleman_observables(Variant v, double t_r, const SpinAxis& axis, const IonSpecies& ion,
                                      const LaserPulseParams& L, bool improved)
{
    return ratio(rates_of(transition_simpleman(v, t_r, axis, ion, L, improved).M));
}

SpinObservables simpleman_period_mean(Variant v, const SpinAxis& axis, const IonSpecies& ion,
                                      const LaserPulseParams& L)
{
    const int n = 1024;
    Eigen::Matrix2d W = Eigen::Matrix2d::Zero();
    for (int k = 0; k < n; ++k)
        W += rates_of(transition_simpleman(v, L.period() * k / n, axis, ion, L).M);
    return ratio(W / n);
}

SpinObservables simpleman_window_mean(Variant v, const SpinAxis& axis, double center, double T,
                                      const IonSpecies& ion, const LaserPulseParams& L)
{
    // continuum and tunnel stages are slow on the window scale and stay at the centre
    const Mat2 slow = propagator_continuum(center, L).U *
                      (v == Variant::Standard ? propagator_tunnel_standard(center, ion, L).U
                                              : propagator_tunnel_dressed(center).U);
    const Mat2 D = wigner_d(axis);
    auto f = [&](double t) -> Eigen::Matrix2d {
        const Mat2 U = slow * propagator_bound(v, t, ion, L).U;
        return rates_of((D.adjoint() * U * D).transpose());
    };
    const int n = T > 0.0 ? average_intervals(T, ion, L) : 2;
    return ratio(window_mean(f, T, center, n));
}

std::vector<SimplemanRow> observables_vs_ionization_time(Variant v, const SpinAxis& axis, const IonSpecies& ion,
                                                         const LaserPulseParams& L,
                                                         const std::vector<double>& t_grid, AverageWindow average,
                                                         bool improved)
{
    std::vector<SimplemanRow> rows;
    rows.reserve(t_grid.size());
    const bool period = average == AverageWindow::LaserPeriod;
    const SpinObservables pm = period ? simpleman_period_mean(v, axis, ion, L) : SpinObservables{};
    const double T = average == AverageWindow::SpinPeriod ? window_length(average, ion, L) : 0.0;
    for (double t : t_grid) {
        SimplemanRow r;
        r.t_r = t;
        if (period)
            r.obs = pm;
        else if (T > 0.0)
            r.obs = simpleman_window_mean(v, axis, t, T, ion, L);
        else
            r.obs = simpleman_observables(v, t, axis, ion, L, improved);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace sfspin
