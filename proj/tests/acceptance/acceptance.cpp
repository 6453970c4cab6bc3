// Acceptance runner: one pass/fail line per criterion.
// Usage: acceptance [id ...]   (no ids runs everything)

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "sfspin/kinematics.hpp"
#include "sfspin/scenario.hpp"
#include "sfspin/simpleman.hpp"
#include "unit/spin_derivatives.hpp"

using namespace sfspin;

namespace {

constexpr double c = kSpeedOfLight;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::mt19937_64& rng()
{
    static std::mt19937_64 g(7081);
    return g;
}

double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

LaserPulseParams strong_laser(const IonSpecies& ion, double ratio, double omega, double zeta)
{
    return make_laser(ratio * ion.Ea, omega, zeta);
}

const SpinAxis kAxes[] = {SpinAxis::propagation(), SpinAxis::minus_E(), SpinAxis::minus_B()};
const char* kAxisNames[] = {"k", "-E", "-B"};

Outcome table_one()
{
    const auto rows = table1(30.0, 1000.0);
    int failed = 0;
    double worst = 0.0;
    std::ostringstream os;
    for (const auto& r : rows) {
        worst = std::max(worst, r.deviation / r.tolerance);
        if (!r.pass) {
            ++failed;
            os << fmt("\n    %s %s zeta=%g %s: computed %.6g expected %.6g deviation %.3g > %.3g",
                      r.variant == Variant::Standard ? "standard" : "dressed", r.axis.c_str(), r.zeta,
                      r.observable.c_str(), r.computed, r.expected, r.deviation, r.tolerance);
        }
    }
    return {failed == 0, fmt("%d/%zu entries within max(rho^4, 10/xi); worst deviation/tolerance %.3g", int(rows.size()) - failed,
                             rows.size(), worst) +
                             os.str()};
}

Outcome momentum_peak()
{
    const IonSpecies ion = make_ion(50.0);
    const auto L = strong_laser(ion, 1.0 / 30, 1.0, 0.5);
    const auto rows = momentum_scan(ion, L, MomentumGrid{101, 101, 0.2, 0.2});
    const ScanRow* best = &rows.front();
    int ok = 0;
    for (const auto& r : rows) {
        ok += r.ok;
        if (r.probability > best->probability) best = &r;
    }
    const bool pass = std::abs(best->delta_py) <= 0.004 + 1e-12 && std::abs(best->delta_pz) <= 0.004 + 1e-12 &&
                      ok == int(rows.size());
    return {pass, fmt("peak at (delta_py, delta_pz) = (%.4f, %.4f); %d/%zu cells solved", best->delta_py,
                      best->delta_pz, ok, rows.size())};
}

SpinObservables dressed_circular_z(double kappa)
{
    const IonSpecies ion = make_ion(kappa);
    Scenario sc{ion, strong_laser(ion, 1.0 / 30, 0.05, 1.0), Variant::Dressed, SpinAxis::propagation(), 0.0,
                AverageWindow::SpinPeriod};
    return evaluate(sc).obs;
}

Outcome flip_vs_charge()
{
    std::ostringstream os;
    bool pass = true;
    // rising branch: both curves increase towards 1/2
    double pp = 0.0, pm = 0.0;
    for (double k = 10.0; k <= 34.0; k += 2.0) {
        const SpinObservables o = dressed_circular_z(k);
        if (o.F_plus <= pp || o.F_minus <= pm) {
            pass = false;
            os << fmt("\n    not monotone at kappa=%g", k);
        }
        pp = o.F_plus;
        pm = o.F_minus;
    }
    for (double k = 36.0; k <= 90.0; k += 6.0) {
        const SpinObservables o = dressed_circular_z(k);
        if (o.F_plus <= pp) {
            pass = false;
            os << fmt("\n    F+ not monotone at kappa=%g", k);
        }
        pp = o.F_plus;
    }
    double worst = 0.0;
    for (double k : {30.0, 40.0, 50.0, 60.0, 70.0}) {
        const SpinObservables o = dressed_circular_z(k);
        const double r3 = std::pow(make_ion(k).rho, 3);
        const double ratio = (o.F_plus - o.F_minus) / (r3 / 2);
        worst = std::max(worst, std::abs(ratio - 1.0));
        os << fmt("\n    kappa=%g: F+=%.6f F-=%.6f splitting/(rho^3/2)=%.4f", k, o.F_plus, o.F_minus, ratio);
    }
    pass = pass && worst < 0.2;
    return {pass, fmt("both curves monotone for kappa in [10, 34], F+ up to 90; worst splitting error %.1f%%",
                      100 * worst) +
                      os.str()};
}

Outcome neon()
{
    const IonSpecies ion = make_ion(10.0);
    const auto L = make_laser(intensity_to_field(1e20), wavelength_to_omega(800.0), 1.0);
    const ScenarioResult r =
        evaluate({ion, L, Variant::Dressed, SpinAxis::propagation(), 0.0, AverageWindow::SpinPeriod});
    const bool pass = r.obs.F_plus >= 0.05 && r.obs.F_plus <= 0.15 && r.obs.F_minus >= 0.05 && r.obs.F_minus <= 0.15;
    return {pass, fmt("xi=%.3f gamma=%.4f: F+=%.4f F-=%.4f, window [0.05, 0.15]", r.xi, r.gamma, r.obs.F_plus,
                      r.obs.F_minus)};
}

Outcome bound_propagator()
{
    using testing_support::circular_derivative;
    using testing_support::linear_derivative;
    double unit = 0.0, ode = 0.0;
    for (double kappa : {5.0, 40.0, 100.0}) {
        const IonSpecies ion = make_ion(kappa);
        for (double xi : {1e-3, 0.5, 10.0, 1e3}) {
            const auto Lc = make_laser(xi * c * 0.05, 0.05, 1.0);
            const auto Ll = make_laser(xi * c * 0.05, 0.05, 0.0);
            const double rate = 0.05 * (1 + ion.delta * xi);
            for (int k = 0; k < 100; ++k) {
                const double t = uniform(-3, 3) * Lc.period();
                for (const auto* L : {&Lc, &Ll}) {
                    const Mat2 C = exact_coeffs(t, ion, *L).C;
                    unit = std::max(unit, (C * C.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff());
                }
                const Mat2 rc = circular_derivative(t, ion, Lc) - circular_coeffs(t, ion, Lc).C * spin_coupling(t, ion, Lc);
                const Mat2 rl = linear_derivative(t, ion, Ll) - linear_coeffs(t, ion, Ll).C * spin_coupling(t, ion, Ll);
                ode = std::max({ode, rc.cwiseAbs().maxCoeff() / rate, rl.cwiseAbs().maxCoeff() / rate});
            }
        }
    }
    return {unit < 1e-10 && ode < 1e-10, fmt("max |CC^dag - I| = %.2e, max relative ODE residual = %.2e", unit, ode)};
}

Outcome kinematics_oracle()
{
    auto mass_shell = [](const ParticleState& s) {
        return std::abs(s.energy * s.energy - c * c * s.p.squaredNorm() - c * c * c * c) / (s.energy * s.energy);
    };
    auto max_rel = [](const ParticleState& a, const ParticleState& b) {
        const double scale = std::max(b.p.norm(), c);
        return std::max((a.p - b.p).norm() / scale, std::abs(a.energy - b.energy) / b.energy);
    };
    double dev = 0.0, lam = 0.0, shell = 0.0;
    for (double zeta : {0.0, 0.5, 1.0}) {
        const auto L = make_laser(5.0 * c * 0.05, 0.05, zeta);
        for (int k = 0; k < 4; ++k) {
            const ParticleState s = make_state(Vec3(uniform(-50, 50), uniform(-50, 50), uniform(-50, 50)), uniform(0, 10));
            const double eta = s.eta + 10 * L.period();
            const ParticleState o = lorentz_oracle(s, eta, L);
            dev = std::max(dev, max_rel(o, momentum_at_phase(s, eta, L)));
            lam = std::max(lam, std::abs(lambda_invariant(o) - lambda_invariant(s)) / lambda_invariant(s));
            shell = std::max(shell, mass_shell(o));
        }
    }
    return {dev < 1e-6 && lam < 1e-8 && shell < 1e-8,
            fmt("10 cycles: closed form vs oracle %.2e, lambda drift %.2e, mass shell %.2e", dev, lam, shell)};
}

Outcome saddle_random()
{
    double res = 0.0, stat = 0.0;
    int fallback = 0;
    for (int k = 0; k < 100; ++k) {
        const IonSpecies ion = make_ion(uniform(2.0, 90.0));
        const double E0 = uniform(1.0 / 50, 1.0 / 15) * ion.Ea;
        const double gamma = uniform(0.01, 0.3);
        const auto L = make_laser(E0, gamma * E0 / std::sqrt(2 * ion.Ip), uniform(0.0, 1.0));
        const Vec3 p = most_probable_momentum(ion, L).p;
        const SaddleResult s = solve_saddle(p, ion, L);
        fallback += s.used_fallback;
        res = std::max(res, s.residual);
        const double h = 1e-3 * std::abs(s.eta_s), ref = s.eta_s.real();
        auto S = [&](cplx eta) { return contracted_action(p, eta, ref, ion, L); };
        for (cplx dir : {cplx(1, 0), cplx(0, 1)}) {
            const cplx d = (-S(s.eta_s + 2.0 * h * dir) + 8.0 * S(s.eta_s + h * dir) - 8.0 * S(s.eta_s - h * dir) +
                            S(s.eta_s - 2.0 * h * dir)) /
                           (12.0 * h);
            stat = std::max(stat, std::abs(d) * std::abs(s.eta_s) / std::abs(s.action));
        }
    }
    return {res < 1e-10 && stat < 1e-8,
            fmt("100 scenarios: max residual %.2e, max |dS/deta| |eta_s|/|S| %.2e, fallback used %d times", res, stat,
                fallback)};
}

Outcome exponent_limit()
{
    double worst = 0.0;
    for (double kappa : {1e-3, 1e-2}) {
        const IonSpecies ion = make_ion(kappa);
        for (double ratio : {1.0 / 20, 1.0 / 30}) {
            const double E0 = ratio * ion.Ea;
            const auto L = make_laser(E0, 1e-7 * E0 / std::sqrt(2 * ion.Ip), 0.0);
            const double lead = std::exp(-2 * ion.Ea / (3 * E0));
            const TunnelingExponent t = tunneling_exponent(ion, L);
            worst = std::max({worst, std::abs(t.closed_form / lead - 1), std::abs(t.numeric / lead - 1)});
        }
    }
    return {worst < 1e-6, fmt("max relative deviation from exp(-2Ea/3E0): %.2e", worst)};
}

double obs_diff(const SpinObservables& a, const SpinObservables& b)
{
    return std::max({std::abs(a.F_plus - b.F_plus), std::abs(a.F_minus - b.F_minus), std::abs(a.A_t - b.A_t),
                     std::abs(a.A_p - b.A_p)});
}

Outcome phase_scale_invariance()
{
    double worst = 0.0;
    const auto L = make_laser(1.0, 0.05, 0.7);
    for (int k = 0; k < 200; ++k) {
        TransitionMatrix M;
        M.M = Mat2::Random();
        const SpinAxis axis = make_axis(uniform(0, kPi), uniform(0, 2 * kPi));
        const SpinObservables base = observables(rate_matrix(rotate_to_axis(M, axis), L));
        TransitionMatrix N = M;
        N.M *= std::polar(std::exp(uniform(-20, 20)), uniform(0, 2 * kPi));
        N.log_scale = uniform(-50, 50);
        worst = std::max(worst, obs_diff(base, observables(rate_matrix(rotate_to_axis(N, axis), L))));
    }
    return {worst < 1e-12, fmt("200 random amplitudes and axes: max observable change %.2e", worst)};
}

Outcome simpleman_vs_sfa()
{
    double C = 0.0;
    for (double kappa : {1.0, 2.0, 4.0, 8.0, 12.0}) {
        const IonSpecies ion = make_ion(kappa);
        for (double xi : {0.3, 1.0, 3.0}) {
            for (double zeta : {0.0, 1.0}) {
                const double E0 = ion.Ea / 30;
                const auto L = make_laser(E0, E0 / (c * xi), zeta);
                const Vec3 p = most_probable_momentum(ion, L).p;
                for (Variant v : {Variant::Standard, Variant::Dressed}) {
                    const TransitionMatrix Mz = amplitude(v, p, 0.0, ion, L);
                    for (const SpinAxis& a : kAxes) {
                        const SpinObservables sfa = observables(rate_matrix(rotate_to_axis(Mz, a), L));
                        const SpinObservables sm = simpleman_observables(v, 0.0, a, ion, L);
                        const double d = std::max(std::abs(sfa.F_plus - sm.F_plus), std::abs(sfa.F_minus - sm.F_minus));
                        C = std::max(C, d / (ion.rho * ion.rho));
                    }
                }
            }
        }
    }
    return {C < 10, fmt("fitted C = max |F_sfa - F_simpleman| / rho^2 = %.3f over both variants and three axes", C)};
}

Outcome polar_factor()
{
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const IonSpecies ion = make_ion(uniform(1.0, 90.0));
        const auto L = make_laser(uniform(0.1, 20.0) * c * 0.05, 0.05, uniform(0.0, 1.0));
        const double t = uniform(-1, 1) * L.period();
        const Mat2 UT = propagator_tunnel_standard(t, ion, L).U;
        Eigen::JacobiSVD<Mat2> svd(UT, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const Mat2 W = svd.matrixU() * svd.matrixV().adjoint();
        const Mat2 U = propagator_continuum(t, L).U * W * propagator_bound(Variant::Standard, t, ion, L).U;
        const SpinAxis axis = make_axis(uniform(0, kPi), uniform(0, 2 * kPi));
        const Mat2 D = wigner_d(axis);
        RateMatrix R;
        R.W = (D.adjoint() * U * D).transpose().cwiseAbs2();
        worst = std::max(worst, std::abs(observables(R).A_t));
    }
    return {worst < 1e-12, fmt("200 random instants and axes: max |A_t| = %.2e", worst)};
}

// xi = 0.01 in the tunneling regime: gamma = 0.04 with Ea = 30 E0
struct WeakField {
    IonSpecies ion;
    LaserPulseParams laser;
};

WeakField weak_field(double zeta)
{
    const double gamma = 0.04, xi = 0.01;
    const double omega = gamma * gamma * gamma * xi * xi * c * c / 30.0, E0 = xi * c * omega;
    const double Ip = 0.5 * std::pow(30.0 * E0, 2.0 / 3.0);
    return {make_ion(std::sqrt(2 * Ip - Ip * Ip / (c * c))), make_laser(E0, omega, zeta)};
}

template <class Check>
void weak_field_sweep(Check&& check)
{
    for (double zeta : {0.0, 1.0}) {
        const WeakField w = weak_field(zeta);
        for (Variant v : {Variant::Standard, Variant::Dressed})
            for (int a = 0; a < 3; ++a) check(w, v, a, evaluate({w.ion, w.laser, v, kAxes[a], 0.0, AverageWindow::None}));
    }
}

Outcome weak_suppression()
{
    double worst = 0.0, xi = 0.0;
    weak_field_sweep([&](const WeakField& w, Variant, int, const ScenarioResult& r) {
        xi = w.laser.xi();
        worst = std::max({worst, std::abs(r.obs.F_plus), std::abs(r.obs.F_minus), std::abs(r.obs.A_t),
                          std::abs(r.obs.A_p)});
    });
    return {worst < 1e-3, fmt("xi=%.3g: max |observable| over variants, axes and zeta in {0,1} = %.2e", xi, worst)};
}

Outcome weak_rho3()
{
    std::ostringstream os;
    bool pass = true;
    double rho = 0.0;
    weak_field_sweep([&](const WeakField& w, Variant v, int a, const ScenarioResult& r) {
        rho = w.ion.rho;
        const double bound = std::pow(rho, 3) / 10;
        const double m = std::max({std::abs(r.obs.F_plus), std::abs(r.obs.F_minus), std::abs(r.obs.A_t),
                                   std::abs(r.obs.A_p)});
        if (m >= bound) {
            pass = false;
            os << fmt("\n    %s %s zeta=%g: max %.3e = %.3g rho^3", v == Variant::Standard ? "standard" : "dressed",
                      kAxisNames[a], w.laser.zeta, m, m / std::pow(rho, 3));
        }
    });
    return {pass, fmt("rho=%.4f, bound rho^3/10 = %.3e", rho, std::pow(rho, 3) / 10) + os.str()};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> all = {
        {"1", "strong-field table, kappa=30, xi=1e3", 10, table_one},
        {"2", "momentum distribution peak, 101x101 scan", 60, momentum_peak},
        {"3", "dressed circular flip versus charge", 30, flip_vs_charge},
        {"4", "Ne9+ at 1e20 W/cm^2, 800 nm", 5, neon},
        {"5a", "bound propagator unitarity and ODE residual", 10, bound_propagator},
        {"5b", "classical kinematics vs Lorentz oracle", 10, kinematics_oracle},
        {"5c", "saddle residual and stationarity", 10, saddle_random},
        {"5d", "tunneling exponent limit", 10, exponent_limit},
        {"5e", "observable invariance under phase and scale", 10, phase_scale_invariance},
        {"5f", "simpleman vs amplitude flips", 10, simpleman_vs_sfa},
        {"5g", "unitary under-barrier factor gives no A_t", 10, polar_factor},
        {"6", "weak-field suppression, xi=0.01", 5, weak_suppression},
        {"weak-rho3", "weak-field observables below rho^3/10", 5, weak_rho3},
    };
    std::vector<std::string> wanted(argv + 1, argv + argc);
    int failures = 0, ran = 0;
    for (const Criterion& cr : all) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), cr.id) == wanted.end()) continue;
        ++ran;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = dt < cr.budget_s;
        const bool pass = o.pass && in_time;
        failures += !pass;
        std::printf("[%s] criterion %s (%s): %s; %.2f s of %.0f s%s\n", pass ? "PASS" : "FAIL", cr.id.c_str(),
                    cr.title.c_str(), o.detail.c_str(), dt, cr.budget_s, in_time ? "" : " (over budget)");
        std::fflush(stdout);
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion matches the arguments\n");
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
