#include "sfspin/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadrature.hpp"

namespace sfspin {

namespace {
constexpr double c = kSpeedOfLight;

double local_field(const LaserPulseParams& L, double t)
{
    const double ph = L.omega * t;
    return L.E0 * std::sqrt(std::cos(ph) * std::cos(ph) + L.zeta * L.zeta * std::sin(ph) * std::sin(ph));
}

struct NewtonOutcome {
    cplx eta;
    double residual;
    int iterations;
};

NewtonOutcome newton(const Vec3& p, cplx eta, const IonSpecies& ion, const LaserPulseParams& L,
                     const SaddleOptions& opt)
{
    cplx f = saddle_function(p, eta, ion, L);
    int it = 0;
    for (; it < opt.max_iter && std::abs(f) >= opt.tol; ++it) {
        const Vec3c q = kinetic_momentum(p, eta, ion, L);
        const cplx df = -2.0 * (q.array() * electric_field(L, eta).array()).sum();
        if (df == 0.0 || !std::isfinite(std::abs(df))) break;
        cplx step = f / df;
        // damped step: never accept an increase of |f|
        bool accepted = false;
        for (int k = 0; k < 40; ++k) {
            const cplx trial = eta - step;
            const cplx ft = saddle_function(p, trial, ion, L);
            if (std::isfinite(std::abs(ft)) && std::abs(ft) < std::abs(f)) {
                eta = trial;
                f = ft;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
    }
    return {eta, std::abs(f), it};
}

// First sign change of Re f along the vertical line Re(eta) = t_r, refined by bisection.
bool vertical_seed(const Vec3& p, double t_r, const IonSpecies& ion, const LaserPulseParams& L, cplx& seed)
{
    auto g = [&](double y) { return saddle_function(p, cplx(t_r, y), ion, L).real(); };
    const double y_hi = 30.0 / L.omega;
    const double y_lo = 1e-6 * std::sqrt(2.0 * ion.Ip) / L.E0;
    const int n = 600;
    double ya = y_lo;
    double ga = g(ya);
    for (int i = 1; i <= n; ++i) {
        double yb = y_lo * std::pow(y_hi / y_lo, double(i) / n);
        const double gb = g(yb);
        if (std::isfinite(ga) && std::isfinite(gb) && (ga > 0) != (gb > 0)) {
            for (int k = 0; k < 200; ++k) {
                const double ym = 0.5 * (ya + yb);
                if (ym <= ya || ym >= yb) break;
                const double gm = g(ym);
                if ((gm > 0) == (ga > 0)) {
                    ya = ym;
                    ga = gm;
                } else {
                    yb = ym;
                }
            }
            seed = cplx(t_r, 0.5 * (ya + yb));
            return true;
        }
        ya = yb;
        ga = gb;
    }
    return false;
}

bool acceptable(const NewtonOutcome& r, double t_r, const LaserPulseParams& L, const SaddleOptions& opt)
{
    return r.residual < opt.tol && r.eta.imag() > 0.0 && std::abs(r.eta.real() - t_r) < 0.25 * L.period();
}
}  // namespace

double lambda_of(const Vec3& p) { return lambda_invariant(make_state(p, 0.0)); }

Vec3c kinetic_momentum(const Vec3& p, cplx eta, const IonSpecies& ion, const LaserPulseParams& L)
{
    const double lam = lambda_of(p);
    const double a = L.E0 / L.omega;
    const cplx ph = L.omega * eta;
    const cplx s = std::sin(0.5 * ph);
    // p_y - zeta a cos(ph) rearranged to keep the drift cancellation exact
    const cplx qy = (p.y() - L.zeta * a) + 2.0 * L.zeta * a * s * s;
    const double qz = c * (1.0 - lam) - ion.Ip / c;
    return Vec3c(p.x() + a * std::sin(ph), qy, qz);
}

cplx saddle_function(const Vec3& p, cplx eta, const IonSpecies& ion, const LaserPulseParams& L)
{
    const Vec3c q = kinetic_momentum(p, eta, ion, L);
    return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + ion.kappa * ion.kappa;
}

cplx contracted_action(const Vec3& p, cplx eta, double eta_ref, const IonSpecies& ion, const LaserPulseParams& L)
{
    const double lam = lambda_of(p);
    const cplx d = eta - eta_ref;
    if (d == 0.0) return 0.0;
    const cplx integral =
        detail::integrate_unit([&](double u) { return saddle_function(p, eta_ref + u * d, ion, L); });
    return d * integral / (2.0 * lam);
}

cplx contracted_action(const Vec3& p, cplx eta, const IonSpecies& ion, const LaserPulseParams& L)
{
    return contracted_action(p, eta, eta.real(), ion, L);
}

cplx contracted_action_at_saddle(double p_y, double lambda, cplx eta_s, const LaserPulseParams& L)
{
    const double w = L.omega;
    const cplx x = w * eta_s;
    const cplx t1 = L.E0 * L.E0 * (L.zeta * L.zeta - 1.0) * (std::sin(2.0 * x) - 2.0 * x * std::cos(2.0 * x)) /
                    (8.0 * lambda * w * w * w);
    const cplx t2 = L.E0 * p_y * L.zeta * (std::sin(x) - x * std::cos(x)) / (lambda * w * w);
    return t1 - t2;
}

cplx analytic_saddle(const IonSpecies& ion, const LaserPulseParams& L)
{
    const double g = keldysh_gamma(ion, L);
    const double corr = 1.0 - 5.0 * ion.Ip / (36.0 * c * c) + g * g * (L.zeta * L.zeta - 3.0) / 18.0;
    return cplx(0.0, std::sqrt(2.0 * ion.Ip) / L.E0 * corr);
}

SaddleResult solve_saddle(const Vec3& p, const IonSpecies& ion, const LaserPulseParams& L, double t_r,
                          const SaddleOptions& opt)
{
    const double g = keldysh_gamma(ion, L);
    const double corr = 1.0 - 5.0 * ion.Ip / (36.0 * c * c) + g * g * (L.zeta * L.zeta - 3.0) / 18.0;
    const double fl = std::max(local_field(L, t_r), 1e-300);

    SaddleResult res;
    NewtonOutcome r{cplx(t_r, 0.0), std::numeric_limits<double>::infinity(), 0};
    if (corr > 0.2) {
        r = newton(p, cplx(t_r, std::sqrt(2.0 * ion.Ip) / fl * corr), ion, L, opt);
    }
    if (!acceptable(r, t_r, L, opt)) {
        cplx seed;
        if (vertical_seed(p, t_r, ion, L, seed)) {
            const NewtonOutcome r2 = newton(p, seed, ion, L, opt);
            if (acceptable(r2, t_r, L, opt) || r2.residual < r.residual) r = r2;
            res.used_fallback = true;
        }
    }
    if (!std::isfinite(r.residual)) {
        // local seed overflowed near a field zero: report the residual at the peak-field seed
        const cplx peak(t_r, std::sqrt(2.0 * ion.Ip) / L.E0 * std::max(corr, 0.2));
        r.residual = std::abs(saddle_function(p, peak, ion, L));
    }
    if (!(r.residual < opt.tol)) throw NumericalError("saddle: Newton iteration did not converge", r.residual);
    if (!(r.eta.imag() > 0.0)) throw NumericalError("saddle: root in the lower half-plane rejected", r.residual);
    if (!(std::abs(r.eta.real() - t_r) < 0.25 * L.period()))
        throw NumericalError("saddle: root left the ionization quarter-cycle", r.residual);
    res.eta_s = r.eta;
    res.residual = r.residual;
    res.iterations = r.iterations;
    res.action = contracted_action(p, r.eta, ion, L);
    return res;
}

MomentumPoint most_probable_momentum(const IonSpecies& ion, const LaserPulseParams& L)
{
    const double g = keldysh_gamma(ion, L);
    MomentumPoint m;
    const double py = L.zeta * (L.E0 / L.omega) * (1.0 + g * g / 6.0);
    const double pz = ion.Ip / (3.0 * c) + py * py / (2.0 * c) * (1.0 + ion.Ip / (3.0 * c * c));
    m.p = Vec3(0.0, py, pz);
    m.exit_p = Vec3(0.0, L.zeta * L.omega * ion.Ip / (3.0 * L.E0), ion.Ip / (3.0 * c));
    m.tunneling_regime = g < 1.0;
    return m;
}

Vec3 final_momentum_for_instant(double t_r, const IonSpecies& ion, const LaserPulseParams& L)
{
    const double g = keldysh_gamma(ion, L);
    const Vec3 A = vector_potential(L, t_r).real();
    const Vec3 exit(-A.x() * g * g / 6.0, -A.y() * g * g / 6.0, ion.Ip / (3.0 * c));
    const double lam = lambda_of(exit);
    const double px = -A.x() * (1.0 + g * g / 6.0);
    const double py = -A.y() * (1.0 + g * g / 6.0);
    const double perp2 = px * px + py * py;
    // eps/c^2 - p_z/c = lam solved for p_z
    const double pz = (c * c * (1.0 - lam) * (1.0 + lam) + perp2) / (2.0 * lam * c);
    return Vec3(px, py, pz);
}

double GradientResidual::scaled_py() const { return eq_py / (c * c); }
double GradientResidual::scaled_pz(double omega) const { return eq_pz / (omega * c * c); }

GradientResidual gradient_conditions(const Vec3& e, const IonSpecies& ion, const LaserPulseParams& L)
{
    const double py = e.y(), pz = e.z(), Ip = ion.Ip;
    GradientResidual r;
    r.eq_py = py * py - 2.0 * pz * pz - Ip + c * pz * (3.0 + Ip / (c * c));
    r.eq_pz = 6.0 * L.E0 * py + L.zeta * L.omega * (5.0 * py * py - pz * pz - 2.0 * Ip * (1.0 - pz / c));
    return r;
}

TunnelingExponent tunneling_exponent(const IonSpecies& ion, const LaserPulseParams& L)
{
    const double g = keldysh_gamma(ion, L);
    TunnelingExponent t;
    t.closed_form = std::exp(-(2.0 * ion.Ea / (3.0 * L.E0)) *
                             (1.0 - ion.Ip / (12.0 * c * c) + g * g * (L.zeta * L.zeta - 3.0) / 30.0));
    const MomentumPoint m = most_probable_momentum(ion, L);
    const SaddleResult s = solve_saddle(m.p, ion, L);
    t.numeric = std::exp(-2.0 * s.action.imag());
    return t;
}

std::vector<ScanRow> momentum_scan(const IonSpecies& ion, const LaserPulseParams& L, const MomentumGrid& grid)
{
    if (grid.n_y < 1 || grid.n_z < 1) throw DomainError("momentum_scan: grid needs at least one point per axis");
    const MomentumPoint m = most_probable_momentum(ion, L);
    // with no drift along y the deviation is measured in units of the tunneling width
    const double width = std::sqrt(L.E0) / std::pow(2.0 * ion.Ip, 0.25);
    const double sy = std::abs(m.p.y()) > 0.0 ? m.p.y() : width;
    const double sz = m.p.z();
    auto axis = [](int n, double span, int i) { return n == 1 ? 0.0 : -span + 2.0 * span * i / (n - 1); };

    std::vector<ScanRow> rows;
    rows.reserve(std::size_t(grid.n_y) * grid.n_z);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> logp;
    for (int i = 0; i < grid.n_y; ++i) {
        for (int j = 0; j < grid.n_z; ++j) {
            ScanRow r;
            r.delta_py = axis(grid.n_y, grid.span_y, i);
            r.delta_pz = axis(grid.n_z, grid.span_z, j);
            r.p_y = std::abs(m.p.y()) > 0.0 ? m.p.y() * (1.0 + r.delta_py) : sy * r.delta_py;
            r.p_z = sz * (1.0 + r.delta_pz);
            double lp = -std::numeric_limits<double>::infinity();
            try {
                const SaddleResult s = solve_saddle(Vec3(0.0, r.p_y, r.p_z), ion, L);
                lp = -2.0 * s.action.imag();
                r.ok = std::isfinite(lp);
            } catch (const NumericalError&) {
                r.ok = false;
            }
            if (r.ok) best = std::max(best, lp);
            logp.push_back(lp);
            rows.push_back(r);
        }
    }
    for (std::size_t k = 0; k < rows.size(); ++k)
        rows[k].probability = rows[k].ok ? std::exp(logp[k] - best) : 0.0;
    return rows;
}

}  // namespace sfspin
