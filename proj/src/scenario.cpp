#include "sfspin/scenario.hpp"

#include <cmath>

namespace sfspin {

namespace {
constexpr double kIntensityUnit = 3.50944758e16;  // W/cm^2 per (a.u. field)^2
constexpr double kOmegaNm = 45.5633;              // omega (a.u.) * lambda (nm)
}  // namespace

double intensity_to_field(double I) { return std::sqrt(I / kIntensityUnit); }
double field_to_intensity(double E0) { return E0 * E0 * kIntensityUnit; }
double wavelength_to_omega(double nm) { return kOmegaNm / nm; }
double omega_to_wavelength(double w) { return kOmegaNm / w; }

ScenarioResult evaluate(const Scenario& sc)
{
    const IonSpecies& ion = sc.ion;
    const LaserPulseParams& L = sc.laser;
    ScenarioResult r;
    r.xi = L.xi();
    r.gamma = keldysh_gamma(ion, L);
    r.rho = ion.rho;
    r.p = sc.t_r == 0.0 ? most_probable_momentum(ion, L).p : final_momentum_for_instant(sc.t_r, ion, L);

    const double T = window_length(sc.average, ion, L);
    if (sc.average != AverageWindow::None && sc.variant == Variant::Standard)
        throw DomainError("averaging applies to the dressed variant only");
    if (T > 0.0) {
        const RateMatrix W = averaged_rate_matrix(sc.variant, sc.axis, r.p, ion, L, T, sc.t_r);
        r.obs = observables(W);
        r.averaged = true;
        r.period_ok = W.period_ok;
    } else {
        const TransitionMatrix Mz = amplitude(sc.variant, r.p, sc.t_r, ion, L);
        r.obs = observables(rate_matrix(rotate_to_axis(Mz, sc.axis), L));
    }
    return r;
}

std::vector<Table1Row> table1(double kappa, double xi)
{
    const IonSpecies ion = make_ion(kappa);
    const double rho = ion.rho, r3 = rho * rho * rho;
    const double tol = std::max(std::pow(rho, 4), 10.0 / xi);
    struct AxisDef {
        const char* name;
        SpinAxis axis;
    };
    const AxisDef axes[] = {{"k", SpinAxis::propagation()}, {"-E", SpinAxis::minus_E()}, {"-B", SpinAxis::minus_B()}};

    std::vector<Table1Row> rows;
    for (Variant v : {Variant::Standard, Variant::Dressed}) {
        for (const AxisDef& a : axes) {
            for (double z : {0.0, 1.0}) {
                const double E0 = ion.Ea / 30.0;
                const LaserPulseParams L = make_laser(E0, E0 / (kSpeedOfLight * xi), z);
                Scenario sc{ion, L, v, a.axis, 0.0, v == Variant::Dressed ? AverageWindow::SpinPeriod : AverageWindow::None};
                const SpinObservables o = evaluate(sc).obs;

                double fp, fm, at, ap;
                const std::string ax = a.name;
                if (v == Variant::Standard) {
                    if (ax == "k") {
                        fp = fm = z;
                        at = ap = 0.0;
                    } else if (ax == "-E") {
                        fp = fm = rho * rho / 4.0;
                        at = ap = 0.0;
                    } else {
                        fp = z * (1.0 + rho);
                        fm = z * (1.0 - rho);
                        at = 2.0 * rho;
                        ap = 2.0 * rho * (1.0 - 2.0 * z);
                    }
                } else {
                    if (ax == "k") {
                        fp = 0.5 + z * r3 / 4.0;
                        fm = 0.5 - z * r3 / 4.0;
                        at = z * r3;
                        ap = 0.0;
                    } else if (ax == "-E") {
                        fp = fm = 0.5;
                        at = ap = 0.0;
                    } else {
                        fp = z * (0.5 + r3 / 4.0);
                        fm = z * (0.5 - r3 / 4.0);
                        at = (1.0 - z) * r3;
                        ap = r3 * (1.0 - 2.0 * z);
                    }
                }
                const std::pair<const char*, std::pair<double, double>> entries[] = {
                    {"F+", {o.F_plus, fp}}, {"F-", {o.F_minus, fm}}, {"At", {o.A_t, at}}, {"Ap", {o.A_p, ap}}};
                for (const auto& [name, vals] : entries) {
                    const double dev = std::abs(vals.first - vals.second);
                    rows.push_back({v, ax, z, name, vals.first, vals.second, dev, tol, dev < tol});
                }
            }
        }
    }
    return rows;
}

}  // namespace sfspin
