#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sfspin/bound_spin.hpp"
#include "sfspin/simpleman.hpp"

namespace sfspin::cli {

namespace {

using Cell = std::variant<double, std::string>;

class Table {
public:
    explicit Table(std::vector<std::string> cols) : cols_(std::move(cols)) {}
    void add(std::vector<Cell> row)
    {
        if (row.size() != cols_.size()) throw std::logic_error("table row width mismatch");
        rows_.push_back(std::move(row));
    }

    void write(std::ostream& os, const std::string& format) const
    {
        if (format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : rows_) {
                nlohmann::ordered_json obj;
                for (std::size_t i = 0; i < cols_.size(); ++i) {
                    if (const double* d = std::get_if<double>(&r[i]))
                        obj[cols_[i]] = std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json();
                    else
                        obj[cols_[i]] = std::get<std::string>(r[i]);
                }
                arr.push_back(obj);
            }
            os << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
            return;
        }
        for (std::size_t i = 0; i < cols_.size(); ++i) os << (i ? "," : "") << cols_[i];
        os << '\n';
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) os << ',';
                if (const double* d = std::get_if<double>(&r[i]))
                    os << number(*d);
                else
                    os << std::get<std::string>(r[i]);
            }
            os << '\n';
        }
    }

    static std::string number(double v)
    {
        if (std::isnan(v)) return "nan";
        if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.11e", v == 0.0 ? 0.0 : v);
        return buf;
    }

private:
    std::vector<std::string> cols_;
    std::vector<std::vector<Cell>> rows_;
};

Variant parse_variant(const std::string& s)
{
    if (s == "standard") return Variant::Standard;
    if (s == "dressed") return Variant::Dressed;
    throw ConfigError("variant: expected 'standard' or 'dressed', got '" + s + "'");
}

AverageWindow parse_average(const std::string& s)
{
    if (s == "none") return AverageWindow::None;
    if (s == "spin-period") return AverageWindow::SpinPeriod;
    if (s == "laser-period") return AverageWindow::LaserPeriod;
    throw ConfigError("average: expected none, spin-period or laser-period, got '" + s + "'");
}

std::string axis_label(const SpinAxis& a)
{
    auto near = [](double x, double y) { return std::abs(x - y) < 1e-12; };
    if (near(a.theta, 0.0)) return "k";
    if (near(a.theta, kPi / 2) && near(a.phi, 0.0)) return "minus_E";
    if (near(a.theta, kPi / 2) && near(a.phi, kPi / 2)) return "minus_B";
    return "theta=" + Table::number(a.theta) + "/phi=" + Table::number(a.phi);
}

double resolve_field(const RawConfig& raw, const IonSpecies& ion)
{
    const int n = int(raw.E0.has_value()) + int(raw.intensity.has_value()) + int(raw.E0_ratio.has_value());
    if (n == 0) throw ConfigError("E0: one of --E0, --intensity or --E0-ratio is required");
    if (n > 1) throw ConfigError("E0: --E0, --intensity and --E0-ratio are mutually exclusive");
    if (raw.E0) return *raw.E0;
    if (raw.intensity) {
        if (!(*raw.intensity > 0.0)) throw ConfigError("intensity: must be positive");
        return intensity_to_field(*raw.intensity);
    }
    return *raw.E0_ratio * ion.Ea;
}

double resolve_omega(const RawConfig& raw)
{
    const int n = int(raw.omega.has_value()) + int(raw.wavelength.has_value());
    if (n == 0) throw ConfigError("omega: one of --omega or --wavelength is required");
    if (n > 1) throw ConfigError("omega: --omega and --wavelength are mutually exclusive");
    if (raw.omega) return *raw.omega;
    if (!(*raw.wavelength > 0.0)) throw ConfigError("wavelength: must be positive");
    return wavelength_to_omega(*raw.wavelength);
}

template <class F>
auto guarded(const char* field, F&& f)
{
    try {
        return f();
    } catch (const DomainError& e) {
        throw ConfigError(std::string(field) + ": " + e.what());
    }
}

void check_format(const RawConfig& raw)
{
    if (raw.format != "csv" && raw.format != "json")
        throw ConfigError("format: expected csv or json, got '" + raw.format + "'");
}

std::vector<double> time_grid(const TimeRange& r, double period)
{
    if (r.steps < 1) throw ConfigError("steps: must be at least 1");
    const double a = r.from.value_or(0.0);
    const double b = r.to.value_or(period);
    std::vector<double> g;
    for (int k = 0; k < r.steps; ++k) g.push_back(r.steps == 1 ? a : a + (b - a) * k / (r.steps - 1));
    return g;
}

}  // namespace

Scenario resolve(const RawConfig& raw)
{
    check_format(raw);
    if (!raw.kappa) throw ConfigError("kappa: --kappa is required");
    Scenario sc;
    sc.ion = guarded("kappa", [&] { return make_ion(*raw.kappa); });
    const double E0 = resolve_field(raw, sc.ion);
    const double omega = resolve_omega(raw);
    sc.laser = guarded("laser", [&] { return make_laser(E0, omega, raw.zeta); });
    sc.variant = parse_variant(raw.variant);
    sc.axis = guarded("theta", [&] { return make_axis(raw.theta, raw.phi); });
    if (!std::isfinite(raw.t_r)) throw ConfigError("t-r: must be finite");
    sc.t_r = raw.t_r;
    sc.average = parse_average(raw.average);
    if (sc.variant == Variant::Standard && sc.average != AverageWindow::None)
        throw ConfigError("average: averaging applies to the dressed variant only");
    if (sc.variant == Variant::Dressed && raw.zeta != 0.0 && raw.zeta != 1.0)
        throw ConfigError("zeta: the dressed variant requires zeta = 0 or zeta = 1");
    return sc;
}

void cmd_observables(const RawConfig& raw, std::ostream& os)
{
    const Scenario sc = resolve(raw);
    const ScenarioResult r = evaluate(sc);
    if (!r.period_ok) std::cerr << "warning: averaging window violates the period condition\n";
    Table t({"kappa", "E0", "omega", "zeta", "variant", "axis", "t_r", "average", "xi", "gamma", "rho", "p_y", "p_z",
             "F_plus", "F_minus", "A_t", "A_p"});
    t.add({sc.ion.kappa, sc.laser.E0, sc.laser.omega, sc.laser.zeta, std::string(to_string(sc.variant)),
           axis_label(sc.axis), sc.t_r, raw.average, r.xi, r.gamma, r.rho, r.p.y(), r.p.z(), r.obs.F_plus,
           r.obs.F_minus, r.obs.A_t, r.obs.A_p});
    t.write(os, raw.format);
}

void cmd_scan(const RawConfig& raw, const SweepSpec& sw, std::ostream& os)
{
    check_format(raw);
    if (sw.steps < 1) throw ConfigError("steps: a sweep needs at least one step");
    static const char* names[] = {"kappa", "E0", "xi", "zeta", "theta"};
    if (std::find(std::begin(names), std::end(names), sw.name) == std::end(names))
        throw ConfigError("sweep: expected one of kappa, E0, xi, zeta, theta; got '" + sw.name + "'");
    if (sw.log && !(sw.from > 0.0 && sw.to > 0.0)) throw ConfigError("sweep: log spacing needs positive bounds");
    if (sw.name == "zeta" && parse_variant(raw.variant) == Variant::Dressed)
        throw ConfigError("sweep: zeta can only be swept in the standard variant");

    Table t({sw.name, "kappa", "E0", "omega", "zeta", "theta", "xi", "gamma", "rho", "F_plus", "F_minus", "A_t", "A_p"});
    for (int k = 0; k < sw.steps; ++k) {
        const double u = sw.steps == 1 ? 0.0 : double(k) / (sw.steps - 1);
        const double v = sw.log ? sw.from * std::pow(sw.to / sw.from, u) : sw.from + (sw.to - sw.from) * u;
        RawConfig rc = raw;
        if (sw.name == "kappa") rc.kappa = v;
        if (sw.name == "zeta") rc.zeta = v;
        if (sw.name == "theta") rc.theta = v;
        if (sw.name == "E0") {
            rc.E0 = v;
            rc.intensity.reset();
            rc.E0_ratio.reset();
        }
        if (sw.name == "xi") {
            rc.E0 = v * kSpeedOfLight * resolve_omega(raw);
            rc.intensity.reset();
            rc.E0_ratio.reset();
        }
        const Scenario sc = resolve(rc);
        const ScenarioResult r = evaluate(sc);
        t.add({v, sc.ion.kappa, sc.laser.E0, sc.laser.omega, sc.laser.zeta, sc.axis.theta, r.xi, r.gamma, r.rho,
               r.obs.F_plus, r.obs.F_minus, r.obs.A_t, r.obs.A_p});
    }
    t.write(os, raw.format);
}

void cmd_momentum_map(const RawConfig& raw, const GridSpec& g, std::ostream& os)
{
    const Scenario sc = resolve(raw);
    if (g.n < 1) throw ConfigError("grid: must be at least 1");
    if (!(g.span > 0.0)) throw ConfigError("span: must be positive");
    const auto rows = momentum_scan(sc.ion, sc.laser, {g.n, g.n, g.span, g.span});
    Table t({"delta_py", "delta_pz", "p_y", "p_z", "probability", "ok"});
    int failed = 0;
    for (const auto& r : rows) {
        t.add({r.delta_py, r.delta_pz, r.p_y, r.p_z, r.probability, std::string(r.ok ? "1" : "0")});
        failed += !r.ok;
    }
    if (failed) std::cerr << "warning: " << failed << " grid points without a converged saddle\n";
    t.write(os, raw.format);
}

void cmd_bound_trace(const RawConfig& raw, const TimeRange& range, bool oracle, std::ostream& os)
{
    RawConfig rc = raw;
    rc.variant = "standard";  // ellipticity gate handled here
    const Scenario sc = resolve(rc);
    const bool exact = sc.laser.zeta == 0.0 || sc.laser.zeta == 1.0;
    if (!exact && !oracle) throw ConfigError("zeta: closed forms need zeta = 0 or 1; use --oracle");
    if (!exact) std::cerr << "note: oracle run for 0 < zeta < 1 extrapolates beyond the closed forms\n";

    std::vector<std::string> cols = {"t", "re_pp", "im_pp", "re_pm", "im_pm", "re_mp", "im_mp", "re_mm", "im_mm",
                                     "norm_residual"};
    const bool diff = oracle && exact;
    if (diff) cols.push_back("oracle_diff");
    Table t(cols);
    for (double tt : time_grid(range, sc.laser.period())) {
        const SpinCoeffMatrix C = oracle ? ode_oracle(tt, sc.ion, sc.laser) : exact_coeffs(tt, sc.ion, sc.laser);
        const double res = std::max(std::abs(C.C.row(0).squaredNorm() - 1.0), std::abs(C.C.row(1).squaredNorm() - 1.0));
        std::vector<Cell> row = {tt,
                                 C.C(0, 0).real(), C.C(0, 0).imag(), C.C(0, 1).real(), C.C(0, 1).imag(),
                                 C.C(1, 0).real(), C.C(1, 0).imag(), C.C(1, 1).real(), C.C(1, 1).imag(), res};
        if (diff) row.push_back((C.C - exact_coeffs(tt, sc.ion, sc.laser).C).cwiseAbs().maxCoeff());
        t.add(row);
    }
    t.write(os, raw.format);
}

void cmd_simpleman(const RawConfig& raw, const TimeRange& range, bool improved, std::ostream& os)
{
    RawConfig rc = raw;
    const Variant v = parse_variant(raw.variant);
    rc.variant = "standard";
    rc.average = "none";
    const Scenario sc = resolve(rc);
    if (v == Variant::Dressed && sc.laser.zeta != 0.0 && sc.laser.zeta != 1.0)
        throw ConfigError("zeta: the dressed variant requires zeta = 0 or zeta = 1");
    const AverageWindow avg = parse_average(raw.average);
    if (improved && (avg != AverageWindow::None || v != Variant::Dressed))
        throw ConfigError("improved: only for the dressed variant without averaging");
    std::vector<double> grid = time_grid(range, sc.laser.period());
    if (improved) {
        for (double x : grid)
            if (x != 0.0) throw ConfigError("improved: the corrected tunnel step exists at t_r = 0 only");
    }
    const auto rows = observables_vs_ionization_time(v, sc.axis, sc.ion, sc.laser, grid, avg, improved);
    Table t({"t_r", "F_plus", "F_minus", "A_t", "A_p", "variant", "axis"});
    for (const auto& r : rows)
        t.add({r.t_r, r.obs.F_plus, r.obs.F_minus, r.obs.A_t, r.obs.A_p, std::string(to_string(v)),
               axis_label(sc.axis)});
    t.write(os, raw.format);
}

void cmd_table1(const RawConfig& raw, double xi, std::ostream& os)
{
    check_format(raw);
    const double kappa = raw.kappa.value_or(30.0);
    if (!(xi > 0.0)) throw ConfigError("xi: must be positive");
    const auto rows = guarded("kappa", [&] { return table1(kappa, xi); });
    Table t({"variant", "axis", "zeta", "observable", "computed", "expected", "deviation", "tolerance", "status"});
    for (const auto& r : rows)
        t.add({std::string(to_string(r.variant)), r.axis, r.zeta, r.observable, r.computed, r.expected, r.deviation,
               r.tolerance, std::string(r.pass ? "pass" : "fail")});
    t.write(os, raw.format);
}

}  // namespace sfspin::cli
