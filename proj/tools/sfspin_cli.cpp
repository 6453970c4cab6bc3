// sfspin: spin-resolved tunnel ionization of hydrogenlike ions.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace sfspin;

namespace {

template <class T>
void opt_value(CLI::App& app, const std::string& name, std::optional<T>& target, const std::string& help)
{
    app.add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spin-resolved tunnel ionization of hydrogenlike ions in strong laser fields", "sfspin"};
    app.set_config("--config", "", "Flat key=value configuration file; flags override its values");
    app.require_subcommand(1);
    app.fallthrough();

    cli::RawConfig raw;
    opt_value(app, "--kappa", raw.kappa, "Nuclear charge (a.u.)");
    opt_value(app, "--E0", raw.E0, "Field amplitude (a.u.)");
    opt_value(app, "--intensity", raw.intensity, "Peak intensity (W/cm^2)");
    opt_value(app, "--E0-ratio", raw.E0_ratio, "Field amplitude in units of the atomic field (2Ip)^(3/2)");
    opt_value(app, "--omega", raw.omega, "Angular frequency (a.u.)");
    opt_value(app, "--wavelength", raw.wavelength, "Wavelength (nm)");
    app.add_option("--zeta", raw.zeta, "Ellipticity in [0, 1]");
    app.add_option("--variant", raw.variant, "standard | dressed");
    app.add_option("--theta", raw.theta, "Polar angle of the spin quantization axis (rad)");
    app.add_option("--phi", raw.phi, "Azimuth of the spin quantization axis (rad)");
    app.add_option("--t-r", raw.t_r, "Ionization instant (a.u.)");
    app.add_option("--average", raw.average, "none | spin-period | laser-period");
    app.add_option("--format", raw.format, "csv | json");
    app.add_option("--out", raw.out, "Output file (default: standard output)");

    auto* obs = app.add_subcommand("observables", "Spin flips and asymmetries at the distribution maximum");

    cli::SweepSpec sweep;
    auto* scan = app.add_subcommand("scan", "Sweep one parameter and tabulate the observables");
    scan->add_option("--sweep", sweep.name, "kappa | E0 | xi | zeta | theta")->required();
    scan->add_option("--from", sweep.from, "First sweep value")->required();
    scan->add_option("--to", sweep.to, "Last sweep value")->required();
    scan->add_option("--steps", sweep.steps, "Number of sweep points")->required();
    scan->add_flag("--log", sweep.log, "Logarithmic spacing");

    cli::GridSpec grid;
    auto* mmap = app.add_subcommand("momentum-map", "Tunneling probability around the most probable momentum");
    mmap->add_option("--grid", grid.n, "Points per axis");
    mmap->add_option("--span", grid.span, "Half-width of the relative deviation grid");

    cli::TimeRange range;
    bool oracle = false;
    auto* trace = app.add_subcommand("bound-trace", "Bound-state spin coefficients versus time");
    trace->add_option_function<double>("--t-from", [&](double v) { range.from = v; }, "Start time (a.u.)");
    trace->add_option_function<double>("--t-to", [&](double v) { range.to = v; }, "End time (a.u., default one period)");
    trace->add_option("--steps", range.steps, "Number of samples");
    trace->add_flag("--oracle", oracle, "Integrate the coupled equations numerically");

    bool improved = false;
    auto* sm = app.add_subcommand("simpleman", "Three-stage propagator model versus ionization instant");
    sm->add_option_function<double>("--t-from", [&](double v) { range.from = v; }, "First instant (a.u.)");
    sm->add_option_function<double>("--t-to", [&](double v) { range.to = v; }, "Last instant (a.u.)");
    sm->add_option("--steps", range.steps, "Number of instants");
    sm->add_flag("--improved", improved, "Rest-frame corrected tunnel step (dressed, t_r = 0)");

    double xi = 1000.0;
    auto* t1 = app.add_subcommand("table1", "Strong-field comparison table for both variants and three axes");
    t1->add_option("--xi", xi, "Relativistic field parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ostringstream buf;
    try {
        if (*obs) cli::cmd_observables(raw, buf);
        if (*scan) cli::cmd_scan(raw, sweep, buf);
        if (*mmap) cli::cmd_momentum_map(raw, grid, buf);
        if (*trace) cli::cmd_bound_trace(raw, range, oracle, buf);
        if (*sm) cli::cmd_simpleman(raw, range, improved, buf);
        if (*t1) cli::cmd_table1(raw, xi, buf);
    } catch (const cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << " (residual " << e.residual() << ")\n";
        return 3;
    }

    if (raw.out.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(raw.out, std::ios::binary);
        if (!f) {
            std::cerr << "config error: out: cannot open '" << raw.out << "'\n";
            return 2;
        }
        f << buf.str();
    }
    return 0;
}
