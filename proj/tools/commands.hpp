#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "sfspin/scenario.hpp"

namespace sfspin::cli {

// Raised for invalid or incomplete configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RawConfig {
    std::optional<double> kappa, E0, intensity, E0_ratio, omega, wavelength;
    double zeta = 0.0;
    std::string variant = "dressed";
    double theta = 0.0, phi = 0.0, t_r = 0.0;
    std::string average = "none";
    std::string format = "csv";
    std::string out;
};

struct SweepSpec {
    std::string name;
    double from = 0.0, to = 0.0;
    int steps = 0;
    bool log = false;
};

struct GridSpec {
    int n = 101;
    double span = 0.2;
};

struct TimeRange {
    std::optional<double> from, to;
    int steps = 100;
};

Scenario resolve(const RawConfig& raw);

void cmd_observables(const RawConfig& raw, std::ostream& os);
void cmd_scan(const RawConfig& raw, const SweepSpec& sweep, std::ostream& os);
void cmd_momentum_map(const RawConfig& raw, const GridSpec& grid, std::ostream& os);
void cmd_bound_trace(const RawConfig& raw, const TimeRange& range, bool oracle, std::ostream& os);
void cmd_simpleman(const RawConfig& raw, const TimeRange& range, bool improved, std::ostream& os);
void cmd_table1(const RawConfig& raw, double xi, std::ostream& os);

}  // namespace sfspin::cli
