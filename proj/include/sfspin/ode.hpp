#pragma once

// Adaptive Dormand-Prince 5(4) integrator shared by the verification oracles.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "sfspin/common.hpp"

namespace sfspin {

struct OdeOptions {
    double tol = 1e-10;      // per-step local error, mixed absolute/relative
    double h_init = 0.0;     // 0: pick from span
    double h_min = 1e-14;    // relative to span
    std::size_t max_steps = 2000000;
};

struct OdeStats {
    std::size_t steps = 0;
    std::size_t rejected = 0;
};

// Integrates y' = f(t, y) from t0 to t1. Vec is any fixed-size Eigen vector
// (real or complex). Throws NumericalError on step-size underflow.
template <class Vec, class F>
Vec integrate_dopri5(F&& f, double t0, double t1, Vec y, const OdeOptions& opt = {}, OdeStats* stats = nullptr)
{
    const double span = t1 - t0;
    if (span == 0.0) return y;
    const double dir = span > 0 ? 1.0 : -1.0;
    const double len = std::abs(span);
    double h = opt.h_init > 0 ? opt.h_init : len / 100.0;
    const double hmin = opt.h_min * len;

    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    double t = t0;
    Vec k1 = f(t, y);
    OdeStats st;
    while (dir * (t1 - t) > 0) {
        if (st.steps + st.rejected > opt.max_steps) throw NumericalError("ode: step budget exhausted");
        if (h > std::abs(t1 - t)) h = std::abs(t1 - t);
        const double hs = dir * h;
        Vec k2 = f(t + c2 * hs, (y + hs * (a21 * k1)).eval());
        Vec k3 = f(t + c3 * hs, (y + hs * (a31 * k1 + a32 * k2)).eval());
        Vec k4 = f(t + c4 * hs, (y + hs * (a41 * k1 + a42 * k2 + a43 * k3)).eval());
        Vec k5 = f(t + c5 * hs, (y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)).eval());
        Vec k6 = f(t + hs, (y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)).eval());
        Vec y5 = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        Vec k7 = f(t + hs, y5);
        Vec err = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double en = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            const double sc = opt.tol * (1.0 + std::max(std::abs(y[i]), std::abs(y5[i])));
            en = std::max(en, std::abs(err[i]) / sc);
        }
        if (en <= 1.0) {
            t = (std::abs(t1 - t) <= h) ? t1 : t + hs;
            y = y5;
            k1 = k7;
            ++st.steps;
        } else {
            ++st.rejected;
        }
        const double fac = en == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0);
        h *= fac;
        if (h < hmin && dir * (t1 - t) > 0) throw NumericalError("ode: step size underflow", en);
    }
    if (stats) *stats = st;
    return y;
}

}  // namespace sfspin
