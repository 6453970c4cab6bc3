#pragma once

#include <array>
#include <cmath>

#include "sfspin/common.hpp"

namespace sfspin::detail {

template <int N>
struct GaussLegendre {
    std::array<double, N> x{};
    std::array<double, N> w{};
    GaussLegendre()
    {
        for (int i = 0; i < N; ++i) {
            double z = std::cos(kPi * (i + 0.75) / (N + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = z;
                for (int k = 2; k <= N; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (z * p1 - p0) / (z * z - 1.0);
                const double dz = p1 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            x[i] = z;
            w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
    }
};

// Integral over u in [0, 1] of f(u), composite Gauss-Legendre with panel doubling.
template <class F>
cplx integrate_unit(F&& f, double rel_tol = 1e-14, int max_panels = 256)
{
    static const GaussLegendre<20> gl;
    auto composite = [&](int m) {
        cplx s = 0.0;
        const double h = 1.0 / m;
        for (int j = 0; j < m; ++j) {
            const double a = j * h;
            for (int i = 0; i < 20; ++i) s += gl.w[i] * f(a + 0.5 * h * (gl.x[i] + 1.0));
        }
        return 0.5 * h * s;
    };
    cplx prev = composite(1);
    for (int m = 2; m <= max_panels; m *= 2) {
        const cplx cur = composite(m);
        if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1e-300)) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace sfspin::detail
