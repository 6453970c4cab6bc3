#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sfspin {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Vec3c = Eigen::Vector3cd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Spinor4 = Eigen::Vector4cd;

inline constexpr double kSpeedOfLight = 137.035999084;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Invalid physical input (out-of-range charge, ellipticity, window, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An iterative method failed to deliver a result.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

enum class Variant { Standard, Dressed };

inline const char* to_string(Variant v) { return v == Variant::Standard ? "standard" : "dressed"; }

}  // namespace sfspin
