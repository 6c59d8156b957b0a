#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace arcwave {

using cplx = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Vec2C = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2d;
using Mat2C = Eigen::Matrix2cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;
inline constexpr cplx kI{0.0, 1.0};

}  // namespace arcwave
