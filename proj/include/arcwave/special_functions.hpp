#pragma once

#include "arcwave/types.hpp"

namespace arcwave {

/// Bessel functions of the first kind, orders 0..3, real argument.
double bessel_j(int n, double x);

/// Bessel functions of the second kind, orders 0..1, x > 0.
double bessel_y(int n, double x);

/// Hankel functions of the first kind, orders 0..3, x > 0. Orders above
/// one use the upward recurrence H_{n+1} = (2n/x) H_n - H_{n-1}.
cplx hankel1(int n, double x);

/// H_0 .. H_3 at a single argument, sharing one evaluation of J_0, J_1,
/// Y_0, Y_1.
struct HankelSet {
  cplx h[4];
};
HankelSet hankel1_set(double x);

}  // namespace arcwave
