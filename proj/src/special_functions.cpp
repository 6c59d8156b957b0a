#include "arcwave/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/bessel.hpp>

namespace arcwave {

namespace {

using NoPromote = boost::math::policies::policy<boost::math::policies::promote_double<false>>;

void check_order(int n, int max_order, const char* what) {
  if (n < 0 || n > max_order)
    throw std::domain_error(std::string(what) + ": order " + std::to_string(n) + " not supported");
}

}  // namespace

double bessel_j(int n, double x) {
  check_order(n, 3, "bessel_j");
  if (!std::isfinite(x)) throw std::domain_error("bessel_j: non-finite argument");
  return boost::math::cyl_bessel_j(n, x, NoPromote());
}

double bessel_y(int n, double x) {
  check_order(n, 1, "bessel_y");
  if (!(x > 0.0)) throw std::domain_error("bessel_y: argument must be positive");
  return boost::math::cyl_neumann(n, x, NoPromote());
}

HankelSet hankel1_set(double x) {
  if (!(x > 0.0)) throw std::domain_error("hankel1: argument must be positive");
  HankelSet s;
  const double j0 = boost::math::cyl_bessel_j(0, x, NoPromote());
  const double j1 = boost::math::cyl_bessel_j(1, x, NoPromote());
  const double y0 = boost::math::cyl_neumann(0, x, NoPromote());
  const double y1 = boost::math::cyl_neumann(1, x, NoPromote());
  s.h[0] = cplx(j0, y0);
  s.h[1] = cplx(j1, y1);
  // J_2, J_3 by the forward recurrence lose accuracy for x << 1 only in
  // the real part; take them from the library and recur the Y part, which
  // is stable upwards.
  const double j2 = boost::math::cyl_bessel_j(2, x, NoPromote());
  const double j3 = boost::math::cyl_bessel_j(3, x, NoPromote());
  const double y2 = (2.0 / x) * y1 - y0;
  const double y3 = (4.0 / x) * y2 - y1;
  s.h[2] = cplx(j2, y2);
  s.h[3] = cplx(j3, y3);
  return s;
}

cplx hankel1(int n, double x) {
  check_order(n, 3, "hankel1");
  return hankel1_set(x).h[n];
}

}  // namespace arcwave
