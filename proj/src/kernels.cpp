#include "arcwave/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "arcwave/special_functions.hpp"

namespace arcwave {

namespace {

// Below this value of k r the power series are used; above it the Hankel
// functions are evaluated directly and the log part is subtracted.
constexpr double kSeriesSwitch = 2.0;
constexpr int kMaxTerms = 60;

constexpr double kInv2Pi = 1.0 / (2.0 * kPi);

void require_distinct(const Vec2& x, const Vec2& y, const char* what) {
  if ((x - y).norm() == 0.0) throw std::domain_error(std::string(what) + ": coincident points");
}

Mat2 outer(const Vec2& a, const Vec2& b) { return a * b.transpose(); }

RadialSplits radial_series(double k, double z, double r) {
  const double q = 0.25 * z * z;
  const double k2 = k * k;
  const double lk = std::log(0.5 * k);

  double j0 = 0, j1z = 0, j2 = 0, y0s = 0, y1s = 0, y2s = 0;
  double t0 = 1.0, t1 = 1.0, t2 = 0.5 * q;
  double harm = 0.0;
  double psi1 = -kEulerGamma, psi2 = 1.0 - kEulerGamma, psi3 = 1.5 - kEulerGamma;
  double sign = 1.0;
  for (int m = 0; m < kMaxTerms; ++m) {
    j0 += sign * t0;
    j1z += sign * t1;
    j2 += sign * t2;
    y0s -= sign * harm * t0;
    y1s += sign * (psi1 + psi2) * t1;
    y2s += sign * (psi1 + psi3) * t2;
    if (t0 < 1e-18 && t1 < 1e-18) break;
    const double mp1 = m + 1.0;
    t0 *= q / (mp1 * mp1);
    t1 *= q / (mp1 * (m + 2.0));
    t2 *= q / (mp1 * (m + 3.0));
    harm += 1.0 / mp1;
    psi1 += 1.0 / mp1;
    psi2 += 1.0 / (m + 2.0);
    psi3 += 1.0 / (m + 3.0);
    sign = -sign;
  }
  j1z *= 0.5;
  (void)r;

  RadialSplits s;
  s.g0.log_coef = -kInv2Pi * j0;
  s.g0.smooth = 0.25 * kI * j0 - kInv2Pi * ((lk + kEulerGamma) * j0 + y0s);
  s.g1.log_coef = -kInv2Pi * k2 * j1z;
  s.g1.smooth = 0.25 * kI * k2 * j1z - kInv2Pi * k2 * j1z * lk + k2 / (8.0 * kPi) * y1s;
  s.g2.log_coef = -kInv2Pi * k2 * j2;
  s.g2.smooth = 0.25 * kI * k2 * j2 + k2 / (4.0 * kPi) - kInv2Pi * k2 * j2 * lk + k2 / (4.0 * kPi) * y2s;
  return s;
}

RadialSplits radial_direct(double k, double z, double r) {
  const HankelSet h = hankel1_set(z);
  const double k2 = k * k;
  const double lr = std::log(r);
  const double j0 = h.h[0].real(), j1z = h.h[1].real() / z, j2 = h.h[2].real();

  RadialSplits s;
  s.g0.log_coef = -kInv2Pi * j0;
  s.g0.smooth = 0.25 * kI * h.h[0] - s.g0.log_coef * lr;
  s.g1.log_coef = -kInv2Pi * k2 * j1z;
  s.g1.smooth = 0.25 * kI * k * h.h[1] / r - kInv2Pi / (r * r) - s.g1.log_coef * lr;
  s.g2.log_coef = -kInv2Pi * k2 * j2;
  s.g2.smooth = 0.25 * kI * k2 * h.h[2] - 1.0 / (kPi * r * r) - s.g2.log_coef * lr;
  return s;
}

// Radial derivative factors of gamma_k: grad = F1 d, Hessian = F1 I + F2 d d^T,
// third derivatives carry F3 (see adjoint kernel below).
struct RadialDerivs {
  cplx f1, f2, f3;
};

RadialDerivs radial_derivs(double k, double r) {
  const HankelSet h = hankel1_set(k * r);
  const cplx c = 0.25 * kI;
  return {-c * k * h.h[1] / r, c * k * k * h.h[2] / (r * r), -c * k * k * k * h.h[3] / (r * r * r)};
}

// Log coefficients of the same factors: (i/4) H_n replaced by -J_n/(2 pi).
RadialDerivs radial_derivs_log(double k, double r) {
  const double z = k * r;
  return {kInv2Pi * k * bessel_j(1, z) / r, -kInv2Pi * k * k * bessel_j(2, z) / (r * r),
          kInv2Pi * k * k * k * bessel_j(3, z) / (r * r * r)};
}

// Traction-type kernel shared by the direct and log-coefficient routes.
//   (lambda+mu)/(lambda+2mu) F1p nx d^T + mu d_nx E + mu~ A d_tx E
// with d_v E = (1/mu) F1s (d.v) I + c (F2g[(d.v) I + v d^T + d v^T] + F3g (d.v) d d^T).
Mat2C adjoint_kernel_from(const Material& m, const RadialDerivs& s, const RadialDerivs& p, const Vec2& d,
                          const Vec2& nx, const Vec2& tx) {
  const double c = 1.0 / m.rho_omega2();
  const cplx f2g = s.f2 - p.f2, f3g = s.f3 - p.f3;
  auto dv = [&](const Vec2& v) -> Mat2C {
    const double dn = d.dot(v);
    Mat2C out = (s.f1 * dn / m.mu()) * Mat2C::Identity();
    out += c * (f2g * (dn * Mat2::Identity() + outer(v, d) + outer(d, v)).cast<cplx>() +
                f3g * dn * outer(d, d).cast<cplx>());
    return out;
  };
  const double a = (m.lambda() + m.mu()) / (m.lambda() + 2.0 * m.mu());
  Mat2C k = (a * p.f1) * outer(nx, d).cast<cplx>();
  k += m.mu() * dv(nx);
  k += m.mu_tilde() * gunter_matrix().cast<cplx>() * dv(tx);
  return k;
}

}  // namespace

RadialSplits helmholtz_radial(double k, double r) {
  if (!(k > 0.0) || !(r >= 0.0)) throw std::domain_error("helmholtz_radial: k > 0 and r >= 0 required");
  const double z = k * r;
  return z < kSeriesSwitch ? radial_series(k, z, r) : radial_direct(k, z, r);
}

cplx helmholtz_gamma(double k, const Vec2& x, const Vec2& y) {
  require_distinct(x, y, "helmholtz_gamma");
  return 0.25 * kI * hankel1(0, k * (x - y).norm());
}

Mat2C navier_tensor(const Material& m, const Vec2& x, const Vec2& y) {
  require_distinct(x, y, "navier_tensor");
  const Vec2 d = x - y;
  const double r = d.norm();
  const HankelSet hs = hankel1_set(m.k_s() * r), hp = hankel1_set(m.k_p() * r);
  const cplx c4 = 0.25 * kI;
  const double ks = m.k_s(), kp = m.k_p();
  const cplx dg1 = c4 * (ks * hs.h[1] - kp * hp.h[1]) / r;
  const cplx dg2 = c4 * (ks * ks * hs.h[2] - kp * kp * hp.h[2]);
  const double c = 1.0 / m.rho_omega2();
  const Vec2 u = d / r;
  return (c4 * hs.h[0] / m.mu() - c * dg1) * Mat2C::Identity() + (c * dg2) * outer(u, u).cast<cplx>();
}

SplitMat navier_split(const Material& m, const RadialSplits& s, const RadialSplits& p, const PairGeometry& g) {
  const double c = 1.0 / m.rho_omega2();
  const Mat2C dd = outer(g.dir, g.dir).cast<cplx>();
  SplitMat out;
  out.log_coef = (s.g0.log_coef / m.mu() - c * (s.g1.log_coef - p.g1.log_coef)) * Mat2C::Identity() +
                 (c * (s.g2.log_coef - p.g2.log_coef)) * dd;
  out.smooth = (s.g0.smooth / m.mu() - c * (s.g1.smooth - p.g1.smooth)) * Mat2C::Identity() +
               (c * (s.g2.smooth - p.g2.smooth)) * dd;
  return out;
}

KernelSplit kernel_split_E(const Material& m, const ArcGeometry& geom, double t, double tau) {
  const CurvePoint a = geom.eval(t), b = geom.eval(tau);
  PairGeometry g;
  g.d = a.x - b.x;
  g.r = g.d.norm();
  const bool diag = (t == tau) || g.r == 0.0;
  g.dir = diag ? Vec2(a.dx / a.dx.norm()) : Vec2(g.d / g.r);
  g.nx = unit_normal(a.dx);
  g.ny = unit_normal(b.dx);
  const SplitMat e = navier_split(m, helmholtz_radial(m.k_s(), diag ? 0.0 : g.r),
                                  helmholtz_radial(m.k_p(), diag ? 0.0 : g.r), g);
  // log r = log|t - tau| + log(r / |t - tau|); the second factor is smooth
  // and tends to log|x'(t)| on the diagonal.
  const double shift = diag ? std::log(a.dx.norm()) : std::log(g.r / std::abs(t - tau));
  return {e.log_coef, e.smooth + shift * e.log_coef};
}

Mat2C e2_diagonal_closed_form(const Material& m, const Vec2& dx) {
  const double ks = m.k_s(), kp = m.k_p(), ks2 = ks * ks, kp2 = kp * kp;
  const double jac = dx.norm();
  const double row2 = m.rho_omega2();
  const Vec2 tau = dx / jac;
  const cplx first = kI / (4.0 * m.mu()) * (1.0 + 2.0 * kI / kPi * (std::log(ks * jac / 2.0) + kEulerGamma));
  const cplx bracket = 0.5 * (ks2 - kp2) * (1.0 + 2.0 * kI / kPi * (std::log(jac) + kEulerGamma) - kI / kPi) +
                       kI / kPi * (ks2 * std::log(ks / 2.0) - kp2 * std::log(kp / 2.0));
  return (first - kI / (4.0 * row2) * bracket) * Mat2C::Identity() +
         ((ks2 - kp2) / (4.0 * kPi * row2)) * outer(tau, tau).cast<cplx>();
}

Mat2 gunter_matrix() {
  Mat2 a;
  a << 0.0, -1.0, 1.0, 0.0;
  return a;
}

Mat2 normal_commutator(const Vec2& nx, const Vec2& ny) { return outer(ny, nx) - outer(nx, ny); }

AuxKernels aux_kernels(const Material& m, const Vec2& x, const Vec2& nx, const Vec2& y, const Vec2& ny) {
  require_distinct(x, y, "aux_kernels");
  const Vec2 d = x - y;
  const double r = d.norm();
  const Mat2C A = gunter_matrix().cast<cplx>();
  const double ks = m.k_s(), kp = m.k_p();
  const HankelSet hs = hankel1_set(ks * r), hp = hankel1_set(kp * r);
  const cplx gs = 0.25 * kI * hs.h[0], gp = 0.25 * kI * hp.h[0];
  // grad_x [gamma_s - gamma_p] = -(i/4)(ks H1s - kp H1p) d / r
  const cplx dg = -0.25 * kI * (ks * hs.h[1] - kp * hp.h[1]) / r;
  const double row2 = m.rho_omega2();

  AuxKernels k;
  k.w = row2 * gs * (outer(nx, ny) - nx.dot(ny) * Mat2::Identity()).cast<cplx>() -
        (m.mu_tilde() * ks * ks * gs) * normal_commutator(nx, ny).cast<cplx>() -
        (row2 * gp) * outer(nx, ny).cast<cplx>();
  k.s1 = A * navier_tensor(m, x, y) * A;
  k.s2 = gs;
  k.s3 = dg * outer(nx, d).cast<cplx>() * A;
  k.s4 = -dg * A * outer(d, ny).cast<cplx>();
  return k;
}

AuxSplits aux_kernel_splits(const Material& m, const RadialSplits& s, const RadialSplits& p, const PairGeometry& g) {
  const Mat2C A = gunter_matrix().cast<cplx>();
  const double row2 = m.rho_omega2();
  const double ks2 = m.k_s() * m.k_s();
  const Mat2C dyad_w = (outer(g.nx, g.ny) - g.nx.dot(g.ny) * Mat2::Identity()).cast<cplx>();
  const Mat2C jmat = normal_commutator(g.nx, g.ny).cast<cplx>();
  const Mat2C nn = outer(g.nx, g.ny).cast<cplx>();
  const Mat2C m3 = -(outer(g.nx, g.d).cast<cplx>() * A);
  const Mat2C m4 = A * outer(g.d, g.ny).cast<cplx>();
  const cplx dg1l = s.g1.log_coef - p.g1.log_coef, dg1s = s.g1.smooth - p.g1.smooth;

  AuxSplits a;
  auto w_part = [&](const LogSplit& gs, const LogSplit& gp, bool smooth) -> Mat2C {
    const cplx vs = smooth ? gs.smooth : gs.log_coef;
    const cplx vp = smooth ? gp.smooth : gp.log_coef;
    return row2 * vs * dyad_w - (m.mu_tilde() * ks2 * vs) * jmat - (row2 * vp) * nn;
  };
  a.w.log_coef = w_part(s.g0, p.g0, false);
  a.w.smooth = w_part(s.g0, p.g0, true);

  const SplitMat e = navier_split(m, s, p, g);
  a.s1.log_coef = A * e.log_coef * A;
  a.s1.smooth = A * e.smooth * A;
  a.s2.log_coef = s.g0.log_coef * Mat2C::Identity();
  a.s2.smooth = s.g0.smooth * Mat2C::Identity();
  a.s3.log_coef = dg1l * m3;
  a.s3.smooth = dg1s * m3;
  a.s4.log_coef = dg1l * m4;
  a.s4.smooth = dg1s * m4;
  return a;
}

Mat2C double_layer_kernel(const Material& m, const Vec2& x, const Vec2& y, const Vec2& ny) {
  require_distinct(x, y, "double_layer_kernel");
  const Vec2 d = x - y;
  const double r = d.norm();
  const RadialDerivs s = radial_derivs(m.k_s(), r), p = radial_derivs(m.k_p(), r);
  const double dn = d.dot(ny);
  const double c2 = 2.0 * m.mu() / m.rho_omega2();
  const cplx f2g = s.f2 - p.f2, f3g = s.f3 - p.f3;
  // (T_y E)_{ij} = -lambda/(lambda+2mu) n_i d_j gamma_p - delta_ij d_n gamma_s - n_j d_i gamma_s
  //               - (2mu/(rho w^2)) d_i d_j d_n (gamma_s - gamma_p), derivatives in x.
  Mat2C t = -(m.lambda() / (m.lambda() + 2.0 * m.mu()) * p.f1) * outer(ny, d).cast<cplx>();
  t -= (s.f1 * dn) * Mat2C::Identity();
  t -= s.f1 * outer(d, ny).cast<cplx>();
  t -= c2 * (f2g * (dn * Mat2::Identity() + outer(ny, d) + outer(d, ny)).cast<cplx>() +
             f3g * dn * outer(d, d).cast<cplx>());
  return t.transpose();
}

Mat2C adjoint_double_layer_kernel(const Material& m, const Vec2& x, const Vec2& nx, const Vec2& tx,
                                  const Vec2& y) {
  require_distinct(x, y, "adjoint_double_layer_kernel");
  const double r = (x - y).norm();
  return adjoint_kernel_from(m, radial_derivs(m.k_s(), r), radial_derivs(m.k_p(), r), x - y, nx, tx);
}

Mat2C adjoint_double_layer_log_coef(const Material& m, const Vec2& x, const Vec2& nx, const Vec2& tx,
                                    const Vec2& y) {
  require_distinct(x, y, "adjoint_double_layer_log_coef");
  const double r = (x - y).norm();
  return adjoint_kernel_from(m, radial_derivs_log(m.k_s(), r), radial_derivs_log(m.k_p(), r), x - y, nx, tx);
}

}  // namespace arcwave
