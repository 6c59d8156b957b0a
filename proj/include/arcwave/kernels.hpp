#pragma once

#include "arcwave/geometry.hpp"
#include "arcwave/material.hpp"
#include "arcwave/types.hpp"

namespace arcwave {

/// value(r) = log_coef(r) * log(r) + smooth(r), both parts smooth in r.
struct LogSplit {
  cplx log_coef;
  cplx smooth;
  cplx value(double r) const { return log_coef * std::log(r) + smooth; }
};

/// Radial building blocks of every elastic kernel at one wavenumber:
///
///   g0 = (i/4) H0(kr)
///   g1 = (i/4) k H1(kr) / r   - 1/(2 pi r^2)
///   g2 = (i/4) k^2 H2(kr)     - 1/(pi r^2)
///
/// The subtracted terms are independent of k, so differences of g1 and g2
/// between the shear and pressure wavenumbers equal the differences of the
/// unregularized quantities. All three split as L log r + S with L, S
/// smooth (even in r); r = 0 returns the limits of L and S.
struct RadialSplits {
  LogSplit g0, g1, g2;
};
RadialSplits helmholtz_radial(double k, double r);

/// gamma_k(x, y) = (i/4) H0(k |x - y|).
cplx helmholtz_gamma(double k, const Vec2& x, const Vec2& y);

/// Fundamental displacement tensor of the time-harmonic Navier equation,
/// evaluated directly from Hankel functions.
Mat2C navier_tensor(const Material& m, const Vec2& x, const Vec2& y);

/// 2x2 kernel written as log_coef * log(r) + smooth.
struct SplitMat {
  Mat2C log_coef = Mat2C::Zero();
  Mat2C smooth = Mat2C::Zero();
  Mat2C value(double r) const { return log_coef * std::log(r) + smooth; }
};

/// Geometric data of a source/target pair. `dir` is (x - y)/r, or the unit
/// tangent at x when the points coincide.
struct PairGeometry {
  Vec2 d;
  double r;
  Vec2 dir;
  Vec2 nx;
  Vec2 ny;
};

SplitMat navier_split(const Material& m, const RadialSplits& s, const RadialSplits& p, const PairGeometry& g);

/// Log split of E(x(t), x(tau)) in the arc parameter:
/// E = E1 log|t - tau| + E2. At t = tau, E2 is the analytic limit.
struct KernelSplit {
  Mat2C e1;
  Mat2C e2;
};
KernelSplit kernel_split_E(const Material& m, const ArcGeometry& geom, double t, double tau);

/// Diagonal limit of E2 written out in closed form (Euler constant in place
/// of the expansion constant). Used to cross-check the series route.
Mat2C e2_diagonal_closed_form(const Material& m, const Vec2& dx);

/// Rotation by pi/2; the Günter derivative on a curve is A d/ds.
Mat2 gunter_matrix();

/// J_{nx,ny} = ny nx^T - nx ny^T.
Mat2 normal_commutator(const Vec2& nx, const Vec2& ny);

/// Kernels of the regularized hypersingular operator.
///
///   K_W  = rho w^2 (nx ny^T - (nx.ny) I) - mu~ ks^2 gamma_s J - rho w^2 gamma_p nx ny^T
///   K_S1 = A E A
///   K_S2 = gamma_s
///   K_S3 = nx grad_x^T[gamma_s - gamma_p] A
///   K_S4 = A grad_y[gamma_s - gamma_p] ny^T
struct AuxKernels {
  Mat2C w, s1, s3, s4;
  cplx s2;
};
AuxKernels aux_kernels(const Material& m, const Vec2& x, const Vec2& nx, const Vec2& y, const Vec2& ny);

struct AuxSplits {
  SplitMat w, s1, s2, s3, s4;  // s2 is gamma_s times the identity
};
AuxSplits aux_kernel_splits(const Material& m, const RadialSplits& s, const RadialSplits& p, const PairGeometry& g);

/// Double-layer kernel (T_y E(x, y))^T for the physical traction with
/// normal ny at the source point y.
Mat2C double_layer_kernel(const Material& m, const Vec2& x, const Vec2& y, const Vec2& ny);

/// Modified traction T~_x applied to E(x, y) (adjoint double-layer kernel);
/// pass m.with_physical_traction() for the physical one. Direct evaluation,
/// x != y. `tx` is the unit tangent at x, with nx its clockwise rotation.
Mat2C adjoint_double_layer_kernel(const Material& m, const Vec2& x, const Vec2& nx, const Vec2& tx,
                                  const Vec2& y);

/// Coefficient of log r in the modified adjoint double-layer kernel (the
/// same traction applied to the entire part of E).
Mat2C adjoint_double_layer_log_coef(const Material& m, const Vec2& x, const Vec2& nx, const Vec2& tx,
                                    const Vec2& y);

}  // namespace arcwave
