#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arcwave/kernels.hpp"
#include "arcwave/operators.hpp"
#include "arcwave/parallel.hpp"
#include "arcwave/quadrature.hpp"
#include "assembly_common.hpp"

namespace arcwave {

using detail::accumulate;
using detail::KernelCombo;
using detail::repeat2;

namespace {

void require_closed(const Grid& grid) {
  if (!grid.closed) throw std::invalid_argument("closed-curve assembly called with an open-arc grid");
}

struct CurveScales {
  Eigen::VectorXd jac, ones;
  Eigen::MatrixXd dp;       // d/dt
  Eigen::MatrixXd jinv_dp;  // d/ds
};

CurveScales curve_scales(const Grid& grid) {
  const std::size_t n = grid.size();
  CurveScales s;
  Eigen::VectorXd jac(n), jinv(n);
  for (std::size_t j = 0; j < n; ++j) {
    jac(j) = grid.jac[j];
    jinv(j) = 1.0 / grid.jac[j];
  }
  s.jac = repeat2(jac);
  s.ones = Eigen::VectorXd::Ones(2 * n);
  s.dp = periodic_derivative_matrix(n);
  s.jinv_dp = jinv.asDiagonal() * s.dp;
  return s;
}

Eigen::MatrixXcd single_layer(const Material& m, const Grid& grid, const detail::PairRule& rule,
                              const CurveScales& sc) {
  const std::size_t dim = 2 * grid.size();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
  accumulate(m, grid, rule, KernelCombo{.e = 1.0}, sc.jac, s);
  return s;
}

// Regularized hypersingular operator; d/ds = (1/|x'|) d/dt with the
// periodic spectral derivative.
Eigen::MatrixXcd hypersingular(const Material& m, const Grid& grid, const detail::PairRule& rule,
                               const CurveScales& sc, double mu_t) {
  const std::size_t dim = 2 * grid.size();
  const double c1 = m.mu() + mu_t;
  const double ks2 = m.k_s() * m.k_s();

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  accumulate(m, grid, rule, KernelCombo{.aea = c1 * c1, .gs = 2.0 * c1}, sc.ones, acc);
  detail::right_multiply_blockdiag(acc, sc.dp);
  accumulate(m, grid, rule, KernelCombo{.s4 = -c1}, sc.jac, acc);
  detail::left_multiply_blockdiag(sc.jinv_dp, acc);

  Eigen::MatrixXcd grad = Eigen::MatrixXcd::Zero(dim, dim);
  accumulate(m, grid, rule, KernelCombo{.s3 = -c1}, sc.ones, grad);
  detail::right_multiply_blockdiag(grad, sc.dp);
  acc += grad;
  grad.resize(0, 0);

  accumulate(m, grid, rule, KernelCombo{.w0 = -1.0, .wj = mu_t * ks2}, sc.jac, acc);
  return acc;
}

// Smooth part K - L log r of the modified adjoint double-layer kernel,
// in the periodic split K = L/2 ln(4 sin^2((t - tau)/2)) + K2.
Mat2C adjoint_smooth_part(const Material& m, const Grid& grid, std::size_t i, const Vec2& y, double tau,
                          const Vec2& tx) {
  const Vec2& x = grid.point[i];
  const Mat2C k = adjoint_double_layer_kernel(m, x, grid.normal[i], tx, y);
  const Mat2C l = adjoint_double_layer_log_coef(m, x, grid.normal[i], tx, y);
  const double sn = std::sin(0.5 * (grid.param[i] - tau));
  return k - 0.5 * std::log(4.0 * sn * sn) * l;
}

// K~* on the closed grid. Off the diagonal the kernel is evaluated
// directly; on the diagonal K2 is the limit tau -> t_i, obtained from the
// even part of K2 at tau = t_i +- h, +-2h, +-3h by polynomial extrapolation
// in h^2 (weights 3/2, -3/5, 1/10).
Eigen::MatrixXcd adjoint_double_layer(const Material& m, const ArcGeometry& geom, const Grid& grid) {
  const std::size_t n = grid.size();
  const std::vector<double> rw = kress_log_weights(n);
  const double hq = kPi / double(grid.n);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  parallel_for(n, [&](std::size_t i) {
    const Vec2 tx = grid.deriv[i] / grid.jac[i];
    for (std::size_t j = 0; j < n; ++j) {
      Mat2C l, k2;
      if (i == j) {
        const double h = std::min(0.05, 0.1 / (std::max(m.k_s(), 1.0) * grid.jac[i]));
        const double wts[3] = {1.5, -0.6, 0.1};
        k2 = Mat2C::Zero();
        for (int s = 1; s <= 3; ++s) {
          Mat2C even = Mat2C::Zero();
          for (int sg : {-1, 1}) {
            const double tau = grid.param[i] + sg * s * h;
            even += 0.5 * adjoint_smooth_part(m, grid, i, geom.eval(tau).x, tau, tx);
          }
          k2 += wts[s - 1] * even;
        }
        // Log coefficient at coincidence: the J-type factors are regular, so
        // take the same extrapolated limit.
        l = Mat2C::Zero();
        for (int s = 1; s <= 3; ++s) {
          Mat2C even = Mat2C::Zero();
          for (int sg : {-1, 1}) {
            const double tau = grid.param[i] + sg * s * h;
            even += 0.5 * adjoint_double_layer_log_coef(m, grid.point[i], grid.normal[i], tx, geom.eval(tau).x);
          }
          l += wts[s - 1] * even;
        }
      } else {
        l = adjoint_double_layer_log_coef(m, grid.point[i], grid.normal[i], tx, grid.point[j]);
        k2 = adjoint_smooth_part(m, grid, i, grid.point[j], grid.param[j], tx);
      }
      const Mat2C v = (0.5 * rw[(i + n - j) % n] * l + hq * k2) * grid.jac[j];
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out(a * n + i, b * n + j) = v(a, b);
    }
  });
  return out;
}

}  // namespace

Eigen::MatrixXcd assemble_closed(const Material& m, const Grid& grid, ClosedOperator which) {
  require_closed(grid);
  const auto rule = detail::closed_rule(grid);
  const CurveScales sc = curve_scales(grid);
  switch (which) {
    case ClosedOperator::S: return single_layer(m, grid, rule, sc);
    case ClosedOperator::N: return hypersingular(m, grid, rule, sc, m.mu());
    case ClosedOperator::Ntilde: return hypersingular(m, grid, rule, sc, m.mu_tilde());
    case ClosedOperator::Ktilde_star:
    case ClosedOperator::Kstar:
      throw std::invalid_argument("assemble_closed: the double-layer operators need the geometry");
  }
  throw std::invalid_argument("assemble_closed: unknown operator");
}

Eigen::MatrixXcd assemble_closed(const Material& m, const ArcGeometry& geom, const Grid& grid,
                                 ClosedOperator which) {
  require_closed(grid);
  if (which == ClosedOperator::Ktilde_star) return adjoint_double_layer(m, geom, grid);
  if (which == ClosedOperator::Kstar) {
    // T = T~ + (mu - mu~) A d/ds, so K* = K~* + (mu - mu~) A d/ds S.
    const CurveScales sc = curve_scales(grid);
    Eigen::MatrixXcd ds = single_layer(m, grid, detail::closed_rule(grid), sc);
    detail::left_multiply_blockdiag(sc.jinv_dp, ds);
    const std::size_t n = grid.size();
    Eigen::MatrixXcd ads(2 * n, 2 * n);
    ads.topRows(n) = -ds.bottomRows(n);
    ads.bottomRows(n) = ds.topRows(n);
    return adjoint_double_layer(m, geom, grid) + (m.mu() - m.mu_tilde()) * ads;
  }
  return assemble_closed(m, grid, which);
}

ClosedOperators assemble_closed_all(const Material& m, const Grid& grid, bool with_n, bool with_nt) {
  require_closed(grid);
  const auto rule = detail::closed_rule(grid);
  const CurveScales sc = curve_scales(grid);
  ClosedOperators ops;
  ops.s = single_layer(m, grid, rule, sc);
  if (with_n) ops.n = hypersingular(m, grid, rule, sc, m.mu());
  if (with_nt) ops.nt = hypersingular(m, grid, rule, sc, m.mu_tilde());
  return ops;
}

}  // namespace arcwave
