#include <stdexcept>

#include "arcwave/operators.hpp"
#include "arcwave/quadrature.hpp"
#include "assembly_common.hpp"

namespace arcwave {

using detail::accumulate;
using detail::KernelCombo;
using detail::repeat2;

namespace {

void require_open(const Grid& grid) {
  if (grid.closed) throw std::invalid_argument("open-arc assembly called with a closed-curve grid");
}

struct ArcScales {
  Eigen::VectorXd jac;     // |x'_j|
  Eigen::VectorXd wjac;    // |x'_j| sin^2(theta_j): w ds in the angular variable
  Eigen::VectorXd ones;
  Eigen::MatrixXd jinv_d0; // (1/|x'_i|) d/dt
  Eigen::MatrixXd t0;
};

ArcScales arc_scales(const Grid& grid) {
  const std::size_t n = grid.size();
  ArcScales s;
  Eigen::VectorXd jac(n), wjac(n), jinv(n);
  for (std::size_t j = 0; j < n; ++j) {
    jac(j) = grid.jac[j];
    wjac(j) = grid.jac[j] * grid.weight[j] * grid.weight[j];
    jinv(j) = 1.0 / grid.jac[j];
  }
  s.jac = repeat2(jac);
  s.wjac = repeat2(wjac);
  s.ones = Eigen::VectorXd::Ones(2 * n);
  s.jinv_d0 = jinv.asDiagonal() * d0_matrix(n);
  s.t0 = t0_matrix(n);
  return s;
}

// Integrals against d(wu)/ds pick up a minus sign in the angular variable:
// int F d(wu)/ds ds = -int F T0[u] dtheta.
Eigen::MatrixXcd nw_matrix(const Material& m, const Grid& grid, const detail::PairRule& rule,
                           const ArcScales& sc, double mu_t) {
  const std::size_t dim = 2 * grid.size();
  const double c1 = m.mu() + mu_t;
  const double ks2 = m.k_s() * m.k_s();

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  accumulate(m, grid, rule, KernelCombo{.aea = c1 * c1, .gs = 2.0 * c1}, sc.ones, acc);
  detail::right_multiply_blockdiag(acc, sc.t0);
  accumulate(m, grid, rule, KernelCombo{.s4 = c1}, sc.wjac, acc);
  detail::left_multiply_blockdiag(sc.jinv_d0, acc);
  acc = -acc;

  Eigen::MatrixXcd grad = Eigen::MatrixXcd::Zero(dim, dim);
  accumulate(m, grid, rule, KernelCombo{.s3 = c1}, sc.ones, grad);
  detail::right_multiply_blockdiag(grad, sc.t0);
  acc += grad;
  grad.resize(0, 0);

  accumulate(m, grid, rule, KernelCombo{.w0 = -1.0, .wj = mu_t * ks2}, sc.wjac, acc);
  return acc;
}

}  // namespace

Eigen::MatrixXcd assemble_Sw(const Material& m, const Grid& grid) {
  require_open(grid);
  const std::size_t dim = 2 * grid.size();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXd jac(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) jac(j) = grid.jac[j];
  accumulate(m, grid, detail::open_arc_rule(grid), KernelCombo{.e = 1.0}, repeat2(jac), s);
  return s;
}

Eigen::MatrixXcd assemble_Nw(const Material& m, const Grid& grid, bool modified) {
  require_open(grid);
  return nw_matrix(m, grid, detail::open_arc_rule(grid), arc_scales(grid), modified ? m.mu_tilde() : m.mu());
}

NwTerms assemble_Nw_terms(const Material& m, const Grid& grid, bool modified) {
  require_open(grid);
  const auto rule = detail::open_arc_rule(grid);
  const ArcScales sc = arc_scales(grid);
  const double mu_t = modified ? m.mu_tilde() : m.mu();
  const double c1 = m.mu() + mu_t;
  const std::size_t dim = 2 * grid.size();
  auto zero = [dim] { return Eigen::MatrixXcd::Zero(dim, dim).eval(); };

  NwTerms t;
  t.weakly = zero();
  accumulate(m, grid, rule, KernelCombo{.w0 = -1.0, .wj = mu_t * m.k_s() * m.k_s()}, sc.wjac, t.weakly);

  auto derivative_term = [&](const KernelCombo& combo) {
    Eigen::MatrixXcd q = zero();
    accumulate(m, grid, rule, combo, sc.ones, q);
    detail::right_multiply_blockdiag(q, sc.t0);
    detail::left_multiply_blockdiag(sc.jinv_d0, q);
    return (-q).eval();
  };
  t.gunter = derivative_term(KernelCombo{.aea = c1 * c1});
  t.shear = derivative_term(KernelCombo{.gs = 2.0 * c1});

  t.gradient = zero();
  accumulate(m, grid, rule, KernelCombo{.s3 = c1}, sc.ones, t.gradient);
  detail::right_multiply_blockdiag(t.gradient, sc.t0);

  t.normal = zero();
  accumulate(m, grid, rule, KernelCombo{.s4 = -c1}, sc.wjac, t.normal);
  detail::left_multiply_blockdiag(sc.jinv_d0, t.normal);
  return t;
}

OpenArcOperators assemble_open_arc(const Material& m, const Grid& grid, bool with_nw, bool with_ntw) {
  require_open(grid);
  OpenArcOperators ops;
  ops.sw = assemble_Sw(m, grid);
  if (with_nw || with_ntw) {
    const auto rule = detail::open_arc_rule(grid);
    const ArcScales sc = arc_scales(grid);
    if (with_nw) ops.nw = nw_matrix(m, grid, rule, sc, m.mu());
    if (with_ntw) ops.ntw = nw_matrix(m, grid, rule, sc, m.mu_tilde());
  }
  return ops;
}

}  // namespace arcwave
