#pragma once

// Shared Nyström machinery for open-arc and closed-curve assembly.

#include <functional>

#include <Eigen/Dense>

#include "arcwave/geometry.hpp"
#include "arcwave/kernels.hpp"
#include "arcwave/material.hpp"

namespace arcwave::detail {

/// Linear combination of the kernels entering the regularized operators.
struct KernelCombo {
  cplx e = 0.0;     // E
  cplx aea = 0.0;   // A E A
  cplx gs = 0.0;    // gamma_s I
  cplx s3 = 0.0;    // nx grad_x^T [gamma_s - gamma_p] A
  cplx s4 = 0.0;    // A grad_y [gamma_s - gamma_p] ny^T
  cplx w0 = 0.0;    // rho w^2 gamma_s (nx ny^T - (nx.ny) I) - rho w^2 gamma_p nx ny^T
  cplx wj = 0.0;    // gamma_s J_{nx,ny}
};

/// Log-quadrature weight attached to the log coefficient of a kernel at
/// the pair (i, j), and the plain trapezoid weight of its smooth part.
struct PairRule {
  std::function<double(std::size_t, std::size_t, double)> log_weight;  // (i, j, r)
  double smooth_weight;
};

PairRule open_arc_rule(const Grid& grid);
PairRule closed_rule(const Grid& grid);

/// out += sum_k coef_k Q[K_k] diag(colscale) in component-major layout,
/// where Q[K]_ij = log_weight(i, j) K1 + smooth_weight K2.
void accumulate(const Material& m, const Grid& grid, const PairRule& rule, const KernelCombo& combo,
                const Eigen::VectorXd& colscale, Eigen::MatrixXcd& out);

/// M <- M kron(I2, T) for a real N x N matrix T.
void right_multiply_blockdiag(Eigen::MatrixXcd& m, const Eigen::MatrixXd& t);
/// M <- kron(I2, T) M.
void left_multiply_blockdiag(const Eigen::MatrixXd& t, Eigen::MatrixXcd& m);

/// diag(v) applied blockwise to both components.
Eigen::VectorXd repeat2(const Eigen::VectorXd& v);

}  // namespace arcwave::detail
