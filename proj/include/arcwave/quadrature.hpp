#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "arcwave/types.hpp"

namespace arcwave {

/// Weights of the spectral rule for the logarithmic kernel on the
/// Chebyshev angles theta_j = pi(2j+1)/(2N):
///
///   int_0^pi log|cos theta - cos theta'| f(theta') dtheta'
///     ~ (pi/N) sum_j f(theta_j) R_j(theta).
///
/// At the nodes R_j(theta_i) = R(|i-j|) + R(i+j+1) with
/// R(l) = -sum_{m<N} (2 - delta_{0m}) lambda_m cos(l m pi / N).
class SymmWeights {
 public:
  explicit SymmWeights(std::size_t n);

  std::size_t n() const { return n_; }
  double table(std::size_t l) const { return table_[l]; }
  double operator()(std::size_t i, std::size_t j) const {
    return table_[i > j ? i - j : j - i] + table_[i + j + 1];
  }
  /// R_j(theta) at an arbitrary angle.
  double at(std::size_t j, double theta) const;

  /// Eigenvalues of Symm's operator in the cosine basis.
  static double lambda(std::size_t m);

 private:
  std::size_t n_;
  std::vector<double> table_;
};

SymmWeights symm_weights(std::size_t n);

/// (pi/N) sum_j f(theta_j) R_j(theta).
cplx log_quadrature(const Eigen::VectorXcd& f, const SymmWeights& w, double theta);

/// (pi/N) sum_j f(theta_j).
cplx trapezoid_cheb(const Eigen::VectorXcd& f);

/// Selects the discrete transform implementation; `automatic` uses direct
/// summation below 256 points and FFTW above.
enum class TransformPath { automatic, direct, fft };

/// Cosine coefficients a_n = (2 - delta_{0n})/N sum_j f_j cos(n theta_j).
Eigen::VectorXcd cosine_coefficients(const Eigen::VectorXcd& f, TransformPath path = TransformPath::automatic);
/// sum_n a_n cos(n theta_j) at the nodes.
Eigen::VectorXcd cosine_synthesis(const Eigen::VectorXcd& a, TransformPath path = TransformPath::automatic);
/// Sine coefficients c_n, n = 1..N (stored at index n-1), of the unique
/// expansion sum_{n=1}^N c_n sin(n theta) through the nodal values.
Eigen::VectorXcd sine_coefficients(const Eigen::VectorXcd& g, TransformPath path = TransformPath::automatic);

/// d phi / dt at the nodes, phi(t) = f(arccos t), by Chebyshev coefficient
/// differentiation.
Eigen::VectorXcd d0_derivative(const Eigen::VectorXcd& f, TransformPath path = TransformPath::automatic);

/// d/dtheta (f(theta) sin theta) at the nodes, through the sine expansion.
Eigen::VectorXcd t0_derivative(const Eigen::VectorXcd& f, TransformPath path = TransformPath::automatic);

/// Dense N x N matrices of the two maps above.
Eigen::MatrixXd d0_matrix(std::size_t n);
Eigen::MatrixXd t0_matrix(std::size_t n);

/// Closed-curve weights for int_0^{2 pi} ln(4 sin^2((t - tau)/2)) f(tau) dtau
/// on M = 2n equispaced nodes t_j = pi j / n. Returns R(l), l = 0..M-1, so
/// that the weight of node j at target node i is R((i - j) mod M).
std::vector<double> kress_log_weights(std::size_t num_nodes);

/// Weight of node t_j for an arbitrary target t (same rule as above).
double kress_log_weight(std::size_t num_nodes, double t, double tj);

/// Spectral derivative matrix for 2 pi-periodic data on an even number of
/// equispaced nodes.
Eigen::MatrixXd periodic_derivative_matrix(std::size_t num_nodes);

}  // namespace arcwave
