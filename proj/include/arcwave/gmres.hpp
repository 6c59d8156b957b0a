#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace arcwave {

struct SolveReport {
  std::size_t iterations = 0;
  /// Relative residuals ||b - A x_k|| / ||b||, starting with 1 for x_0 = 0.
  std::vector<double> residual_history;
  bool converged = false;
  double final_residual = 1.0;
  double wall_seconds = 0.0;
  /// Arnoldi step at which the new basis vector vanished, if any.
  std::optional<std::size_t> breakdown_iteration;
};

struct GmresResult {
  Eigen::VectorXcd x;
  SolveReport report;
};

using MatVec = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

/// Unrestarted, unpreconditioned GMRES with modified Gram-Schmidt plus one
/// reorthogonalization pass. Stops when the relative residual drops to tol
/// or after maxit Arnoldi steps.
GmresResult gmres(const MatVec& apply, const Eigen::VectorXcd& b, double tol, std::size_t maxit);

}  // namespace arcwave
