#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "arcwave/geometry.hpp"
#include "arcwave/material.hpp"
#include "arcwave/types.hpp"

namespace arcwave {

/// Dense complex 2N x 2N matrix with 2x2 blocks indexed by node pairs.
///
/// Storage is component-major: unknown (a, j), a in {0, 1}, sits at index
/// a*N + j, so block (i, j) holds entries (a*N + i, b*N + j).
class BlockMatrix {
 public:
  BlockMatrix() = default;
  explicit BlockMatrix(std::size_t nodes) : n_(nodes), m_(Eigen::MatrixXcd::Zero(2 * nodes, 2 * nodes)) {}
  explicit BlockMatrix(Eigen::MatrixXcd m);

  std::size_t nodes() const { return n_; }
  std::size_t dim() const { return 2 * n_; }

  Mat2C block(std::size_t i, std::size_t j) const;
  void set_block(std::size_t i, std::size_t j, const Mat2C& b);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  Eigen::MatrixXcd& matrix() { return m_; }

 private:
  std::size_t n_ = 0;
  Eigen::MatrixXcd m_;
};

/// Nodal 2-vector field <-> component-major vector.
Eigen::VectorXcd pack(const std::vector<Vec2C>& f);
std::vector<Vec2C> unpack(const Eigen::VectorXcd& v);

enum class OperatorKind {
  Sw,
  Nw,
  Ntw,
  NwSw,
  NtwSw,
  S_closed,
  N_closed,
  Ntilde_closed,
  Kstar_closed,
  NS_closed,
  NtS_closed,
  identity,
  custom,
};

std::string_view operator_kind_name(OperatorKind k);

/// Either an assembled matrix or the lazy product left * right (the right
/// factor is applied first).
class DiscreteOperator {
 public:
  DiscreteOperator(OperatorKind kind, Eigen::MatrixXcd m);
  /// Shares an existing matrix without copying it.
  DiscreteOperator(OperatorKind kind, std::shared_ptr<const Eigen::MatrixXcd> m);
  DiscreteOperator(OperatorKind kind, const DiscreteOperator& left, const DiscreteOperator& right);

  static DiscreteOperator identity(std::size_t dim);

  OperatorKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  bool composite() const { return !matrix_; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
  /// Dense matrix of the operator (a product for composites).
  Eigen::MatrixXcd materialize() const;
  /// The stored matrix of an assembled operator.
  const Eigen::MatrixXcd& matrix() const;

 private:
  OperatorKind kind_;
  std::size_t dim_ = 0;
  std::shared_ptr<const Eigen::MatrixXcd> matrix_;
  std::shared_ptr<const DiscreteOperator> left_, right_;
};

/// Lazy composition; throws std::invalid_argument on a dimension mismatch.
DiscreteOperator compose(const DiscreteOperator& left, const DiscreteOperator& right,
                         OperatorKind kind = OperatorKind::custom);

// ---- open arcs -------------------------------------------------------------

/// Weighted single layer acting on the smooth density alpha~ at the
/// Chebyshev nodes: block (i, j) = (pi/N)|x'_j| [E1 R_j(theta_i) + E2].
Eigen::MatrixXcd assemble_Sw(const Material& m, const Grid& grid);

/// The five pieces of the regularized weighted hypersingular operator, each
/// acting on the smooth density beta~:
///   weakly     -int K_W w u ds
///   gunter     (mu+mu~)^2 d/ds int A E A d(wu)/ds ds
///   shear      2(mu+mu~) d/ds int gamma_s d(wu)/ds ds
///   gradient   -(mu+mu~) int nx grad_x^T[gamma_s - gamma_p] A d(wu)/ds ds
///   normal     -(mu+mu~) d/ds int A grad_y[gamma_s - gamma_p] ny^T w u ds
struct NwTerms {
  Eigen::MatrixXcd weakly, gunter, shear, gradient, normal;
  Eigen::MatrixXcd sum() const { return weakly + gunter + shear + gradient + normal; }
};
NwTerms assemble_Nw_terms(const Material& m, const Grid& grid, bool modified);

/// N^w (modified = false, mu~ = mu) or N~^w (modified = true).
Eigen::MatrixXcd assemble_Nw(const Material& m, const Grid& grid, bool modified);

/// S^w together with N^w and N~^w, sharing the derivative matrices.
struct OpenArcOperators {
  Eigen::MatrixXcd sw, nw, ntw;
};
OpenArcOperators assemble_open_arc(const Material& m, const Grid& grid, bool with_nw = true, bool with_ntw = true);

/// Unweighted single layer acting on the physical density: S^w diag(w).
Eigen::MatrixXcd unweighted_S(const Eigen::MatrixXcd& sw, const Grid& grid);

// ---- closed curves ---------------------------------------------------------

enum class ClosedOperator { S, N, Ntilde, Kstar, Ktilde_star };

/// Nyström matrices on the 2N equispaced nodes of a closed grid, with the
/// periodic log rule for the log parts. N and N~ use the regularized
/// formula. The double-layer kinds (K*, K~*) need the curve itself and are
/// only available through the overload taking the geometry.
Eigen::MatrixXcd assemble_closed(const Material& m, const Grid& grid, ClosedOperator which);
Eigen::MatrixXcd assemble_closed(const Material& m, const ArcGeometry& geom, const Grid& grid,
                                 ClosedOperator which);

struct ClosedOperators {
  Eigen::MatrixXcd s, n, nt;
};
ClosedOperators assemble_closed_all(const Material& m, const Grid& grid, bool with_n = true, bool with_nt = true);

// ---- spectra ---------------------------------------------------------------

/// All eigenvalues of a dense complex matrix; throws std::runtime_error if
/// the QR iteration fails to converge.
Eigen::VectorXcd spectrum(const Eigen::MatrixXcd& a);

struct EigenDecomposition {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;  // right eigenvectors, column k for values(k)
};
EigenDecomposition eigen_decomposition(const Eigen::MatrixXcd& a);

}  // namespace arcwave
