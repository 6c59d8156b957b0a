#pragma once

#include <functional>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "arcwave/geometry.hpp"
#include "arcwave/gmres.hpp"
#include "arcwave/material.hpp"
#include "arcwave/operators.hpp"
#include "arcwave/types.hpp"

namespace arcwave {

/// The five boundary integral formulations. On closed grids the same tags
/// select S, NS, N~S, N and NS.
enum class Formulation { DirSw, DirNwSw, DirNtwSw, NeuNw, NeuNwSw };

Formulation parse_formulation(std::string_view name);
std::string_view formulation_name(Formulation f);
bool is_dirichlet(Formulation f);
inline constexpr Formulation kAllFormulations[] = {Formulation::DirSw, Formulation::DirNwSw,
                                                   Formulation::DirNtwSw, Formulation::NeuNw,
                                                   Formulation::NeuNwSw};

/// A displacement field with its physical traction on a curve with normal nu.
struct ElasticField {
  std::function<Vec2C(const Vec2&)> u;
  std::function<Vec2C(const Vec2&, const Vec2&)> traction;
};

/// Plane pressure wave d exp(i k_p x.d), d = (cos angle, sin angle).
ElasticField incident_plane_pwave(const Material& m, double angle);

/// Radiating pressure field grad_x H0(k_p |x - z0|).
ElasticField point_source_field(const Material& m, const Vec2& z0);

/// Boundary data at the grid nodes: F = sign * u, G = sign * T u.
struct BoundaryData {
  Eigen::VectorXcd dirichlet;
  Eigen::VectorXcd neumann;
};
BoundaryData boundary_data(const ElasticField& f, const Grid& grid, double sign);

/// Scattering data for an incident field: F = -u_inc, G = -T u_inc.
inline BoundaryData incident_data(const ElasticField& inc, const Grid& grid) {
  return boundary_data(inc, grid, -1.0);
}

/// Lazily assembled operators for one material and grid.
class OperatorCache {
 public:
  OperatorCache(Material m, Grid grid) : m_(std::move(m)), grid_(std::move(grid)) {}

  const Material& material() const { return m_; }
  const Grid& grid() const { return grid_; }

  /// S^w (open) or S (closed).
  std::shared_ptr<const Eigen::MatrixXcd> single();
  /// N^w / N (modified = false) or N~^w / N~ (modified = true).
  std::shared_ptr<const Eigen::MatrixXcd> hyper(bool modified);
  /// Drops the assembled matrices.
  void clear() { s_.reset(); n_.reset(); nt_.reset(); }

  /// Wall time spent assembling so far.
  double assembly_seconds() const { return assembly_seconds_; }

 private:
  Material m_;
  Grid grid_;
  std::shared_ptr<const Eigen::MatrixXcd> s_, n_, nt_;
  double assembly_seconds_ = 0.0;
};

struct SolveOptions {
  double tol = 1e-8;
  std::size_t maxit = 0;  // 0: the system dimension
  bool direct = false;    // LU instead of GMRES
};

struct Solution {
  Formulation formulation;
  /// Smooth density entering the layer potential: alpha~ for the Dirichlet
  /// forms, beta~ for N^w, and S^w beta for N^w S^w.
  Eigen::VectorXcd density;
  /// Raw solution of the linear system.
  Eigen::VectorXcd unknown;
  SolveReport report;
};

/// Solves the chosen equation; non-convergence is reported, not thrown.
Solution solve(Formulation f, OperatorCache& ops, const BoundaryData& data, const SolveOptions& opt = {});

/// The system matrix (lazy composition for the Calderón forms) and its
/// right-hand side.
struct LinearSystem {
  DiscreteOperator op;
  Eigen::VectorXcd rhs;
};
LinearSystem build_system(Formulation f, OperatorCache& ops, const BoundaryData& data);

/// Physical density at the nodes: alpha/w for single-layer forms, beta w
/// for double-layer forms (w = 1 on closed curves).
Eigen::VectorXcd physical_density(const Grid& grid, const Solution& sol);

enum class Representation { single_layer, double_layer };

inline Representation representation_of(Formulation f) {
  return is_dirichlet(f) ? Representation::single_layer : Representation::double_layer;
}

/// Minimum admissible distance from the curve for near-field evaluation.
double near_field_clearance(const Grid& grid);

/// Whether x keeps the clearance from every node.
bool near_field_admissible(const Grid& grid, const Vec2& x);

/// Layer potential of a smooth density at points away from the curve.
/// Throws std::domain_error naming the first point closer than
/// near_field_clearance(grid).
std::vector<Vec2C> near_field(const Material& m, const Grid& grid, const Eigen::VectorXcd& density,
                              Representation rep, const std::vector<Vec2>& points);

struct FarField {
  std::vector<Vec2> directions;
  std::vector<cplx> up;
  std::vector<cplx> us;
};

/// Far-field integrals of a single-layer density,
///   up(xh) = int exp(-i k_p xh.y) xh.phi ds,
///   us(xh) = int exp(-i k_s xh.y) xh_perp.phi ds,  xh_perp = (-xh_2, xh_1),
/// without material prefactors.
FarField far_field(const Material& m, const Grid& grid, const Eigen::VectorXcd& density,
                   const std::vector<Vec2>& directions);

/// n equispaced unit directions starting at angle 0.
std::vector<Vec2> direction_grid(std::size_t n);

/// Leading term of the single-layer field at distance R in direction
/// directions[k], built from a far field:
///   e^{i k_p R + i pi/4}/sqrt(8 pi k_p R) up/(lambda+2mu) xh
/// + e^{i k_s R + i pi/4}/sqrt(8 pi k_s R) us/mu xh_perp.
std::vector<Vec2C> far_field_asymptote(const Material& m, const FarField& ff, double radius);

/// Points equispaced on a circle of the given radius about the origin.
std::vector<Vec2> circle_points(std::size_t n, double radius);

/// max over points and components of |a - b|.
double max_abs_error(const std::vector<Vec2C>& a, const std::vector<Vec2C>& b);

}  // namespace arcwave
