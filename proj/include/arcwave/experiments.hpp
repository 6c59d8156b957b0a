#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "arcwave/config.hpp"
#include "arcwave/scattering.hpp"

namespace arcwave {

// Drivers behind the CLI subcommands. Each returns plain data; the
// writers below fix the file formats.

struct SolveRun {
  Formulation formulation;
  double omega;
  std::size_t n;
  Grid grid;
  Solution solution;
  std::vector<Vec2> field_points;  // empty unless a field grid was requested
  std::vector<Vec2C> field;        // NaN where a point is too close to the curve
};

/// One solve with the first omega, N and formulation of the config.
SolveRun run_solve(const RunConfig& cfg);

/// Evaluation points of a field grid, row by row in x.
std::vector<Vec2> field_grid_points(const FieldGridConfig& f);

/// Points used for error tables: 64 points on a circle of radius 2 about
/// the origin for a point-source run, otherwise radius 2 max|x(t)|.
std::vector<Vec2> error_points(const RunConfig& cfg);

struct ConvergenceRow {
  double omega;
  std::size_t n;
  Formulation formulation;
  double error;
  bool converged;
};

/// Max near-field error against the exact field (point source) or a
/// self-solution at reference_N (default twice the largest N) solved to
/// reference_tol.
std::vector<ConvergenceRow> convergence_table(const RunConfig& cfg);

struct IterationRow {
  double omega;
  std::size_t n;
  Formulation formulation;
  std::size_t iterations;
  double seconds;  // GMRES loop only
  bool converged;
};

/// N pairs with omega when both lists have the same length; otherwise
/// N = round(n_per_omega * omega).
std::vector<IterationRow> iterations_table(const RunConfig& cfg);

struct SpectrumResult {
  std::string op;
  double omega;
  std::size_t n;
  double calderon_shift;   // C = mu / (2 (lambda + 2 mu))
  double predicted_ns;     // -1/4 + C^2
  double predicted_nts;    // -1/4
  double cluster_radius;
  double share_near_ns;    // fraction within cluster_radius of predicted_ns
  double share_near_nts;
  double min_abs;
  double max_abs;
  Eigen::VectorXcd values;
};

/// Dense matrix of a named operator (see SpectrumConfig::op); throws
/// ConfigError when the name does not fit the grid kind.
Eigen::MatrixXcd named_operator(const std::string& op, const Material& m, const Grid& grid);

/// Eigenvalues of the configured operator at the first omega and N.
SpectrumResult spectrum_study(const RunConfig& cfg);

/// Fraction of eigenvalues within radius of a point.
double cluster_share(const Eigen::VectorXcd& values, cplx center, double radius);

struct StripLimitResult {
  std::vector<double> a;
  std::vector<FarField> ellipse;
  FarField strip;
  std::vector<double> gap_magnitude;  // far_field_gap(ellipse[k], strip, true)
  std::vector<double> gap_complex;    // far_field_gap(ellipse[k], strip, false)
};

/// Dirichlet far fields of ellipses (cos t, a sin t) and of the flat strip
/// at the first omega.
StripLimitResult strip_limit(const RunConfig& cfg);

/// max over directions and both parts of |f - g| divided by the largest
/// entry of g; on magnitudes |f|, |g| when `magnitudes` is set.
double far_field_gap(const FarField& f, const FarField& g, bool magnitudes);

// ---- writers ---------------------------------------------------------------

/// j,theta,t,x1,x2,re_a1,im_a1,re_a2,im_a2 with the smooth density.
void write_density_csv(std::ostream& out, const Grid& grid, const Eigen::VectorXcd& density);
/// x1,x2,re_u1,im_u1,re_u2,im_u2
void write_field_csv(std::ostream& out, const std::vector<Vec2>& points, const std::vector<Vec2C>& u);
/// {formulation, omega, N, iterations, converged, final_residual, wall_seconds}
void write_report_json(std::ostream& out, const SolveRun& run);
/// omega,N,formulation,error
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
/// omega,N,formulation,iterations,seconds
void write_iterations_csv(std::ostream& out, const std::vector<IterationRow>& rows);
/// index,re,im
void write_spectrum_csv(std::ostream& out, const SpectrumResult& s);
void write_spectrum_json(std::ostream& out, const SpectrumResult& s, const RunConfig& cfg);
/// a,angle,|up|,|us| with the strip as a = 0 after the ellipses.
void write_strip_limit_csv(std::ostream& out, const StripLimitResult& r);
void write_strip_limit_json(std::ostream& out, const StripLimitResult& r);

}  // namespace arcwave
