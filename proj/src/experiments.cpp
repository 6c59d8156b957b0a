#include "arcwave/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "arcwave/operators.hpp"

namespace arcwave {

namespace {

// Shortest representation that round-trips.
std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double max_radius(const ArcGeometry& geom) {
  const Grid g = discretize(geom, 512);
  double r = 0.0;
  for (const Vec2& p : g.point) r = std::max(r, p.norm());
  return r;
}

std::vector<Vec2C> field_of(const Material& m, const Grid& grid, const Solution& sol,
                            const std::vector<Vec2>& points) {
  return near_field(m, grid, sol.density, representation_of(sol.formulation), points);
}

}  // namespace

std::vector<Vec2> field_grid_points(const FieldGridConfig& f) {
  std::vector<Vec2> pts;
  pts.reserve(f.nx * f.ny);
  auto coord = [](double lo, double hi, std::size_t n, std::size_t k) {
    return n == 1 ? lo : lo + (hi - lo) * double(k) / double(n - 1);
  };
  for (std::size_t iy = 0; iy < f.ny; ++iy)
    for (std::size_t ix = 0; ix < f.nx; ++ix)
      pts.emplace_back(coord(f.x_min, f.x_max, f.nx, ix), coord(f.y_min, f.y_max, f.ny, iy));
  return pts;
}

std::vector<Vec2> error_points(const RunConfig& cfg) {
  if (cfg.incident.kind == IncidentConfig::Kind::point) return circle_points(64, 2.0);
  return circle_points(64, 2.0 * max_radius(cfg.curve()));
}

SolveRun run_solve(const RunConfig& cfg) {
  const double omega = cfg.omega.front();
  const std::size_t n = cfg.n.front();
  const Material m = cfg.material_at(omega);
  const Grid grid = discretize(cfg.curve(), n);
  OperatorCache ops(m, grid);
  const BoundaryData data = boundary_data(cfg.incident_field(m), grid, cfg.data_sign());
  SolveRun run{cfg.formulations.front(), omega, n, grid, solve(cfg.formulations.front(), ops, data, cfg.solve_options()),
               {}, {}};
  if (cfg.field) {
    run.field_points = field_grid_points(*cfg.field);
    std::vector<Vec2> ok;
    for (const Vec2& x : run.field_points)
      if (near_field_admissible(grid, x)) ok.push_back(x);
    const std::vector<Vec2C> u = field_of(m, grid, run.solution, ok);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    run.field.assign(run.field_points.size(), Vec2C(cplx(nan, nan), cplx(nan, nan)));
    for (std::size_t k = 0, q = 0; k < run.field_points.size(); ++k)
      if (near_field_admissible(grid, run.field_points[k])) run.field[k] = u[q++];
  }
  return run;
}

std::vector<ConvergenceRow> convergence_table(const RunConfig& cfg) {
  const ArcGeometry geom = cfg.curve();
  const std::vector<Vec2> pts = error_points(cfg);
  const bool exact = cfg.incident.kind == IncidentConfig::Kind::point;
  const std::size_t n_ref = cfg.reference_n.value_or(2 * *std::max_element(cfg.n.begin(), cfg.n.end()));

  std::vector<ConvergenceRow> rows;
  for (double omega : cfg.omega) {
    const Material m = cfg.material_at(omega);
    const ElasticField field = cfg.incident_field(m);

    // Reference fields per formulation.
    std::vector<std::vector<Vec2C>> ref(cfg.formulations.size());
    if (exact) {
      std::vector<Vec2C> u(pts.size());
      for (std::size_t k = 0; k < pts.size(); ++k) u[k] = field.u(pts[k]);
      std::fill(ref.begin(), ref.end(), u);
    } else {
      const Grid g = discretize(geom, n_ref);
      OperatorCache ops(m, g);
      const BoundaryData data = boundary_data(field, g, cfg.data_sign());
      SolveOptions opt = cfg.solve_options();
      opt.tol = cfg.reference_tol;
      for (std::size_t q = 0; q < cfg.formulations.size(); ++q)
        ref[q] = field_of(m, g, solve(cfg.formulations[q], ops, data, opt), pts);
    }

    for (std::size_t n : cfg.n) {
      const Grid g = discretize(geom, n);
      OperatorCache ops(m, g);
      const BoundaryData data = boundary_data(field, g, cfg.data_sign());
      for (std::size_t q = 0; q < cfg.formulations.size(); ++q) {
        const Solution s = solve(cfg.formulations[q], ops, data, cfg.solve_options());
        rows.push_back({omega, n, cfg.formulations[q], max_abs_error(field_of(m, g, s, pts), ref[q]),
                        s.report.converged});
      }
    }
  }
  return rows;
}

std::vector<IterationRow> iterations_table(const RunConfig& cfg) {
  const ArcGeometry geom = cfg.curve();
  std::vector<IterationRow> rows;
  for (std::size_t k = 0; k < cfg.omega.size(); ++k) {
    const double omega = cfg.omega[k];
    const std::size_t n = cfg.n.size() == cfg.omega.size()
                              ? cfg.n[k]
                              : static_cast<std::size_t>(std::lround(cfg.n_per_omega * omega));
    const Material m = cfg.material_at(omega);
    const Grid g = discretize(geom, n);
    OperatorCache ops(m, g);
    const BoundaryData data = boundary_data(cfg.incident_field(m), g, cfg.data_sign());
    for (Formulation f : cfg.formulations) {
      const Solution s = solve(f, ops, data, cfg.solve_options());
      rows.push_back({omega, n, f, s.report.iterations, s.report.wall_seconds, s.report.converged});
    }
  }
  return rows;
}

Eigen::MatrixXcd named_operator(const std::string& op, const Material& m, const Grid& grid) {
  if (op == "identity") return Eigen::MatrixXcd::Identity(2 * grid.size(), 2 * grid.size());
  auto wrong_kind = [&] {
    return ConfigError("spectrum.operator", "'" + op + "' is not available on " +
                                                (grid.closed ? "closed curves" : "open arcs"));
  };
  if (grid.closed) {
    if (op == "S") return assemble_closed(m, grid, ClosedOperator::S);
    if (op == "N") return assemble_closed(m, grid, ClosedOperator::N);
    if (op == "Ntilde") return assemble_closed(m, grid, ClosedOperator::Ntilde);
    if (op == "NS" || op == "NtS") {
      const ClosedOperators c = assemble_closed_all(m, grid, op == "NS", op == "NtS");
      return (op == "NS" ? c.n : c.nt) * c.s;
    }
    if (op == "Sw" || op == "Nw" || op == "Ntw" || op == "NwSw" || op == "NtwSw" || op == "S_unweighted")
      throw wrong_kind();
  } else {
    if (op == "Sw") return assemble_Sw(m, grid);
    if (op == "S_unweighted") return unweighted_S(assemble_Sw(m, grid), grid);
    if (op == "Nw" || op == "Ntw") return assemble_Nw(m, grid, op == "Ntw");
    if (op == "NwSw" || op == "NtwSw") {
      const OpenArcOperators o = assemble_open_arc(m, grid, op == "NwSw", op == "NtwSw");
      return (op == "NwSw" ? o.nw : o.ntw) * o.sw;
    }
    if (op == "S" || op == "N" || op == "Ntilde" || op == "NS" || op == "NtS") throw wrong_kind();
  }
  throw ConfigError("spectrum.operator", "unknown operator '" + op + "'");
}

double cluster_share(const Eigen::VectorXcd& values, cplx center, double radius) {
  if (values.size() == 0) return 0.0;
  std::size_t near = 0;
  for (const cplx& z : values) near += std::abs(z - center) <= radius;
  return double(near) / double(values.size());
}

SpectrumResult spectrum_study(const RunConfig& cfg) {
  const double omega = cfg.omega.front();
  const std::size_t n = cfg.n.front();
  const Material m = cfg.material_at(omega);
  const Grid grid = discretize(cfg.curve(), n);
  SpectrumResult r;
  r.op = cfg.spectrum.op;
  r.omega = omega;
  r.n = n;
  r.values = spectrum(named_operator(cfg.spectrum.op, m, grid));
  r.calderon_shift = m.calderon_shift();
  r.predicted_ns = -0.25 + r.calderon_shift * r.calderon_shift;
  r.predicted_nts = -0.25;
  r.cluster_radius = cfg.spectrum.cluster_radius;
  r.share_near_ns = cluster_share(r.values, r.predicted_ns, r.cluster_radius);
  r.share_near_nts = cluster_share(r.values, r.predicted_nts, r.cluster_radius);
  r.min_abs = r.values.size() ? r.values.cwiseAbs().minCoeff() : 0.0;
  r.max_abs = r.values.size() ? r.values.cwiseAbs().maxCoeff() : 0.0;
  return r;
}

double far_field_gap(const FarField& f, const FarField& g, bool magnitudes) {
  if (f.up.size() != g.up.size()) throw std::invalid_argument("far_field_gap: direction grids differ");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < f.up.size(); ++k) {
    const double dp = magnitudes ? std::abs(std::abs(f.up[k]) - std::abs(g.up[k])) : std::abs(f.up[k] - g.up[k]);
    const double ds = magnitudes ? std::abs(std::abs(f.us[k]) - std::abs(g.us[k])) : std::abs(f.us[k] - g.us[k]);
    num = std::max({num, dp, ds});
    den = std::max({den, std::abs(g.up[k]), std::abs(g.us[k])});
  }
  return den > 0.0 ? num / den : num;
}

StripLimitResult strip_limit(const RunConfig& cfg) {
  const double omega = cfg.omega.front();
  const Material m = cfg.material_at(omega);
  const ElasticField inc = incident_plane_pwave(m, cfg.incident.angle);
  const std::vector<Vec2> dirs = direction_grid(cfg.strip_limit.directions);
  auto dirichlet_far_field = [&](const ArcGeometry& geom, std::size_t n) {
    const Grid g = discretize(geom, n);
    OperatorCache ops(m, g);
    const Solution s = solve(Formulation::DirSw, ops, incident_data(inc, g), cfg.solve_options());
    return far_field(m, g, s.density, dirs);
  };

  StripLimitResult r;
  r.a = cfg.strip_limit.a;
  r.strip = dirichlet_far_field(preset_geometry(Preset::flat_strip), cfg.strip_limit.n_strip);
  for (double a : r.a) {
    r.ellipse.push_back(dirichlet_far_field(preset_geometry(Preset::ellipse, a), cfg.strip_limit.n_ellipse));
    r.gap_magnitude.push_back(far_field_gap(r.ellipse.back(), r.strip, true));
    r.gap_complex.push_back(far_field_gap(r.ellipse.back(), r.strip, false));
  }
  return r;
}

// ---- writers ---------------------------------------------------------------

void write_density_csv(std::ostream& out, const Grid& grid, const Eigen::VectorXcd& density) {
  const std::size_t n = grid.size();
  out << "j,theta,t,x1,x2,re_a1,im_a1,re_a2,im_a2\n";
  for (std::size_t j = 0; j < n; ++j)
    out << j << ',' << num(grid.theta[j]) << ',' << num(grid.param[j]) << ',' << num(grid.point[j](0)) << ','
        << num(grid.point[j](1)) << ',' << num(density(j).real()) << ',' << num(density(j).imag()) << ','
        << num(density(n + j).real()) << ',' << num(density(n + j).imag()) << '\n';
}

void write_field_csv(std::ostream& out, const std::vector<Vec2>& points, const std::vector<Vec2C>& u) {
  out << "x1,x2,re_u1,im_u1,re_u2,im_u2\n";
  for (std::size_t k = 0; k < points.size(); ++k)
    out << num(points[k](0)) << ',' << num(points[k](1)) << ',' << num(u[k](0).real()) << ','
        << num(u[k](0).imag()) << ',' << num(u[k](1).real()) << ',' << num(u[k](1).imag()) << '\n';
}

void write_report_json(std::ostream& out, const SolveRun& run) {
  const SolveReport& r = run.solution.report;
  nlohmann::ordered_json j;
  j["formulation"] = std::string(formulation_name(run.formulation));
  j["omega"] = run.omega;
  j["N"] = run.n;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["final_residual"] = r.final_residual;
  j["wall_seconds"] = r.wall_seconds;
  out << j.dump(2) << '\n';
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "omega,N,formulation,error\n";
  for (const auto& r : rows)
    out << num(r.omega) << ',' << r.n << ',' << formulation_name(r.formulation) << ',' << num(r.error) << '\n';
}

void write_iterations_csv(std::ostream& out, const std::vector<IterationRow>& rows) {
  out << "omega,N,formulation,iterations,seconds\n";
  for (const auto& r : rows)
    out << num(r.omega) << ',' << r.n << ',' << formulation_name(r.formulation) << ',' << r.iterations << ','
        << num(r.seconds) << '\n';
}

void write_spectrum_csv(std::ostream& out, const SpectrumResult& s) {
  out << "index,re,im\n";
  for (Eigen::Index k = 0; k < s.values.size(); ++k)
    out << k << ',' << num(s.values(k).real()) << ',' << num(s.values(k).imag()) << '\n';
}

void write_spectrum_json(std::ostream& out, const SpectrumResult& s, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["operator"] = s.op;
  j["geometry"] = cfg.geometry.name;
  j["omega"] = s.omega;
  j["N"] = s.n;
  j["lambda"] = cfg.material.lambda;
  j["mu"] = cfg.material.mu;
  j["rho"] = cfg.material.rho;
  j["eigenvalues"] = s.values.size();
  j["C_lambda_mu"] = s.calderon_shift;
  j["prediction_NS"] = s.predicted_ns;
  j["prediction_NtildeS"] = s.predicted_nts;
  j["cluster_radius"] = s.cluster_radius;
  j["share_near_prediction_NS"] = s.share_near_ns;
  j["share_near_prediction_NtildeS"] = s.share_near_nts;
  j["min_abs"] = s.min_abs;
  j["max_abs"] = s.max_abs;
  out << j.dump(2) << '\n';
}

void write_strip_limit_csv(std::ostream& out, const StripLimitResult& r) {
  out << "a,angle,|up|,|us|\n";
  auto rows = [&](double a, const FarField& f) {
    for (std::size_t k = 0; k < f.directions.size(); ++k) {
      const double angle = std::atan2(f.directions[k](1), f.directions[k](0));
      out << num(a) << ',' << num(angle < 0.0 ? angle + 2.0 * kPi : angle) << ',' << num(std::abs(f.up[k])) << ','
          << num(std::abs(f.us[k])) << '\n';
    }
  };
  for (std::size_t q = 0; q < r.a.size(); ++q) rows(r.a[q], r.ellipse[q]);
  rows(0.0, r.strip);
}

void write_strip_limit_json(std::ostream& out, const StripLimitResult& r) {
  nlohmann::ordered_json j;
  j["a"] = r.a;
  j["relative_gap_magnitude"] = r.gap_magnitude;
  j["relative_gap_complex"] = r.gap_complex;
  out << j.dump(2) << '\n';
}

}  // namespace arcwave
