#include "arcwave/scattering.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "arcwave/kernels.hpp"
#include "arcwave/parallel.hpp"
#include "arcwave/special_functions.hpp"

namespace arcwave {

Formulation parse_formulation(std::string_view name) {
  for (Formulation f : kAllFormulations)
    if (formulation_name(f) == name) return f;
  throw std::invalid_argument("unknown formulation '" + std::string(name) + "'");
}

std::string_view formulation_name(Formulation f) {
  switch (f) {
    case Formulation::DirSw: return "DirSw";
    case Formulation::DirNwSw: return "DirNwSw";
    case Formulation::DirNtwSw: return "DirNtwSw";
    case Formulation::NeuNw: return "NeuNw";
    case Formulation::NeuNwSw: return "NeuNwSw";
  }
  return "unknown";
}

bool is_dirichlet(Formulation f) {
  return f == Formulation::DirSw || f == Formulation::DirNwSw || f == Formulation::DirNtwSw;
}

ElasticField incident_plane_pwave(const Material& m, double angle) {
  const Vec2 d(std::cos(angle), std::sin(angle));
  const double kp = m.k_p(), lam = m.lambda(), mu = m.mu();
  ElasticField f;
  f.u = [d, kp](const Vec2& x) -> Vec2C { return d.cast<cplx>() * std::exp(kI * kp * x.dot(d)); };
  // grad u = i k_p d d^T e, div u = i k_p e
  f.traction = [d, kp, lam, mu](const Vec2& x, const Vec2& nu) -> Vec2C {
    const cplx e = std::exp(kI * kp * x.dot(d));
    return (kI * kp * e) * (lam * nu + 2.0 * mu * d.dot(nu) * d).cast<cplx>();
  };
  return f;
}

ElasticField point_source_field(const Material& m, const Vec2& z0) {
  const double kp = m.k_p(), lam = m.lambda(), mu = m.mu();
  ElasticField f;
  // f = H0(k r): grad f = F1 d, Hess f = F1 I + F2 d d^T, Laplacian f = -k^2 f.
  f.u = [z0, kp](const Vec2& x) -> Vec2C {
    const Vec2 d = x - z0;
    const double r = d.norm();
    if (r == 0.0) throw std::domain_error("point_source_field: evaluation at the source");
    return (-kp * hankel1(1, kp * r) / r) * d.cast<cplx>();
  };
  f.traction = [z0, kp, lam, mu](const Vec2& x, const Vec2& nu) -> Vec2C {
    const Vec2 d = x - z0;
    const double r = d.norm();
    if (r == 0.0) throw std::domain_error("point_source_field: evaluation at the source");
    const HankelSet h = hankel1_set(kp * r);
    const cplx f1 = -kp * h.h[1] / r, f2 = kp * kp * h.h[2] / (r * r);
    return (-lam * kp * kp * h.h[0]) * nu.cast<cplx>() +
           2.0 * mu * (f1 * nu.cast<cplx>() + f2 * d.dot(nu) * d.cast<cplx>());
  };
  return f;
}

BoundaryData boundary_data(const ElasticField& f, const Grid& grid, double sign) {
  const std::size_t n = grid.size();
  BoundaryData b;
  b.dirichlet.resize(2 * n);
  b.neumann.resize(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec2C u = sign * f.u(grid.point[j]);
    const Vec2C t = sign * f.traction(grid.point[j], grid.normal[j]);
    b.dirichlet(j) = u(0);
    b.dirichlet(n + j) = u(1);
    b.neumann(j) = t(0);
    b.neumann(n + j) = t(1);
  }
  return b;
}

std::shared_ptr<const Eigen::MatrixXcd> OperatorCache::single() {
  if (!s_) {
    const auto t0 = std::chrono::steady_clock::now();
    s_ = std::make_shared<const Eigen::MatrixXcd>(grid_.closed ? assemble_closed(m_, grid_, ClosedOperator::S)
                                                               : assemble_Sw(m_, grid_));
    assembly_seconds_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return s_;
}

std::shared_ptr<const Eigen::MatrixXcd> OperatorCache::hyper(bool modified) {
  auto& slot = modified ? nt_ : n_;
  if (!slot) {
    const auto t0 = std::chrono::steady_clock::now();
    slot = std::make_shared<const Eigen::MatrixXcd>(
        grid_.closed ? assemble_closed(m_, grid_, modified ? ClosedOperator::Ntilde : ClosedOperator::N)
                     : assemble_Nw(m_, grid_, modified));
    assembly_seconds_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return slot;
}

LinearSystem build_system(Formulation f, OperatorCache& ops, const BoundaryData& data) {
  auto shared = [](std::shared_ptr<const Eigen::MatrixXcd> m, OperatorKind k) {
    return DiscreteOperator(k, std::move(m));
  };
  const bool closed = ops.grid().closed;
  const OperatorKind ks = closed ? OperatorKind::S_closed : OperatorKind::Sw;
  const OperatorKind kn = closed ? OperatorKind::N_closed : OperatorKind::Nw;
  const OperatorKind knt = closed ? OperatorKind::Ntilde_closed : OperatorKind::Ntw;
  const OperatorKind kns = closed ? OperatorKind::NS_closed : OperatorKind::NwSw;
  const OperatorKind knts = closed ? OperatorKind::NtS_closed : OperatorKind::NtwSw;
  switch (f) {
    case Formulation::DirSw: return {shared(ops.single(), ks), data.dirichlet};
    case Formulation::DirNwSw: {
      const auto n = ops.hyper(false);
      return {compose(shared(n, kn), shared(ops.single(), ks), kns), *n * data.dirichlet};
    }
    case Formulation::DirNtwSw: {
      const auto n = ops.hyper(true);
      return {compose(shared(n, knt), shared(ops.single(), ks), knts), *n * data.dirichlet};
    }
    case Formulation::NeuNw: return {shared(ops.hyper(false), kn), data.neumann};
    case Formulation::NeuNwSw:
      return {compose(shared(ops.hyper(false), kn), shared(ops.single(), ks), kns), data.neumann};
  }
  throw std::invalid_argument("build_system: unknown formulation");
}

Solution solve(Formulation f, OperatorCache& ops, const BoundaryData& data, const SolveOptions& opt) {
  LinearSystem sys = build_system(f, ops, data);
  Solution sol{f, {}, {}, {}};
  if (opt.direct) {
    const auto t0 = std::chrono::steady_clock::now();
    const Eigen::MatrixXcd a = sys.op.materialize();
    sol.unknown = a.partialPivLu().solve(sys.rhs);
    const double res = (a * sol.unknown - sys.rhs).norm() / sys.rhs.norm();
    sol.report.residual_history = {1.0, res};
    sol.report.final_residual = res;
    sol.report.converged = std::isfinite(res);
    sol.report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  } else {
    const std::size_t maxit = opt.maxit == 0 ? sys.op.dim() : opt.maxit;
    GmresResult r = gmres([&](const Eigen::VectorXcd& x) { return sys.op.apply(x); }, sys.rhs, opt.tol, maxit);
    sol.unknown = std::move(r.x);
    sol.report = std::move(r.report);
  }
  sol.density = (f == Formulation::NeuNwSw) ? Eigen::VectorXcd(*ops.single() * sol.unknown) : sol.unknown;
  return sol;
}

Eigen::VectorXcd physical_density(const Grid& grid, const Solution& sol) {
  const std::size_t n = grid.size();
  Eigen::VectorXcd out = sol.density;
  const bool single = is_dirichlet(sol.formulation);
  for (std::size_t j = 0; j < n; ++j) {
    const double w = grid.weight[j];
    const double s = single ? 1.0 / w : w;
    out(j) *= s;
    out(n + j) *= s;
  }
  return out;
}

double near_field_clearance(const Grid& grid) { return 5.0 * arc_length(grid) / double(grid.size()); }

bool near_field_admissible(const Grid& grid, const Vec2& x) {
  double dmin = std::numeric_limits<double>::infinity();
  for (const Vec2& y : grid.point) dmin = std::min(dmin, (x - y).norm());
  return dmin >= near_field_clearance(grid);
}

std::vector<Vec2C> near_field(const Material& m, const Grid& grid, const Eigen::VectorXcd& density,
                              Representation rep, const std::vector<Vec2>& points) {
  const std::size_t n = grid.size();
  if (static_cast<std::size_t>(density.size()) != 2 * n)
    throw std::invalid_argument("near_field: density size does not match the grid");
  const double clearance = near_field_clearance(grid);
  for (const Vec2& x : points) {
    if (!near_field_admissible(grid, x))
      throw std::domain_error("near_field: point (" + std::to_string(x(0)) + ", " + std::to_string(x(1)) +
                              ") lies within " + std::to_string(clearance) + " of the curve");
  }
  // Quadrature weights in the angular variable: h |x'| for the single
  // layer (1/w cancels against ds), h |x'| w^2 for the double layer.
  const double h = grid.angular_step();
  std::vector<double> qw(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double w = grid.weight[j];
    qw[j] = h * grid.jac[j] * (rep == Representation::single_layer ? 1.0 : w * w);
  }
  std::vector<Vec2C> out(points.size());
  parallel_for(points.size(), [&](std::size_t k) {
    const Vec2& x = points[k];
    Vec2C acc = Vec2C::Zero();
    for (std::size_t j = 0; j < n; ++j) {
      const Vec2C dj(density(j), density(n + j));
      const Mat2C ker = rep == Representation::single_layer ? navier_tensor(m, x, grid.point[j])
                                                            : double_layer_kernel(m, x, grid.point[j], grid.normal[j]);
      acc += qw[j] * (ker * dj);
    }
    out[k] = acc;
  });
  return out;
}

FarField far_field(const Material& m, const Grid& grid, const Eigen::VectorXcd& density,
                   const std::vector<Vec2>& directions) {
  const std::size_t n = grid.size();
  const double h = grid.angular_step();
  FarField ff;
  ff.directions = directions;
  ff.up.resize(directions.size());
  ff.us.resize(directions.size());
  for (std::size_t k = 0; k < directions.size(); ++k) {
    const Vec2& xh = directions[k];
    const Vec2 xp(-xh(1), xh(0));
    cplx up = 0.0, us = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const Vec2& y = grid.point[j];
      const Vec2C a(density(j), density(n + j));
      const double q = h * grid.jac[j];
      up += q * std::exp(-kI * m.k_p() * xh.dot(y)) * (xh(0) * a(0) + xh(1) * a(1));
      us += q * std::exp(-kI * m.k_s() * xh.dot(y)) * (xp(0) * a(0) + xp(1) * a(1));
    }
    ff.up[k] = up;
    ff.us[k] = us;
  }
  return ff;
}

std::vector<Vec2> direction_grid(std::size_t n) {
  std::vector<Vec2> d(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * double(k) / double(n);
    d[k] = Vec2(std::cos(a), std::sin(a));
  }
  return d;
}

std::vector<Vec2C> far_field_asymptote(const Material& m, const FarField& ff, double radius) {
  const double kp = m.k_p(), ks = m.k_s();
  const cplx ep = std::exp(kI * (kp * radius + kPi / 4.0)) / std::sqrt(8.0 * kPi * kp * radius);
  const cplx es = std::exp(kI * (ks * radius + kPi / 4.0)) / std::sqrt(8.0 * kPi * ks * radius);
  std::vector<Vec2C> out(ff.directions.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Vec2& xh = ff.directions[k];
    const Vec2 xp(-xh(1), xh(0));
    out[k] = (ep * ff.up[k] / (m.lambda() + 2.0 * m.mu())) * xh.cast<cplx>() +
             (es * ff.us[k] / m.mu()) * xp.cast<cplx>();
  }
  return out;
}

std::vector<Vec2> circle_points(std::size_t n, double radius) {
  std::vector<Vec2> p = direction_grid(n);
  for (Vec2& x : p) x *= radius;
  return p;
}

double max_abs_error(const std::vector<Vec2C>& a, const std::vector<Vec2C>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_error: size mismatch");
  double e = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) e = std::max({e, std::abs(a[k](0) - b[k](0)), std::abs(a[k](1) - b[k](1))});
  return e;
}

}  // namespace arcwave
