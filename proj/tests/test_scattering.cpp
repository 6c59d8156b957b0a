#include <doctest.h>

#include <cmath>
#include <random>

#include "arcwave/scattering.hpp"
#include "oracles.hpp"

using namespace arcwave;

namespace {

const Material kRef = make_material(2.0, 1.0, 1.0, 10.0);

// grad(i, j) = d_j u_i by eighth-order differences.
Mat2C fd_gradient(const std::function<Vec2C(const Vec2&)>& u, const Vec2& x, double h) {
  Mat2C g;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      Vec2 e = Vec2::Zero();
      e(j) = 1.0;
      g(i, j) = oracle::derivative([&](double s) { return u(x + s * e)(i); }, 0.0, h);
    }
  return g;
}

Vec2C fd_traction(const Material& m, const std::function<Vec2C(const Vec2&)>& u, const Vec2& x, const Vec2& nu) {
  const Mat2C g = fd_gradient(u, x, 1e-3);
  const Vec2C n = nu.cast<cplx>();
  return m.lambda() * g.trace() * n + m.mu() * (g + g.transpose()) * n;
}

// mu lap u + (lambda + mu) grad div u + rho w^2 u by second differences.
Vec2C navier_residual(const Material& m, const std::function<Vec2C(const Vec2&)>& u, const Vec2& x, double h) {
  Mat2C hess[2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Vec2 ei = Vec2::Zero(), ej = Vec2::Zero();
      ei(i) = h;
      ej(j) = h;
      const Vec2C d2 = (u(x + ei + ej) - u(x + ei - ej) - u(x - ei + ej) + u(x - ei - ej)) / (4 * h * h);
      for (int a = 0; a < 2; ++a) hess[a](i, j) = d2(a);
    }
  Vec2C lap, grad_div;
  for (int a = 0; a < 2; ++a) lap(a) = hess[a](0, 0) + hess[a](1, 1);
  for (int i = 0; i < 2; ++i) grad_div(i) = hess[0](i, 0) + hess[1](i, 1);
  return m.mu() * lap + (m.lambda() + m.mu()) * grad_div + m.rho_omega2() * u(x);
}

double circle_point_source_error(Formulation f, std::size_t n) {
  const Grid grid = discretize(preset_geometry(Preset::circle), n);
  const ElasticField exact = point_source_field(kRef, Vec2(0.1, 0.3));
  OperatorCache ops(kRef, grid);
  const Solution sol = solve(f, ops, boundary_data(exact, grid, 1.0), {.tol = 1e-13});
  REQUIRE(sol.report.converged);
  const std::vector<Vec2> pts = circle_points(64, 2.0);
  std::vector<Vec2C> ref;
  for (const Vec2& p : pts) ref.push_back(exact.u(p));
  return max_abs_error(near_field(kRef, grid, sol.density, representation_of(f), pts), ref);
}

}  // namespace

TEST_SUITE("scattering") {
  TEST_CASE("plane pressure wave") {
    const double angle = 0.7;
    const ElasticField f = incident_plane_pwave(kRef, angle);
    const Vec2 d(std::cos(angle), std::sin(angle));
    CHECK((f.u(Vec2::Zero()) - d.cast<cplx>()).norm() < 1e-15);
    const Vec2 x(0.3, -0.2);
    const Mat2C g = fd_gradient(f.u, x, 1e-3);
    const cplx e = std::exp(kI * kRef.k_p() * x.dot(d));
    CHECK(std::abs(g.trace() - kI * kRef.k_p() * e) < 1e-9);
    CHECK(std::abs(g(1, 0) - g(0, 1)) < 1e-9);
    const Vec2 nu = Vec2(1.0, 3.0).normalized();
    CHECK((f.traction(x, nu) - fd_traction(kRef, f.u, x, nu)).norm() < 1e-8);
    CHECK(navier_residual(kRef, f.u, x, 1e-3).cwiseAbs().maxCoeff() < 1e-3);
  }

  TEST_CASE("point source field") {
    const Vec2 z0(0.2, -0.1);
    const ElasticField f = point_source_field(kRef, z0);
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    for (int trial = 0; trial < 10; ++trial) {
      const double a = ang(rng);
      const Vec2 x = z0 + Vec2(std::cos(a), std::sin(a));
      const Mat2C g = fd_gradient(f.u, x, 1e-4);
      CHECK(std::abs(g(1, 0) - g(0, 1)) <= 1e-6);
      CHECK(navier_residual(kRef, f.u, x, 1e-3).cwiseAbs().maxCoeff() <= 1e-3 * f.u(x).norm() * kRef.rho_omega2());
      const Vec2 nu(std::cos(a + 1.0), std::sin(a + 1.0));
      CHECK((f.traction(x, nu) - fd_traction(kRef, f.u, x, nu)).norm() < 1e-6 * f.traction(x, nu).norm());
    }
    const ElasticField origin = point_source_field(kRef, Vec2::Zero());
    CHECK((f.u(z0 + Vec2(0.4, 0.5)) - origin.u(Vec2(0.4, 0.5))).norm() < 1e-14);
    CHECK_THROWS_AS(f.u(z0), std::domain_error);
  }

  TEST_CASE("boundary data signs") {
    const Grid grid = discretize(preset_geometry(Preset::spiral), 12);
    const ElasticField inc = incident_plane_pwave(kRef, kPi / 4);
    const BoundaryData plus = boundary_data(inc, grid, 1.0), minus = incident_data(inc, grid);
    CHECK((plus.dirichlet + minus.dirichlet).norm() == 0.0);
    CHECK((plus.neumann + minus.neumann).norm() == 0.0);
    const Vec2C u5 = inc.u(grid.point[5]);
    CHECK(minus.dirichlet(5) == -u5(0));
    CHECK(minus.dirichlet(12 + 5) == -u5(1));
    const Vec2C t5 = inc.traction(grid.point[5], grid.normal[5]);
    CHECK(minus.neumann(12 + 5) == -t5(1));
  }

  TEST_CASE("formulation names") {
    for (Formulation f : kAllFormulations) CHECK(parse_formulation(formulation_name(f)) == f);
    CHECK(is_dirichlet(Formulation::DirNtwSw));
    CHECK_FALSE(is_dirichlet(Formulation::NeuNwSw));
    CHECK_THROWS(parse_formulation("Robin"));
  }

  TEST_CASE("circle reproduces a point source") {
    // 60 nodes on the unit circle.
    CHECK(circle_point_source_error(Formulation::DirSw, 30) <= 1e-9);
    CHECK(circle_point_source_error(Formulation::NeuNw, 30) <= 1e-9);
    CHECK(circle_point_source_error(Formulation::DirNwSw, 30) <= 1e-9);
    CHECK(circle_point_source_error(Formulation::NeuNwSw, 30) <= 1e-9);
  }

  TEST_CASE("near field of a zero density and clearance") {
    const Grid grid = discretize(preset_geometry(Preset::flat_strip), 40);
    const std::vector<Vec2> pts = {Vec2(0.0, 2.0), Vec2(3.0, -1.0)};
    const std::vector<Vec2C> z =
        near_field(kRef, grid, Eigen::VectorXcd::Zero(80), Representation::single_layer, pts);
    for (const Vec2C& v : z) CHECK(v.norm() == 0.0);
    CHECK_FALSE(near_field_admissible(grid, Vec2(0.0, 0.01)));
    CHECK(near_field_admissible(grid, Vec2(0.0, 2.0)));
    CHECK_THROWS_AS(near_field(kRef, grid, Eigen::VectorXcd::Ones(80), Representation::double_layer,
                               {Vec2(0.0, 2.0), Vec2(0.0, 0.01)}),
                    std::domain_error);
  }

  TEST_CASE("scattered field decays like the inverse square root") {
    const Grid grid = discretize(preset_geometry(Preset::flat_strip), 160);
    OperatorCache ops(kRef, grid);
    const Solution sol = solve(Formulation::DirSw, ops, incident_data(incident_plane_pwave(kRef, kPi / 4), grid));
    REQUIRE(sol.report.converged);
    const Vec2 xh = Vec2(1.0, 2.0).normalized();
    std::vector<double> scaled;
    for (double r : {50.0, 100.0, 200.0})
      scaled.push_back(near_field(kRef, grid, sol.density, Representation::single_layer, {r * xh})[0].norm() *
                       std::sqrt(r));
    CHECK(scaled[1] < 1.2 * scaled[0]);
    CHECK(scaled[2] < 1.2 * scaled[1]);
    CHECK(scaled[2] > 0.8 * scaled[1]);
  }

  TEST_CASE("far field matches the near field at large distance") {
    const Grid grid = discretize(preset_geometry(Preset::flat_strip), 160);
    OperatorCache ops(kRef, grid);
    const Solution sol = solve(Formulation::DirSw, ops, incident_data(incident_plane_pwave(kRef, kPi / 4), grid));
    REQUIRE(sol.report.converged);
    const std::vector<Vec2> dirs = direction_grid(24);
    const FarField ff = far_field(kRef, grid, sol.density, dirs);
    const double radius = 200.0;
    const std::vector<Vec2C> asym = far_field_asymptote(kRef, ff, radius);
    std::vector<Vec2> pts;
    for (const Vec2& d : dirs) pts.push_back(radius * d);
    const std::vector<Vec2C> near = near_field(kRef, grid, sol.density, Representation::single_layer, pts);
    double scale = 0.0;
    for (const Vec2C& v : near) scale = std::max(scale, v.cwiseAbs().maxCoeff());
    CHECK(max_abs_error(near, asym) <= 0.02 * scale);
    const FarField zero = far_field(kRef, grid, Eigen::VectorXcd::Zero(320), dirs);
    for (std::size_t k = 0; k < dirs.size(); ++k) CHECK(std::abs(zero.up[k]) + std::abs(zero.us[k]) == 0.0);
  }

  TEST_CASE("single-layer iteration count on the strip") {
    const Grid grid = discretize(preset_geometry(Preset::flat_strip), 160);
    OperatorCache ops(kRef, grid);
    const Solution sol =
        solve(Formulation::DirSw, ops, incident_data(incident_plane_pwave(kRef, kPi / 4), grid), {.tol = 1e-5});
    REQUIRE(sol.report.converged);
    MESSAGE("iterations " << sol.report.iterations);
    CHECK(sol.report.iterations >= 15);
    CHECK(sol.report.iterations <= 27);
  }

  TEST_CASE("physical density scaling") {
    const Grid grid = discretize(preset_geometry(Preset::flat_strip), 8);
    Solution sol{Formulation::DirSw, Eigen::VectorXcd::Ones(16), {}, {}};
    Eigen::VectorXcd phys = physical_density(grid, sol);
    CHECK(std::abs(phys(3) - 1.0 / grid.weight[3]) < 1e-15);
    sol.formulation = Formulation::NeuNw;
    phys = physical_density(grid, sol);
    CHECK(std::abs(phys(8 + 3) - grid.weight[3]) < 1e-15);
  }
}
