#include <doctest.h>

#include <cmath>

#include "arcwave/material.hpp"

using namespace arcwave;

TEST_SUITE("material") {
  TEST_CASE("wavenumbers for the reference medium") {
    const Material m = make_material(2.0, 1.0, 1.0, 10.0);
    CHECK(m.k_s() == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(m.k_p() == doctest::Approx(5.0).epsilon(1e-15));
  }

  TEST_CASE("pseudo-stress constants and the Calderon shift") {
    const Material m = make_material(2.0, 1.0, 1.0, 50.0);
    CHECK(m.mu_tilde() == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(m.lambda_tilde() == doctest::Approx(2.4).epsilon(1e-15));
    // mu / (2 (lambda + 2 mu)) = 1/8
    CHECK(m.calderon_shift() == doctest::Approx(0.125).epsilon(1e-15));
  }

  TEST_CASE("nearly incompressible edge of the admissible range") {
    const Material m = make_material(-0.99, 1.0, 1.0, 50.0);
    CHECK(m.calderon_shift() == doctest::Approx(1.0 / 2.02).epsilon(1e-14));
  }

  TEST_CASE("constraint violations name the inequality") {
    CHECK_THROWS_WITH_AS(make_material(2.0, -1.0, 1.0, 1.0), doctest::Contains("mu > 0"), ConstraintError);
    CHECK_THROWS_WITH_AS(make_material(-1.5, 1.0, 1.0, 1.0), doctest::Contains("lambda + mu > 0"), ConstraintError);
    CHECK_THROWS_WITH_AS(make_material(2.0, 1.0, 0.0, 1.0), doctest::Contains("rho > 0"), ConstraintError);
    CHECK_THROWS_WITH_AS(make_material(2.0, 1.0, 1.0, 0.0), doctest::Contains("omega > 0"), ConstraintError);
  }

  TEST_CASE("derived-constant identities over a parameter sweep") {
    for (double lam : {-0.99, -0.5, 0.0, 1.0, 2.0, 10.0, 100.0})
      for (double mu : {0.3, 1.0, 4.0})
        for (double rho : {0.5, 1.0, 3.0}) {
          if (lam + mu <= 0.0) continue;
          const Material m = make_material(lam, mu, rho, 7.0);
          CAPTURE(lam);
          CAPTURE(mu);
          CHECK(m.k_p() < m.k_s());
          CHECK(std::abs(m.k_p() / m.k_s() - std::sqrt(mu / (lam + 2.0 * mu))) < 1e-15);
          CHECK(std::abs(m.lambda_tilde() + m.mu_tilde() - (lam + mu)) < 1e-13 * (1.0 + std::abs(lam)));
          CHECK(m.calderon_shift() > 0.0);
          CHECK(m.calderon_shift() < 0.5);
        }
  }

  TEST_CASE("physical-traction copy restores lambda and mu") {
    const Material m = make_material(2.0, 1.0, 1.0, 10.0).with_physical_traction();
    CHECK(m.mu_tilde() == m.mu());
    CHECK(m.lambda_tilde() == m.lambda());
  }
}
