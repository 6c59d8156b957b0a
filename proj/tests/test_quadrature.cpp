#include <doctest.h>

#include <cmath>
#include <random>

#include "arcwave/quadrature.hpp"
#include "oracles.hpp"

using namespace arcwave;

namespace {

double cheb_angle(std::size_t j, std::size_t n) { return kPi * double(2 * j + 1) / double(2 * n); }

Eigen::VectorXcd sample(std::size_t n, const std::function<cplx(double)>& f) {
  Eigen::VectorXcd v(n);
  for (std::size_t j = 0; j < n; ++j) v(j) = f(cheb_angle(j, n));
  return v;
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("eigenvalues of the logarithmic operator") {
    CHECK(SymmWeights::lambda(0) == doctest::Approx(std::log(2.0) / 2.0).epsilon(1e-15));
    CHECK(SymmWeights::lambda(1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(SymmWeights::lambda(3) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  }

  TEST_CASE("log rule reproduces the cosine eigenfunctions") {
    for (std::size_t n : {8u, 64u, 256u}) {
      const SymmWeights w(n);
      double worst = 0.0;
      for (std::size_t mode = 0; mode < n; ++mode)
        for (std::size_t i = 0; i < n; ++i) {
          double s = 0.0;
          for (std::size_t j = 0; j < n; ++j) s += std::cos(double(mode) * cheb_angle(j, n)) * w(i, j);
          s *= 1.0 / (2.0 * kPi) * kPi / double(n);
          worst = std::max(worst, std::abs(s + SymmWeights::lambda(mode) * std::cos(double(mode) * cheb_angle(i, n))));
        }
      CAPTURE(n);
      CHECK(worst <= 1e-12);
    }
  }

  TEST_CASE("log weights are symmetric and agree off the nodes") {
    const SymmWeights w(32);
    for (std::size_t i = 0; i < 32; ++i)
      for (std::size_t j = 0; j < 32; ++j) {
        CHECK(w(i, j) == w(j, i));
        CHECK(std::abs(w.at(j, cheb_angle(i, 32)) - w(i, j)) < 1e-12);
      }
  }

  TEST_CASE("log quadrature on the lowest modes") {
    const SymmWeights w(24);
    const Eigen::VectorXcd one = sample(24, [](double) { return 1.0; });
    const Eigen::VectorXcd c = sample(24, [](double t) { return std::cos(t); });
    for (double th : {0.1, 0.7, 1.5, 2.9}) {
      CHECK(std::abs(log_quadrature(one, w, th) + kPi * std::log(2.0)) < 1e-12);
      CHECK(std::abs(log_quadrature(c, w, th) + kPi * std::cos(th)) < 1e-12);
      CHECK(std::abs(log_quadrature(2.0 * c, w, th) - 2.0 * log_quadrature(c, w, th)) < 1e-13);
    }
  }

  TEST_CASE("log quadrature converges spectrally on a smooth density") {
    const double th = 0.9;
    auto f = [](double t) -> cplx { return std::exp(std::cos(t)) * cplx(1.0, 0.5 * std::sin(3 * t) * std::sin(3 * t)); };
    const cplx exact = oracle::integrate_split(
        [&](double t) { return std::log(std::abs(std::cos(th) - std::cos(t))) * f(t); }, 0.0, th, kPi);
    const cplx q8 = log_quadrature(sample(8, f), SymmWeights(8), th);
    const cplx q32 = log_quadrature(sample(32, f), SymmWeights(32), th);
    CHECK(std::abs(q32 - exact) < 1e-12);
    CHECK(std::abs(q8 - exact) > 1e3 * std::abs(q32 - exact));
  }

  TEST_CASE("trapezoid rule in the Chebyshev angle") {
    CHECK(std::abs(trapezoid_cheb(sample(16, [](double) { return 1.0; })) - kPi) < 1e-14);
    CHECK(std::abs(trapezoid_cheb(sample(16, [](double t) { return std::cos(2 * t); }))) < 1e-15);
  }

  TEST_CASE("derivative in the arc parameter") {
    // Coefficient differentiation amplifies rounding like N^2.
    const Eigen::VectorXcd c = sample(8, [](double) { return 1.0; });
    CHECK(d0_derivative(c).cwiseAbs().maxCoeff() < 1e-13);
    const Eigen::VectorXcd lin = sample(8, [](double th) { return std::cos(th); });
    CHECK((d0_derivative(lin).array() - 1.0).abs().maxCoeff() < 1e-13);
    const std::size_t n = 40;
    const Eigen::VectorXcd t5 = sample(n, [](double th) { return std::cos(5 * th); });
    const Eigen::VectorXcd d = d0_derivative(t5);
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double th = cheb_angle(j, n);
      worst = std::max(worst, std::abs(d(j) - 5.0 * std::sin(5 * th) / std::sin(th)));
    }
    CHECK(worst <= 1e-11);
  }

  TEST_CASE("angular derivative of the sine-weighted density") {
    const std::size_t n = 16;
    const Eigen::VectorXcd a = t0_derivative(sample(n, [](double) { return 1.0; }));
    const Eigen::VectorXcd b = t0_derivative(sample(n, [](double th) { return std::cos(th); }));
    for (std::size_t j = 0; j < n; ++j) {
      const double th = cheb_angle(j, n);
      CHECK(std::abs(a(j) - std::cos(th)) < 1e-13);
      CHECK(std::abs(b(j) - std::cos(2 * th)) < 1e-13);
    }
  }

  TEST_CASE("sine expansion vanishes at the endpoints") {
    const std::size_t n = 17;
    const Eigen::VectorXcd g = sample(n, [](double th) { return std::exp(std::cos(th)) * std::sin(th); });
    const Eigen::VectorXcd c = sine_coefficients(g);
    for (double th : {0.0, kPi}) {
      cplx s = 0.0;
      for (std::size_t k = 1; k <= n; ++k) s += c(k - 1) * std::sin(double(k) * th);
      CHECK(std::abs(s) < 1e-14);
    }
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 1; k <= n; ++k) s += c(k - 1) * std::sin(double(k) * cheb_angle(j, n));
      CHECK(std::abs(s - g(j)) < 1e-13);
    }
  }

  TEST_CASE("matrices match the transforms") {
    std::mt19937 rng(5);
    std::normal_distribution<double> nd;
    const std::size_t n = 33;
    Eigen::VectorXcd f(n);
    for (std::size_t j = 0; j < n; ++j) f(j) = cplx(nd(rng), nd(rng));
    CHECK((d0_matrix(n).cast<cplx>() * f - d0_derivative(f)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((t0_matrix(n).cast<cplx>() * f - t0_derivative(f)).cwiseAbs().maxCoeff() < 1e-10);
  }

  TEST_CASE("cosine transform round trip and path agreement") {
    std::mt19937 rng(9);
    std::normal_distribution<double> nd;
    for (std::size_t n : {7u, 64u, 300u}) {
      Eigen::VectorXcd f(n);
      for (std::size_t j = 0; j < n; ++j) f(j) = cplx(nd(rng), nd(rng));
      const Eigen::VectorXcd a = cosine_coefficients(f, TransformPath::direct);
      const Eigen::VectorXcd b = cosine_coefficients(f, TransformPath::fft);
      CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((cosine_synthesis(a) - f).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((cosine_synthesis(a, TransformPath::direct) - cosine_synthesis(a, TransformPath::fft)).cwiseAbs().maxCoeff() <=
            1e-12);
      CHECK((sine_coefficients(f, TransformPath::direct) - sine_coefficients(f, TransformPath::fft)).cwiseAbs().maxCoeff() <=
            1e-11);
      CHECK((d0_derivative(f, TransformPath::direct) - d0_derivative(f, TransformPath::fft)).cwiseAbs().maxCoeff() <=
            1e-12 * std::max(1.0, d0_derivative(f).cwiseAbs().maxCoeff()));
    }
  }

  TEST_CASE("periodic log weights") {
    const std::size_t m = 64;
    const std::vector<double> r = kress_log_weights(m);
    double mean = 0.0;
    for (double v : r) mean += v;
    CHECK(std::abs(mean) < 1e-12);
    // Cosine density: exact value -2 pi cos t.
    for (double t : {0.0, kPi / 32.0}) {
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        const double tj = 2.0 * kPi * double(j) / double(m);
        s += kress_log_weight(m, t, tj) * std::cos(tj);
      }
      const cplx oracle_value = oracle::integrate_split(
          [&](double u) { return 2.0 * std::log(std::abs(2.0 * std::sin(u / 2.0))) * std::cos(t + u); }, 0.0, kPi,
          2.0 * kPi);
      CHECK(std::abs(s - oracle_value.real()) < 1e-10);
      CHECK(std::abs(s + 2.0 * kPi * std::cos(t)) < 1e-12);
    }
    for (std::size_t i = 0; i < m; ++i)
      CHECK(std::abs(kress_log_weight(m, 2.0 * kPi * double(i) / double(m), 0.0) - r[i]) < 1e-12);
  }

  TEST_CASE("periodic derivative matrix") {
    const std::size_t m = 32;
    const Eigen::MatrixXd d = periodic_derivative_matrix(m);
    Eigen::VectorXd f(m), df(m);
    for (std::size_t j = 0; j < m; ++j) {
      const double t = 2.0 * kPi * double(j) / double(m);
      f(j) = std::exp(std::sin(t));
      df(j) = std::cos(t) * f(j);
    }
    CHECK((d * f - df).cwiseAbs().maxCoeff() < 1e-10);
  }
}
