#include "arcwave/quadrature.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

#include "arcwave/material.hpp"

namespace arcwave {

namespace {

constexpr std::size_t kFftThreshold = 256;

bool use_fft(std::size_t n, TransformPath path) {
  if (path == TransformPath::automatic) return n > kFftThreshold;
  return path == TransformPath::fft;
}

double node_angle(std::size_t j, std::size_t n) { return kPi * (2.0 * j + 1.0) / (2.0 * n); }

// FFTW planning is not thread-safe; plans are created and destroyed under
// this lock while execution runs unlocked.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

Eigen::VectorXcd r2r(const Eigen::VectorXcd& in, fftw_r2r_kind kind) {
  const int n = static_cast<int>(in.size());
  Eigen::VectorXd re = in.real(), im = in.imag();
  Eigen::VectorXd out_re(n), out_im(n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_r2r_1d(n, re.data(), out_re.data(), kind, FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  fftw_execute_r2r(plan, re.data(), out_re.data());
  fftw_execute_r2r(plan, im.data(), out_im.data());
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  Eigen::VectorXcd out(n);
  out.real() = out_re;
  out.imag() = out_im;
  return out;
}

}  // namespace

SymmWeights::SymmWeights(std::size_t n) : n_(n), table_(2 * n) {
  if (n < 2) throw ConstraintError("symm_weights: N >= 2 violated");
  for (std::size_t l = 0; l < 2 * n; ++l) {
    double s = lambda(0);
    for (std::size_t m = 1; m < n; ++m) s += 2.0 * lambda(m) * std::cos(kPi * double(l * m % (2 * n)) / n);
    table_[l] = -s;
  }
}

double SymmWeights::at(std::size_t j, double theta) const {
  const double tj = node_angle(j, n_);
  double s = lambda(0);
  for (std::size_t m = 1; m < n_; ++m) s += 2.0 * lambda(m) * std::cos(m * tj) * std::cos(m * theta);
  return -2.0 * s;
}

double SymmWeights::lambda(std::size_t m) { return m == 0 ? 0.5 * std::log(2.0) : 0.5 / double(m); }

SymmWeights symm_weights(std::size_t n) { return SymmWeights(n); }

cplx log_quadrature(const Eigen::VectorXcd& f, const SymmWeights& w, double theta) {
  if (static_cast<std::size_t>(f.size()) != w.n()) throw std::invalid_argument("log_quadrature: size mismatch");
  cplx s = 0.0;
  for (std::size_t j = 0; j < w.n(); ++j) s += f(j) * w.at(j, theta);
  return kPi / double(w.n()) * s;
}

cplx trapezoid_cheb(const Eigen::VectorXcd& f) { return kPi / double(f.size()) * f.sum(); }

Eigen::VectorXcd cosine_coefficients(const Eigen::VectorXcd& f, TransformPath path) {
  const std::size_t n = f.size();
  Eigen::VectorXcd a(n);
  if (use_fft(n, path)) {
    // REDFT10: Y_k = 2 sum_j x_j cos(k theta_j)
    a = r2r(f, FFTW_REDFT10) / double(n);
    a(0) *= 0.5;
    return a;
  }
  for (std::size_t k = 0; k < n; ++k) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += f(j) * std::cos(double(k) * node_angle(j, n));
    a(k) = (k == 0 ? 1.0 : 2.0) / double(n) * s;
  }
  return a;
}

Eigen::VectorXcd cosine_synthesis(const Eigen::VectorXcd& a, TransformPath path) {
  const std::size_t n = a.size();
  if (use_fft(n, path)) {
    // REDFT01: Y_j = X_0 + 2 sum_{k>0} X_k cos(k theta_j)
    Eigen::VectorXcd x = 0.5 * a;
    x(0) = a(0);
    return r2r(x, FFTW_REDFT01);
  }
  Eigen::VectorXcd f(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx s = 0.0;
    const double t = node_angle(j, n);
    for (std::size_t k = 0; k < n; ++k) s += a(k) * std::cos(double(k) * t);
    f(j) = s;
  }
  return f;
}

Eigen::VectorXcd sine_coefficients(const Eigen::VectorXcd& g, TransformPath path) {
  const std::size_t n = g.size();
  Eigen::VectorXcd c(n);
  if (use_fft(n, path)) {
    // RODFT10: Y_k = 2 sum_j x_j sin((k+1) theta_j)
    c = r2r(g, FFTW_RODFT10) / double(n);
    c(n - 1) *= 0.5;
    return c;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += g(j) * std::sin(double(k) * node_angle(j, n));
    c(k - 1) = (k == n ? 1.0 : 2.0) / double(n) * s;
  }
  return c;
}

Eigen::VectorXcd d0_derivative(const Eigen::VectorXcd& f, TransformPath path) {
  const std::size_t n = f.size();
  const Eigen::VectorXcd a = cosine_coefficients(f, path);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n + 1);
  for (std::size_t k = n - 1; k >= 1; --k) b(k - 1) = b(k + 1) + 2.0 * double(k) * a(k);
  b(0) *= 0.5;
  return cosine_synthesis(b.head(n), path);
}

Eigen::VectorXcd t0_derivative(const Eigen::VectorXcd& f, TransformPath path) {
  const std::size_t n = f.size();
  Eigen::VectorXcd g(n);
  for (std::size_t j = 0; j < n; ++j) g(j) = f(j) * std::sin(node_angle(j, n));
  const Eigen::VectorXcd c = sine_coefficients(g, path);
  // The n = N mode differentiates to cos(N theta), which vanishes at the nodes.
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(n);
  for (std::size_t k = 1; k < n; ++k) a(k) = double(k) * c(k - 1);
  return cosine_synthesis(a, path);
}

namespace {

Eigen::MatrixXd columnwise(std::size_t n, Eigen::VectorXcd (*op)(const Eigen::VectorXcd&, TransformPath)) {
  Eigen::MatrixXd m(n, n);
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
  for (std::size_t j = 0; j < n; ++j) {
    e(j) = 1.0;
    m.col(j) = op(e, TransformPath::automatic).real();
    e(j) = 0.0;
  }
  return m;
}

}  // namespace

Eigen::MatrixXd d0_matrix(std::size_t n) { return columnwise(n, &d0_derivative); }

Eigen::MatrixXd t0_matrix(std::size_t n) { return columnwise(n, &t0_derivative); }

double kress_log_weight(std::size_t num_nodes, double t, double tj) {
  if (num_nodes < 2 || num_nodes % 2 != 0) throw ConstraintError("kress_log_weights: even node count violated");
  const std::size_t n = num_nodes / 2;
  const double u = t - tj;
  double s = 0.0;
  for (std::size_t m = 1; m < n; ++m) s += std::cos(double(m) * u) / double(m);
  return -2.0 * kPi / double(n) * s - kPi / double(n * n) * std::cos(double(n) * u);
}

std::vector<double> kress_log_weights(std::size_t num_nodes) {
  std::vector<double> r(num_nodes);
  const double h = 2.0 * kPi / double(num_nodes);
  for (std::size_t l = 0; l < num_nodes; ++l) r[l] = kress_log_weight(num_nodes, double(l) * h, 0.0);
  return r;
}

Eigen::MatrixXd periodic_derivative_matrix(std::size_t num_nodes) {
  if (num_nodes < 2 || num_nodes % 2 != 0) throw ConstraintError("periodic_derivative_matrix: even node count violated");
  const double h = 2.0 * kPi / double(num_nodes);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(num_nodes, num_nodes);
  for (std::size_t j = 0; j < num_nodes; ++j)
    for (std::size_t k = 0; k < num_nodes; ++k) {
      if (j == k) continue;
      const long diff = long(j) - long(k);
      const double sgn = (diff % 2 == 0) ? 1.0 : -1.0;
      d(j, k) = 0.5 * sgn / std::tan(double(diff) * h / 2.0);
    }
  return d;
}

}  // namespace arcwave
