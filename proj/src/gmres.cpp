#include "arcwave/gmres.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace arcwave {

namespace {

using cplx = std::complex<double>;

// Complex Givens rotation zeroing b in (a, b).
void givens(cplx a, cplx b, double& c, cplx& s) {
  const double na = std::abs(a), nb = std::abs(b);
  if (nb == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  if (na == 0.0) {
    c = 0.0;
    s = std::conj(b) / nb;
    return;
  }
  const double nrm = std::hypot(na, nb);
  c = na / nrm;
  s = (a / na) * std::conj(b) / nrm;
}

}  // namespace

GmresResult gmres(const MatVec& apply, const Eigen::VectorXcd& b, double tol, std::size_t maxit) {
  const auto start = std::chrono::steady_clock::now();
  const double bnorm = b.norm();
  if (!(bnorm > 0.0)) throw std::invalid_argument("gmres: right-hand side must be nonzero");
  const Eigen::Index n = b.size();

  GmresResult out;
  out.x = Eigen::VectorXcd::Zero(n);
  SolveReport& rep = out.report;
  rep.residual_history.push_back(1.0);

  const std::size_t cap = std::min<std::size_t>(maxit, static_cast<std::size_t>(n));
  Eigen::MatrixXcd v(n, cap + 1);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(cap + 1, cap);
  std::vector<double> cs(cap);
  std::vector<cplx> sn(cap);
  Eigen::VectorXcd g = Eigen::VectorXcd::Zero(cap + 1);
  v.col(0) = b / bnorm;
  g(0) = bnorm;

  std::size_t k = 0;
  double rel = 1.0;
  while (k < cap && rel > tol) {
    Eigen::VectorXcd w = apply(v.col(k));
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i <= k; ++i) {
        const cplx hij = v.col(i).dot(w);
        h(i, k) += hij;
        w -= hij * v.col(i);
      }
    }
    const double wn = w.norm();
    h(k + 1, k) = wn;
    for (std::size_t i = 0; i < k; ++i) {
      const cplx t = cs[i] * h(i, k) + sn[i] * h(i + 1, k);
      h(i + 1, k) = -std::conj(sn[i]) * h(i, k) + cs[i] * h(i + 1, k);
      h(i, k) = t;
    }
    givens(h(k, k), h(k + 1, k), cs[k], sn[k]);
    h(k, k) = cs[k] * h(k, k) + sn[k] * h(k + 1, k);
    h(k + 1, k) = 0.0;
    g(k + 1) = -std::conj(sn[k]) * g(k);
    g(k) = cs[k] * g(k);
    ++k;
    rel = std::abs(g(k)) / bnorm;
    rep.residual_history.push_back(rel);
    if (wn <= 1e-14 * bnorm) {
      rep.breakdown_iteration = k;
      break;
    }
    v.col(k) = w / wn;
  }

  if (k > 0) {
    const Eigen::VectorXcd y =
        h.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
    out.x = v.leftCols(k) * y;
  }
  rep.iterations = k;
  rep.final_residual = rel;
  rep.converged = rel <= tol;
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace arcwave
