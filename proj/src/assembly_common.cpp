#include "assembly_common.hpp"

#include <cmath>
#include <memory>

#include "arcwave/parallel.hpp"
#include "arcwave/quadrature.hpp"

namespace arcwave::detail {

namespace {

Mat2C outer(const Vec2& a, const Vec2& b) { return (a * b.transpose()).cast<cplx>(); }

SplitMat combine(const Material& m, const KernelCombo& c, const RadialSplits& s, const RadialSplits& p,
                 const PairGeometry& g) {
  static const Mat2C A = gunter_matrix().cast<cplx>();
  SplitMat out;
  if (c.e != 0.0 || c.aea != 0.0) {
    const SplitMat e = navier_split(m, s, p, g);
    if (c.e != 0.0) {
      out.log_coef += c.e * e.log_coef;
      out.smooth += c.e * e.smooth;
    }
    if (c.aea != 0.0) {
      out.log_coef += c.aea * (A * e.log_coef * A);
      out.smooth += c.aea * (A * e.smooth * A);
    }
  }
  if (c.gs != 0.0) {
    out.log_coef.diagonal().array() += c.gs * s.g0.log_coef;
    out.smooth.diagonal().array() += c.gs * s.g0.smooth;
  }
  if (c.s3 != 0.0 || c.s4 != 0.0) {
    const cplx dl = s.g1.log_coef - p.g1.log_coef, ds = s.g1.smooth - p.g1.smooth;
    Mat2C mat = Mat2C::Zero();
    if (c.s3 != 0.0) mat -= c.s3 * (outer(g.nx, g.d) * A);
    if (c.s4 != 0.0) mat += c.s4 * (A * outer(g.d, g.ny));
    out.log_coef += dl * mat;
    out.smooth += ds * mat;
  }
  if (c.w0 != 0.0 || c.wj != 0.0) {
    const double row2 = m.rho_omega2();
    const Mat2C dyad = outer(g.nx, g.ny) - g.nx.dot(g.ny) * Mat2C::Identity();
    const Mat2C nn = outer(g.nx, g.ny);
    const Mat2C jm = outer(g.ny, g.nx) - outer(g.nx, g.ny);
    auto part = [&](cplx vs, cplx vp) -> Mat2C {
      return c.w0 * row2 * (vs * dyad - vp * nn) + c.wj * vs * jm;
    };
    out.log_coef += part(s.g0.log_coef, p.g0.log_coef);
    out.smooth += part(s.g0.smooth, p.g0.smooth);
  }
  return out;
}

}  // namespace

PairRule open_arc_rule(const Grid& grid) {
  auto weights = std::make_shared<SymmWeights>(grid.size());
  const double h = kPi / double(grid.size());
  PairRule rule;
  rule.smooth_weight = h;
  rule.log_weight = [weights, h, &grid](std::size_t i, std::size_t j, double r) {
    const double shift =
        (i == j) ? std::log(grid.jac[i]) : std::log(r / std::abs(grid.param[i] - grid.param[j]));
    return h * ((*weights)(i, j) + shift);
  };
  return rule;
}

PairRule closed_rule(const Grid& grid) {
  const std::size_t m = grid.size();
  auto weights = std::make_shared<std::vector<double>>(kress_log_weights(m));
  const double h = kPi / double(grid.n);
  PairRule rule;
  rule.smooth_weight = h;
  rule.log_weight = [weights, h, m, &grid](std::size_t i, std::size_t j, double r) {
    const std::size_t l = (i + m - j) % m;
    double shift;
    if (i == j) {
      shift = std::log(grid.jac[i]);
    } else {
      const double sn = std::sin(0.5 * (grid.param[i] - grid.param[j]));
      shift = std::log(r) - 0.5 * std::log(4.0 * sn * sn);
    }
    return 0.5 * (*weights)[l] + h * shift;
  };
  return rule;
}

void accumulate(const Material& m, const Grid& grid, const PairRule& rule, const KernelCombo& combo,
                const Eigen::VectorXd& colscale, Eigen::MatrixXcd& out) {
  const std::size_t n = grid.size();
  const double sw = rule.smooth_weight;
  auto store = [&](std::size_t i, std::size_t j, const Mat2C& v) {
    const double cs = colscale(j);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) out(a * n + i, b * n + j) += v(a, b) * cs;
  };
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) {
      PairGeometry g;
      g.d = grid.point[i] - grid.point[j];
      g.r = (i == j) ? 0.0 : g.d.norm();
      g.dir = (i == j) ? Vec2(grid.deriv[i] / grid.jac[i]) : Vec2(g.d / g.r);
      g.nx = grid.normal[i];
      g.ny = grid.normal[j];
      const RadialSplits s = helmholtz_radial(m.k_s(), g.r);
      const RadialSplits p = helmholtz_radial(m.k_p(), g.r);
      const double lw = rule.log_weight(i, j, g.r);

      const SplitMat kij = combine(m, combo, s, p, g);
      store(i, j, lw * kij.log_coef + sw * kij.smooth);
      if (i == j) continue;

      PairGeometry h{-g.d, g.r, -g.dir, grid.normal[j], grid.normal[i]};
      const SplitMat kji = combine(m, combo, s, p, h);
      store(j, i, rule.log_weight(j, i, g.r) * kji.log_coef + sw * kji.smooth);
    }
  });
}

void right_multiply_blockdiag(Eigen::MatrixXcd& m, const Eigen::MatrixXd& t) {
  const Eigen::Index n = t.rows();
  const Eigen::Index rows = m.rows();
  for (Eigen::Index b = 0; b < 2; ++b) {
    // A contiguous block of complex columns is a real matrix with twice
    // the rows (interleaved real and imaginary parts).
    Eigen::Map<Eigen::MatrixXd> view(reinterpret_cast<double*>(m.data() + b * n * rows), 2 * rows, n);
    const Eigen::MatrixXd prod = view * t;
    view = prod;
  }
}

void left_multiply_blockdiag(const Eigen::MatrixXd& t, Eigen::MatrixXcd& m) {
  const Eigen::Index n = t.rows();
  for (Eigen::Index a = 0; a < 2; ++a) {
    auto rows = m.middleRows(a * n, n);
    const Eigen::MatrixXd re = t * Eigen::MatrixXd(rows.real());
    const Eigen::MatrixXd im = t * Eigen::MatrixXd(rows.imag());
    rows.real() = re;
    rows.imag() = im;
  }
}

Eigen::VectorXd repeat2(const Eigen::VectorXd& v) {
  Eigen::VectorXd out(2 * v.size());
  out << v, v;
  return out;
}

}  // namespace arcwave::detail
