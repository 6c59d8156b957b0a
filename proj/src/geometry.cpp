#include "arcwave/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "arcwave/material.hpp"

namespace arcwave {

namespace {

constexpr std::size_t kRegularitySamples = 2048;

}  // namespace

ArcGeometry::ArcGeometry(std::string name, Parameterization param, bool closed)
    : name_(std::move(name)), param_(std::move(param)), closed_(closed) {
  const double a = closed_ ? 0.0 : -1.0;
  const double b = closed_ ? 2.0 * kPi : 1.0;
  for (std::size_t i = 0; i <= kRegularitySamples; ++i) {
    const double t = a + (b - a) * static_cast<double>(i) / kRegularitySamples;
    const CurvePoint p = param_(t);
    if (!(p.dx.norm() > 0.0) || !p.x.allFinite())
      throw ConstraintError("geometry '" + name_ + "': |x'(t)| > 0 violated near t = " +
                            std::to_string(t));
  }
  if (closed_) {
    const CurvePoint p0 = param_(0.0), p1 = param_(2.0 * kPi);
    const double scale = 1.0 + p0.x.norm();
    if ((p0.x - p1.x).norm() > 1e-10 * scale || (p0.dx - p1.dx).norm() > 1e-10 * (1.0 + p0.dx.norm()))
      throw ConstraintError("geometry '" + name_ + "': closed curve is not 2pi-periodic");
  }
}

ArcGeometry ArcGeometry::reversed() const {
  Parameterization p = param_;
  if (closed_) {
    return ArcGeometry(name_ + "_reversed",
                       [p](double t) {
                         CurvePoint c = p(2.0 * kPi - t);
                         return CurvePoint{c.x, -c.dx, c.ddx};
                       },
                       true);
  }
  return ArcGeometry(name_ + "_reversed",
                     [p](double t) {
                       CurvePoint c = p(-t);
                       return CurvePoint{c.x, -c.dx, c.ddx};
                     },
                     false);
}

Preset parse_preset(std::string_view name) {
  if (name == "circle") return Preset::circle;
  if (name == "ellipse") return Preset::ellipse;
  if (name == "flat_strip" || name == "strip") return Preset::flat_strip;
  if (name == "spiral") return Preset::spiral;
  throw std::invalid_argument("unknown geometry preset '" + std::string(name) + "'");
}

std::string_view preset_name(Preset p) {
  switch (p) {
    case Preset::circle: return "circle";
    case Preset::ellipse: return "ellipse";
    case Preset::flat_strip: return "flat_strip";
    case Preset::spiral: return "spiral";
  }
  return "unknown";
}

ArcGeometry preset_geometry(Preset preset, double param) {
  switch (preset) {
    case Preset::circle: {
      if (!(param > 0.0)) throw ConstraintError("circle: radius > 0 violated");
      const double r = param;
      return ArcGeometry("circle",
                         [r](double t) {
                           const double c = std::cos(t), s = std::sin(t);
                           return CurvePoint{Vec2(r * c, r * s), Vec2(-r * s, r * c), Vec2(-r * c, -r * s)};
                         },
                         true);
    }
    case Preset::ellipse: {
      if (!(param > 0.0)) throw ConstraintError("ellipse: semi-axis a > 0 violated");
      const double a = param;
      return ArcGeometry("ellipse",
                         [a](double t) {
                           const double c = std::cos(t), s = std::sin(t);
                           return CurvePoint{Vec2(c, a * s), Vec2(-s, a * c), Vec2(-c, -a * s)};
                         },
                         true);
    }
    case Preset::flat_strip:
      return ArcGeometry("flat_strip",
                         [](double t) {
                           return CurvePoint{Vec2(t, 0.0), Vec2(1.0, 0.0), Vec2(0.0, 0.0)};
                         },
                         false);
    case Preset::spiral:
      return ArcGeometry("spiral",
                         [](double t) {
                           const double e = std::exp(t), c = std::cos(5.0 * t), s = std::sin(5.0 * t);
                           // x = e^t (cos 5t, sin 5t)
                           const Vec2 x(e * c, e * s);
                           const Vec2 dx(e * (c - 5.0 * s), e * (s + 5.0 * c));
                           const Vec2 ddx(e * (-24.0 * c - 10.0 * s), e * (-24.0 * s + 10.0 * c));
                           return CurvePoint{x, dx, ddx};
                         },
                         false);
  }
  throw std::invalid_argument("unknown geometry preset");
}

ArcGeometry preset_geometry(std::string_view name, double param) {
  return preset_geometry(parse_preset(name), param);
}

Vec2 unit_normal(const Vec2& dx) {
  const Vec2 tau = dx / dx.norm();
  return Vec2(tau(1), -tau(0));
}

double Grid::angular_step() const { return kPi / static_cast<double>(n); }

Grid discretize(const ArcGeometry& geom, std::size_t n) {
  if (n < 4) throw ConstraintError("discretize: N >= 4 violated");
  Grid g;
  g.closed = geom.closed();
  g.n = n;
  const std::size_t m = g.closed ? 2 * n : n;
  g.theta.resize(m);
  g.param.resize(m);
  g.weight.resize(m);
  g.jac.resize(m);
  g.point.resize(m);
  g.deriv.resize(m);
  g.second.resize(m);
  g.normal.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    double th, t, w;
    if (g.closed) {
      th = kPi * static_cast<double>(j) / static_cast<double>(n);
      t = th;
      w = 1.0;
    } else {
      th = kPi * static_cast<double>(2 * j + 1) / static_cast<double>(2 * n);
      t = std::cos(th);
      w = std::sin(th);
    }
    const CurvePoint p = geom.eval(t);
    g.theta[j] = th;
    g.param[j] = t;
    g.weight[j] = w;
    g.point[j] = p.x;
    g.deriv[j] = p.dx;
    g.second[j] = p.ddx;
    g.jac[j] = p.dx.norm();
    g.normal[j] = unit_normal(p.dx);
  }
  return g;
}

double arc_length(const Grid& grid) {
  double sum = 0.0;
  if (grid.closed) {
    for (std::size_t j = 0; j < grid.size(); ++j) sum += grid.jac[j];
    return grid.angular_step() * sum;
  }
  // Fejer's first rule on the Chebyshev nodes.
  const std::size_t n = grid.size();
  for (std::size_t j = 0; j < n; ++j) {
    double w = 1.0;
    for (std::size_t k = 1; k <= n / 2; ++k)
      w -= 2.0 * std::cos(2.0 * double(k) * grid.theta[j]) / (4.0 * double(k * k) - 1.0);
    sum += grid.jac[j] * w;
  }
  return 2.0 * sum / double(n);
}

}  // namespace arcwave
