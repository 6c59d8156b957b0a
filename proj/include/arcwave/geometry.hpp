#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "arcwave/types.hpp"

namespace arcwave {

/// Position and first two parameter derivatives of a curve.
struct CurvePoint {
  Vec2 x;
  Vec2 dx;
  Vec2 ddx;
};

/// Smooth parameterized curve.
///
/// Open arcs are parameterized over t in [-1, 1]; closed curves over the
/// periodic interval [0, 2*pi). The unit normal is the clockwise rotation
/// of the unit tangent, nu = (tau_2, -tau_1); this is the orientation for
/// which the Günter derivative equals A d/ds.
class ArcGeometry {
 public:
  using Parameterization = std::function<CurvePoint(double)>;

  ArcGeometry(std::string name, Parameterization param, bool closed);

  CurvePoint eval(double t) const { return param_(t); }
  bool closed() const { return closed_; }
  const std::string& name() const { return name_; }

  /// Same point set traversed backwards; flips tangent and normal.
  ArcGeometry reversed() const;

 private:
  std::string name_;
  Parameterization param_;
  bool closed_;
};

enum class Preset { circle, ellipse, flat_strip, spiral };

Preset parse_preset(std::string_view name);
std::string_view preset_name(Preset p);

/// circle(r): (r cos t, r sin t); ellipse(a): (cos t, a sin t);
/// flat_strip: (t, 0); spiral: exp(t)(cos 5t, sin 5t). The parameter is
/// ignored for the strip and the spiral.
ArcGeometry preset_geometry(Preset preset, double param = 1.0);
ArcGeometry preset_geometry(std::string_view name, double param = 1.0);

Vec2 unit_normal(const Vec2& dx);

/// Discretization of a curve.
///
/// Open arcs use the Chebyshev angles theta_j = pi(2j+1)/(2N) with
/// t_j = cos(theta_j) and weight w_j = sin(theta_j). Closed curves use 2N
/// equispaced nodes t_j = pi j / N and weight 1; `theta` then holds the
/// periodic parameter itself.
struct Grid {
  bool closed = false;
  std::size_t n = 0;  // N as requested; size() is N (open) or 2N (closed)

  std::vector<double> theta;
  std::vector<double> param;
  std::vector<double> weight;
  std::vector<double> jac;
  std::vector<Vec2> point;
  std::vector<Vec2> deriv;
  std::vector<Vec2> second;
  std::vector<Vec2> normal;

  std::size_t size() const { return param.size(); }
  /// Trapezoid weight in the angular variable: pi/N for both grid kinds.
  double angular_step() const;
};

Grid discretize(const ArcGeometry& geom, std::size_t n);

/// Arc length: trapezoid rule on closed curves, Fejer's first rule on arcs.
double arc_length(const Grid& grid);

}  // namespace arcwave
