#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arcwave/geometry.hpp"
#include "arcwave/material.hpp"
#include "arcwave/scattering.hpp"
#include "arcwave/types.hpp"

namespace arcwave {

/// Invalid configuration; field() names the offending entry, e.g.
/// "material.mu".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct GeometryConfig {
  std::string name = "flat_strip";
  double param = 1.0;           // circle radius or ellipse semi-axis a
  bool reverse_normal = false;  // traverse the curve backwards
};

struct MaterialConfig {
  double lambda = 2.0;
  double mu = 1.0;
  double rho = 1.0;
};

struct IncidentConfig {
  enum class Kind { plane, point };
  Kind kind = Kind::plane;
  double angle = kPi / 4.0;
  Vec2 z0 = Vec2(0.0, 0.5);
};

/// Rectangular grid of near-field evaluation points.
struct FieldGridConfig {
  double x_min = -2.0, x_max = 2.0;
  double y_min = -2.0, y_max = 2.0;
  std::size_t nx = 41, ny = 41;
};

struct SpectrumConfig {
  /// Sw, Nw, Ntw, NwSw, NtwSw, S_unweighted (open arcs); S, N, Ntilde,
  /// NS, NtS (closed curves); identity (any grid).
  std::string op = "NwSw";
  double cluster_radius = 0.05;
};

struct StripLimitConfig {
  std::vector<double> a = {0.2, 0.05, 0.01};
  std::size_t n_ellipse = 400;
  std::size_t n_strip = 200;
  std::size_t directions = 360;
};

/// One JSON document describing a run. Every field has a default; the
/// physical defaults are rho = mu = 1, lambda = 2.
struct RunConfig {
  GeometryConfig geometry;
  MaterialConfig material;
  std::vector<double> omega = {10.0};
  IncidentConfig incident;
  std::vector<Formulation> formulations = {Formulation::DirSw};
  std::vector<std::size_t> n = {160};
  double n_per_omega = 16.0;  // iterations-table when n does not pair with omega
  std::optional<std::size_t> reference_n;
  double reference_tol = 1e-12;
  double tol = 1e-8;
  std::size_t maxit = 0;
  std::filesystem::path output_dir = ".";
  std::optional<FieldGridConfig> field;
  SpectrumConfig spectrum;
  StripLimitConfig strip_limit;

  Material material_at(double omega) const;
  ArcGeometry curve() const;
  ElasticField incident_field(const Material& m) const;
  /// Boundary data sign: +1 reproduces a known exterior field (point
  /// source), -1 cancels an incident wave.
  double data_sign() const { return incident.kind == IncidentConfig::Kind::point ? 1.0 : -1.0; }
  SolveOptions solve_options() const { return SolveOptions{tol, maxit, false}; }
};

/// Parses and validates; throws ConfigError.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace arcwave
