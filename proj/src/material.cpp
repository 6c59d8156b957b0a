#include "arcwave/material.hpp"

#include <cmath>

namespace arcwave {

Material make_material(double lambda, double mu, double rho, double omega) {
  if (!(mu > 0.0)) throw ConstraintError("material: mu > 0 violated");
  if (!(lambda + mu > 0.0)) throw ConstraintError("material: lambda + mu > 0 violated");
  if (!(rho > 0.0)) throw ConstraintError("material: rho > 0 violated");
  if (!(omega > 0.0)) throw ConstraintError("material: omega > 0 violated");
  if (!std::isfinite(lambda) || !std::isfinite(mu) || !std::isfinite(rho) || !std::isfinite(omega))
    throw ConstraintError("material: parameters must be finite");

  Material m;
  m.lambda_ = lambda;
  m.mu_ = mu;
  m.rho_ = rho;
  m.omega_ = omega;
  m.k_s_ = omega * std::sqrt(rho / mu);
  m.k_p_ = omega * std::sqrt(rho / (lambda + 2.0 * mu));
  m.mu_tilde_ = mu * (lambda + mu) / (lambda + 3.0 * mu);
  m.lambda_tilde_ = lambda + mu - m.mu_tilde_;
  m.c_lm_ = mu / (2.0 * (lambda + 2.0 * mu));
  return m;
}

Material Material::with_physical_traction() const {
  Material m = *this;
  m.mu_tilde_ = mu_;
  m.lambda_tilde_ = lambda_;
  return m;
}

}  // namespace arcwave
