#pragma once

#include <stdexcept>
#include <string>

namespace arcwave {

/// Raised when a physical or discretization parameter violates a
/// documented inequality. The message names the failing constraint.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Isotropic elastic medium at a fixed angular frequency.
///
/// Holds the Lamé constants, density and frequency plus every derived
/// scalar used by the kernels: shear and pressure wavenumbers, the
/// pseudo-stress constants (mu_tilde, lambda_tilde) that make the modified
/// double-layer kernel weakly singular, and the Calderón shift C.
class Material {
 public:
  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  double rho() const { return rho_; }
  double omega() const { return omega_; }

  double k_s() const { return k_s_; }
  double k_p() const { return k_p_; }
  double mu_tilde() const { return mu_tilde_; }
  double lambda_tilde() const { return lambda_tilde_; }
  double calderon_shift() const { return c_lm_; }
  double rho_omega2() const { return rho_ * omega_ * omega_; }

  /// Copy with lambda_tilde = lambda and mu_tilde = mu, so the modified
  /// traction coincides with the physical one.
  Material with_physical_traction() const;

 private:
  friend Material make_material(double, double, double, double);
  Material() = default;

  double lambda_ = 0, mu_ = 0, rho_ = 0, omega_ = 0;
  double k_s_ = 0, k_p_ = 0;
  double mu_tilde_ = 0, lambda_tilde_ = 0;
  double c_lm_ = 0;
};

Material make_material(double lambda, double mu, double rho, double omega);

}  // namespace arcwave
