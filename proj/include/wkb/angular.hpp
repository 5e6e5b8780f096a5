#pragma once

#include "wkb/numeric.hpp"
#include "wkb/potentials.hpp"

namespace wkb {

/// Polar problem p^2(theta) = M^2 - Mz^2 / sin^2(theta).
struct AngularContext {
  double M2 = 0.0;
  double Mz = 0.0;
  PhysicalConstants constants;
};

struct AngularEigenvalue {
  double M2 = 0.0;
  int l = 0;
  int n_theta = 0;
  int m = 0;
};

struct AngularTurningPoints {
  double theta1 = 0.0;
  double theta2 = 0.0;
};

/// Mz = m hbar.
double azimuthal_eigenvalue(int m, const PhysicalConstants& constants);

double angular_p_squared(const AngularContext& ctx, double theta);

/// Roots of p^2(theta) = 0, symmetric about pi/2. For Mz = 0 there are no
/// roots and the interval is [0, pi]. Throws NoClassicalRegion when M^2 < Mz^2.
AngularTurningPoints angular_turning_points(const AngularContext& ctx);

/// Integral of sqrt(p^2(theta)) between the turning points, evaluated in
/// alpha = theta - pi/2 with the same sin^2 endpoint substitution as the
/// radial quadrature. Closed form: pi (sqrt(M^2) - |Mz|).
double angular_phase_integral(const AngularContext& ctx,
                              const numeric::QuadratureOptions& options = {});

/// Integral of sqrt(p^2) from theta1 to theta.
double angular_partial_phase(const AngularContext& ctx, double theta,
                             const numeric::QuadratureOptions& options = {});

/// M^2 = (l + 1/2)^2 hbar^2 with l = |m| + n_theta.
AngularEigenvalue angular_momentum_eigenvalue(int n_theta, int m, const PhysicalConstants& constants);

/// Numerical inversion of angular_phase_integral(M^2, m hbar) = pi hbar (n_theta + 1/2),
/// bisecting in sqrt(M^2).
double solve_M2(int n_theta, int m, const PhysicalConstants& constants, double tol = 1e-14);

}  // namespace wkb
