#include "wkb/angular.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "wkb/errors.hpp"

namespace wkb {
namespace {

constexpr double kPi = std::numbers::pi;

// Integral of sqrt(p^2) over [a, b] (as offsets alpha from pi/2) with the sin^2
// map that flattens the square-root zeros at the endpoints.
double integrate_alpha(const AngularContext& ctx, double a, double b,
                       const numeric::QuadratureOptions& options) {
  const double span = b - a;
  const double Mz2 = ctx.Mz * ctx.Mz;
  auto integrand = [&](double u) {
    const double s = std::sin(u);
    const double alpha = a + span * s * s;
    const double c = std::cos(alpha);
    const double p2 = ctx.M2 - Mz2 / (c * c);
    return p2 > 0.0 ? std::sqrt(p2) * span * std::sin(2.0 * u) : 0.0;
  };
  return numeric::integrate_panels(integrand, 0.0, kPi / 2.0, options);
}

}  // namespace

double azimuthal_eigenvalue(int m, const PhysicalConstants& constants) {
  return m * constants.hbar;
}

double angular_p_squared(const AngularContext& ctx, double theta) {
  const double s = std::sin(theta);
  if (s == 0.0) throw Error(ErrorCode::Domain, "p^2(theta) is singular at the poles");
  return ctx.M2 - ctx.Mz * ctx.Mz / (s * s);
}

AngularTurningPoints angular_turning_points(const AngularContext& ctx) {
  const double Mz = std::abs(ctx.Mz);
  if (!(ctx.M2 >= 0.0) || ctx.M2 < Mz * Mz) {
    throw Error(ErrorCode::NoClassicalRegion, "M^2 < Mz^2: no allowed polar interval");
  }
  if (Mz == 0.0) return {0.0, kPi};
  const double theta1 = std::asin(std::min(1.0, Mz / std::sqrt(ctx.M2)));
  return {theta1, kPi - theta1};
}

double angular_phase_integral(const AngularContext& ctx, const numeric::QuadratureOptions& options) {
  const auto tp = angular_turning_points(ctx);
  const double half_width = kPi / 2.0 - tp.theta1;
  if (half_width == 0.0) return 0.0;
  return integrate_alpha(ctx, -half_width, half_width, options);
}

double angular_partial_phase(const AngularContext& ctx, double theta,
                             const numeric::QuadratureOptions& options) {
  const auto tp = angular_turning_points(ctx);
  if (theta < tp.theta1 || theta > tp.theta2) {
    throw Error(ErrorCode::Domain, "theta outside the allowed polar interval");
  }
  if (theta == tp.theta1) return 0.0;
  return integrate_alpha(ctx, tp.theta1 - kPi / 2.0, theta - kPi / 2.0, options);
}

AngularEigenvalue angular_momentum_eigenvalue(int n_theta, int m, const PhysicalConstants& constants) {
  if (n_theta < 0) throw Error(ErrorCode::Precondition, "n_theta must be >= 0");
  const int l = std::abs(m) + n_theta;
  const double M = (l + 0.5) * constants.hbar;
  return {M * M, l, n_theta, m};
}

double solve_M2(int n_theta, int m, const PhysicalConstants& constants, double tol) {
  if (n_theta < 0) throw Error(ErrorCode::Precondition, "n_theta must be >= 0");
  const double Mz = azimuthal_eigenvalue(m, constants);
  const double target = kPi * constants.hbar * (n_theta + 0.5);
  auto residual = [&](double M) {
    return angular_phase_integral({M * M, Mz, constants}) - target;
  };

  const double lo = std::abs(Mz);
  double hi = lo + 2.0 * constants.hbar * (n_theta + 1);
  for (int k = 0; residual(hi) < 0.0; ++k, hi *= 2.0) {
    if (k == 60) throw Error(ErrorCode::NonConvergence, "could not bracket M^2");
  }
  const double M = numeric::bisect_root(residual, lo, hi, tol);
  return M * M;
}

}  // namespace wkb
