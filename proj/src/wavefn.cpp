#include "wkb/wavefn.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "wkb/errors.hpp"

namespace wkb {
namespace {

constexpr double kPi = std::numbers::pi;

// Integral of |p(theta)| over the forbidden interval between theta and theta1,
// taken in log(theta) with a sin^2 map anchored at the turning point.
double barrier_action(const AngularContext& ctx, double theta, double theta1) {
  const double w1 = std::log(theta1);
  const double span = w1 - std::log(theta);
  auto integrand = [&](double u) {
    const double s = std::sin(u);
    const double t = std::exp(w1 - span * s * s);
    const double q2 = -angular_p_squared(ctx, t);
    return q2 > 0.0 ? std::sqrt(q2) * t * span * std::sin(2.0 * u) : 0.0;
  };
  return numeric::integrate_panels(integrand, 0.0, kPi / 2.0);
}

}  // namespace

AngularContext WkbAngularWave::context() const {
  const auto eig = angular_momentum_eigenvalue(l - std::abs(m), m, constants);
  return {eig.M2, azimuthal_eigenvalue(m, constants), constants};
}

double wkb_angular_value(const WkbAngularWave& wave, double theta) {
  if (wave.l < std::abs(wave.m)) throw Error(ErrorCode::Precondition, "requires l >= |m|");
  const auto ctx = wave.context();
  const auto tp = angular_turning_points(ctx);
  if (!(theta > tp.theta1 && theta < tp.theta2)) {
    throw Error(ErrorCode::Domain, "theta outside the open allowed interval");
  }
  const double p2 = angular_p_squared(ctx, theta);
  const double cutoff = kTurningPointCutoff * (wave.l + 0.5) * wave.constants.hbar;
  if (!(p2 > cutoff * cutoff)) {
    throw Error(ErrorCode::TurningPointSingularity, "1/sqrt|p| diverges at the turning point");
  }
  const double phase = angular_partial_phase(ctx, theta);
  return wave.amplitude / std::sqrt(std::sqrt(p2)) * std::cos(phase - kPi / 4.0);
}

double wkb_angular_evanescent_value(const WkbAngularWave& wave, double theta) {
  if (wave.l < std::abs(wave.m)) throw Error(ErrorCode::Precondition, "requires l >= |m|");
  if (wave.m == 0) throw Error(ErrorCode::Domain, "m = 0 has no forbidden polar region");
  const auto ctx = wave.context();
  const auto tp = angular_turning_points(ctx);
  if (!(theta > 0.0 && theta < kPi) || (theta >= tp.theta1 && theta <= tp.theta2)) {
    throw Error(ErrorCode::Domain, "theta is not under the barrier");
  }
  // Reflect into (0, theta1); p^2 is symmetric about pi/2.
  const double t = theta < tp.theta1 ? theta : kPi - theta;
  const double q2 = -angular_p_squared(ctx, t);
  const double cutoff = kTurningPointCutoff * (wave.l + 0.5) * wave.constants.hbar;
  if (!(q2 > cutoff * cutoff)) {
    throw Error(ErrorCode::TurningPointSingularity, "1/sqrt|p| diverges at the turning point");
  }
  return wave.amplitude / (2.0 * std::sqrt(std::sqrt(q2))) *
         std::exp(-barrier_action(ctx, t, tp.theta1));
}

double asymptotic_normalization(int l, int m) {
  const int am = std::abs(m);
  if (l < am) throw Error(ErrorCode::Precondition, "requires l >= |m|");
  return std::sqrt(2.0 / kPi * (l + 0.5) / (l - am + 0.5));
}

double asymptotic_angular_value(int l, int m, double theta) {
  return asymptotic_normalization(l, m) *
         std::cos((l + 0.5) * theta - kPi / 2.0 * std::abs(m) - kPi / 4.0);
}

double to_psi_representation(double value, double r, double theta, Representation representation) {
  const double s = std::sin(theta);
  if (!(theta > 0.0 && theta < kPi) || !(s > 0.0)) {
    throw Error(ErrorCode::Domain, "sin(theta) = 0: degenerate Jacobian");
  }
  if (representation == Representation::AngularOnly) return value / std::sqrt(s);
  if (!(r > 0.0)) throw Error(ErrorCode::Domain, "r = 0: degenerate Jacobian");
  return value / (r * std::sqrt(s));
}

RadialStandingWave make_standing_wave(double energy, double chi1,
                                      const PhysicalConstants& constants, double amplitude) {
  return {std::sqrt(2.0 * constants.mass * std::abs(energy)), chi1, amplitude, constants};
}

double radial_standing_wave_value(const RadialStandingWave& wave, double r) {
  if (!(wave.p_n > 0.0)) throw Error(ErrorCode::Precondition, "p_n must be positive");
  return wave.amplitude * std::cos(wave.p_n * r / wave.constants.hbar - wave.chi1 - kPi / 4.0);
}

double quasiclassicality_ratio(const RadialContext& ctx, double r) {
  const double p2 = p_squared(ctx, r);
  if (!(p2 > 0.0)) throw Error(ErrorCode::Domain, "r is classically forbidden");
  const double h = 1e-6 * r;
  const double p_plus = p_squared(ctx, r + h);
  const double p_minus = p_squared(ctx, r - h);
  if (!(p_plus > 0.0 && p_minus > 0.0)) {
    throw Error(ErrorCode::Domain, "r is within one difference step of a turning point");
  }
  const double dp = (std::sqrt(p_plus) - std::sqrt(p_minus)) / (2.0 * h);
  return ctx.constants.hbar * std::abs(dp) / p2;
}

double small_angle_exponent(int l, int m, double theta_lo, double theta_hi, int samples) {
  const WkbAngularWave wave{l, m, 1.0, {}};
  const auto tp = angular_turning_points(wave.context());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = theta_lo * std::pow(theta_hi / theta_lo, i / (samples - 1.0));
    const double tilde = theta > tp.theta1 ? wkb_angular_value(wave, theta)
                                           : wkb_angular_evanescent_value(wave, theta);
    const double x = std::log(theta);
    const double y = std::log(std::abs(to_psi_representation(tilde, 1.0, theta,
                                                             Representation::AngularOnly)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = samples;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace wkb
