#pragma once

#include "wkb/angular.hpp"
#include "wkb/quantize.hpp"

namespace wkb {

/// Oscillating polar WKB solution for M^2 = (l+1/2)^2 hbar^2, Mz = m hbar.
struct WkbAngularWave {
  int l = 0;
  int m = 0;
  double amplitude = 1.0;  // the arbitrary constant A
  PhysicalConstants constants;

  AngularContext context() const;
};

/// A cos(p_n r / hbar - chi1 - pi/4) with p_n = sqrt(2 m |E_n|).
struct RadialStandingWave {
  double p_n = 1.0;
  double chi1 = 0.0;
  double amplitude = 1.0;
  PhysicalConstants constants;
};

enum class Representation {
  Full,         // divide by sqrt(r^2 sin(theta))
  AngularOnly,  // divide by sqrt(sin(theta))
};

/// |p| below this fraction of (l+1/2) hbar counts as a turning point.
inline constexpr double kTurningPointCutoff = 1e-6;

/// A / sqrt|p(theta)| * cos(int_{theta1}^{theta} p dtheta - pi/4).
/// Throws TurningPointSingularity near a turning point and Domain outside
/// the allowed interval.
double wkb_angular_value(const WkbAngularWave& wave, double theta);

/// Decaying WKB branch under the barrier (theta < theta1 or theta > theta2):
/// A / (2 sqrt|p|) * exp(-|int_{theta}^{theta1} |p| dtheta|). Only exists for m != 0.
double wkb_angular_evanescent_value(const WkbAngularWave& wave, double theta);

/// sqrt(2/pi * (l+1/2) / (l-|m|+1/2)), the far-from-turning-point normalization.
double asymptotic_normalization(int l, int m);

/// asymptotic_normalization(l, m) * cos((l+1/2) theta - pi|m|/2 - pi/4)
double asymptotic_angular_value(int l, int m, double theta);

/// Converts a tilde-representation value to the Schrodinger psi by dividing by
/// the square root of the spherical Jacobian. Throws Domain for r <= 0 or
/// sin(theta) = 0.
double to_psi_representation(double value, double r, double theta,
                             Representation representation = Representation::Full);

RadialStandingWave make_standing_wave(double energy, double chi1,
                                      const PhysicalConstants& constants, double amplitude = 1.0);

double radial_standing_wave_value(const RadialStandingWave& wave, double r);

/// hbar |dp/dr| / p^2, with dp/dr from a central difference of sqrt(p^2)
/// (step 1e-6 r). Throws Domain where p^2 <= 0.
double quasiclassicality_ratio(const RadialContext& ctx, double r);

/// Least-squares slope of log|Theta(theta)| against log(theta) over
/// [theta_lo, theta_hi], where Theta = WKB value / sqrt(sin theta). Samples
/// inside the allowed interval use the oscillating form, samples under the
/// barrier the decaying branch.
double small_angle_exponent(int l, int m, double theta_lo = 1e-3, double theta_hi = 1e-2,
                            int samples = 24);

}  // namespace wkb
