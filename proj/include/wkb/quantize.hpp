#pragma once

#include <optional>

#include "wkb/numeric.hpp"
#include "wkb/potentials.hpp"

namespace wkb {

/// Everything p^2(r) depends on: p^2 = 2m[E - V(r)] - lambda^2 / r^2.
struct RadialContext {
  PotentialModel model;
  PhysicalConstants constants;
  double energy = 0.0;
  int l = 0;
  CentrifugalMode mode = CentrifugalMode::Langer;

  double lambda_squared() const { return centrifugal_coefficient(mode, l, constants); }
};

struct TurningPoints {
  double r1 = 0.0;
  double r2 = 0.0;

  bool degenerate() const noexcept { return r1 == r2; }
};

struct QuantizationResult {
  double energy = 0.0;
  double residual = 0.0;  // |I(E) - pi hbar (n_r + 1/2)|
  int iterations = 0;
  TurningPoints turning_points;
};

double p_squared(const RadialContext& ctx, double r);

/// V(r) + lambda^2 / (2 m r^2)
double effective_potential(const RadialContext& ctx, double r);

/// Radial window scanned for sign changes of p^2, in units of length_scale().
inline constexpr double kScanInner = 1e-6;
inline constexpr double kScanOuter = 1e3;

/// Minimum of the effective potential over the scan window. When the minimum
/// sits on the inner edge the effective potential is unbounded below there.
numeric::Extremum effective_potential_minimum(const PotentialModel& model,
                                              const PhysicalConstants& constants, int l,
                                              CentrifugalMode mode);

/// The two roots of p^2 = 0 that enclose the classically allowed region.
///
/// A log-spaced scan locates sign changes; each root is then bisected and
/// secant-polished. If p^2 touches zero from below (E equal to the minimum of
/// the effective potential) both roots coincide. Throws NoClassicalRegion,
/// SingleTurningPoint or MultiWell when the scan does not find exactly one
/// allowed interval.
TurningPoints find_turning_points(const RadialContext& ctx);

/// Integral of sqrt(p^2) between the turning points, via r = r1 + (r2 - r1) sin^2(u).
double phase_integral(const RadialContext& ctx, const numeric::QuadratureOptions& options = {});

/// Integral of sqrt(p^2) from r1 to r (r inside the allowed region).
double partial_phase_integral(const RadialContext& ctx, double r,
                              const numeric::QuadratureOptions& options = {});

/// Analytic phase integral with lambda = sqrt(lambda_squared()):
///   Coulomb    pi (e2 sqrt(m / -2E) - lambda)                       E < 0
///   oscillator pi (E / (2 omega) - lambda / 2)                      E >= omega lambda
///   Morse      (pi r0 / alpha)(sqrt(2 m V0) - sqrt(-2 m E)) - pi lambda
///   Hulthen    pi r0 sqrt(2m) (sqrt(V0 - E) - sqrt(-E)) - pi lambda
/// Morse and Hulthen require E < 0.
std::optional<double> closed_form_phase_integral(const RadialContext& ctx);

struct SolveOptions {
  double tol = 1e-12;  // residual bound, in units of pi hbar
  numeric::QuadratureOptions quadrature{};
};

/// Energy at which phase_integral equals pi hbar (n_r + 1/2).
///
/// Brackets between the minimum of the effective potential (I = 0) and either
/// E -> 0- (potentials vanishing at infinity) or an upward-doubled energy
/// (oscillator), then bisects on the monotone phase integral. Throws
/// NoBoundState when the target exceeds I over the whole bound bracket.
QuantizationResult solve_eigenvalue(const PotentialModel& model, const PhysicalConstants& constants,
                                    int n_r, int l, CentrifugalMode mode,
                                    const SolveOptions& options = {});

}  // namespace wkb
