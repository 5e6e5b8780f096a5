#pragma once

#include <optional>
#include <string_view>
#include <variant>

namespace wkb {

/// V(r) = -e2 / r
struct Coulomb {
  double e2 = 1.0;
};

/// V(r) = m omega^2 r^2 / 2
struct Harmonic3D {
  double omega = 1.0;
};

/// V(r) = V0 [exp(-2 alpha (r/r0 - 1)) - 2 exp(-alpha (r/r0 - 1))]
struct Morse {
  double V0 = 1.0;
  double r0 = 1.0;
  double alpha = 1.0;
};

/// V(r) = -V0 exp(-r/r0) / (1 - exp(-r/r0))
struct Hulthen {
  double V0 = 1.0;
  double r0 = 1.0;
};

using PotentialModel = std::variant<Coulomb, Harmonic3D, Morse, Hulthen>;

struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;
};

/// Form of the centrifugal term lambda^2 / (2 m r^2) added to V(r).
enum class CentrifugalMode {
  None,         // lambda^2 = 0
  Schrodinger,  // lambda^2 = l(l+1) hbar^2
  Langer,       // lambda^2 = (l+1/2)^2 hbar^2
};

std::string_view to_string(CentrifugalMode mode) noexcept;
std::optional<CentrifugalMode> parse_mode(std::string_view text) noexcept;

std::string_view name(const PotentialModel& model) noexcept;

/// Throws Error{Domain} when a parameter violates its positivity invariant.
void validate(const PotentialModel& model);
void validate(const PhysicalConstants& constants);

/// Characteristic length used to size radial scans: r0 for Morse/Hulthen, the
/// Bohr-like length hbar^2/(m e2) for Coulomb, sqrt(hbar/(m omega)) for the
/// oscillator.
double length_scale(const PotentialModel& model, const PhysicalConstants& constants);

/// True for potentials that vanish at infinity (bound states have E < 0).
bool vanishes_at_infinity(const PotentialModel& model) noexcept;

/// V(r). Throws Error{Domain} for r <= 0.
double evaluate(const PotentialModel& model, const PhysicalConstants& constants, double r);
inline double evaluate(const PotentialModel& model, double r) {
  return evaluate(model, PhysicalConstants{}, r);
}

/// lambda^2 for the given mode; the centrifugal term is lambda^2 / (2 m r^2).
double centrifugal_coefficient(CentrifugalMode mode, int l, const PhysicalConstants& constants);

/// Closed-form eigenvalue, or nullopt when no formula applies to this
/// (model, mode, l) or the formula yields no bound state.
///
/// Coulomb and the oscillator return their exact spectra in every mode.
/// Morse returns the Schrodinger-route formula for mode None (any l) and for
/// Schrodinger at l = 0, and the semiclassical-route formula with
/// lambda = hbar (l + 1/2) for Langer. Hulthen returns
/// -(2 m V0 r0^2 / N - N)^2 / (8 m r0^2) with N = hbar (n_r + l + 1) for Langer,
/// and for the other modes only at l = 0.
std::optional<double> analytic_eigenvalue(const PotentialModel& model,
                                          const PhysicalConstants& constants, int n_r, int l,
                                          CentrifugalMode mode);

struct BoundStateCount {
  bool unbounded = false;
  int count = 0;

  bool operator==(const BoundStateCount&) const = default;
};

/// Number of n_r for which analytic_eigenvalue yields a bound state.
BoundStateCount bound_state_count(const PotentialModel& model, const PhysicalConstants& constants,
                                  int l, CentrifugalMode mode);

}  // namespace wkb
