#include "wkb/potentials.hpp"

#include <cmath>
#include <string>

#include "wkb/errors.hpp"

namespace wkb {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::Domain, std::string(what) + " must be positive and finite");
  }
}

// Square of the Morse bracket 1 - alpha (hbar (n_r + 1/2) + lambda) / (r0 sqrt(2 m V0)),
// or nullopt once the bracket is no longer positive.
std::optional<double> morse_level(const Morse& p, const PhysicalConstants& c, int n_r,
                                  double lambda) {
  const double bracket =
      1.0 - p.alpha * (c.hbar * (n_r + 0.5) + lambda) / (p.r0 * std::sqrt(2.0 * c.mass * p.V0));
  if (bracket <= 0.0) return std::nullopt;
  return -p.V0 * bracket * bracket;
}

std::optional<double> hulthen_level(const Hulthen& p, const PhysicalConstants& c, int principal) {
  const double N = c.hbar * principal;
  const double g = 2.0 * c.mass * p.V0 * p.r0 * p.r0;
  const double gap = g / N - N;
  if (gap <= 0.0) return std::nullopt;
  return -gap * gap / (8.0 * c.mass * p.r0 * p.r0);
}

}  // namespace

std::string_view to_string(CentrifugalMode mode) noexcept {
  switch (mode) {
    case CentrifugalMode::None: return "none";
    case CentrifugalMode::Schrodinger: return "schrodinger";
    case CentrifugalMode::Langer: return "langer";
  }
  return "langer";
}

std::optional<CentrifugalMode> parse_mode(std::string_view text) noexcept {
  if (text == "none") return CentrifugalMode::None;
  if (text == "schrodinger") return CentrifugalMode::Schrodinger;
  if (text == "langer") return CentrifugalMode::Langer;
  return std::nullopt;
}

std::string_view name(const PotentialModel& model) noexcept {
  return std::visit(overloaded{
                        [](const Coulomb&) { return std::string_view("coulomb"); },
                        [](const Harmonic3D&) { return std::string_view("harmonic"); },
                        [](const Morse&) { return std::string_view("morse"); },
                        [](const Hulthen&) { return std::string_view("hulthen"); },
                    },
                    model);
}

void validate(const PotentialModel& model) {
  std::visit(overloaded{
                 [](const Coulomb& p) { require_positive(p.e2, "e2"); },
                 [](const Harmonic3D& p) { require_positive(p.omega, "omega"); },
                 [](const Morse& p) {
                   require_positive(p.V0, "V0");
                   require_positive(p.r0, "r0");
                   require_positive(p.alpha, "alpha");
                 },
                 [](const Hulthen& p) {
                   require_positive(p.V0, "V0");
                   require_positive(p.r0, "r0");
                 },
             },
             model);
}

void validate(const PhysicalConstants& constants) {
  require_positive(constants.hbar, "hbar");
  require_positive(constants.mass, "mass");
}

double length_scale(const PotentialModel& model, const PhysicalConstants& c) {
  return std::visit(overloaded{
                        [&](const Coulomb& p) { return c.hbar * c.hbar / (c.mass * p.e2); },
                        [&](const Harmonic3D& p) { return std::sqrt(c.hbar / (c.mass * p.omega)); },
                        [](const Morse& p) { return p.r0; },
                        [](const Hulthen& p) { return p.r0; },
                    },
                    model);
}

bool vanishes_at_infinity(const PotentialModel& model) noexcept {
  return !std::holds_alternative<Harmonic3D>(model);
}

double evaluate(const PotentialModel& model, const PhysicalConstants& c, double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::Domain, "potential evaluated at r <= 0");
  return std::visit(
      overloaded{
          [&](const Coulomb& p) { return -p.e2 / r; },
          [&](const Harmonic3D& p) { return 0.5 * c.mass * p.omega * p.omega * r * r; },
          [&](const Morse& p) {
            const double x = std::exp(-p.alpha * (r / p.r0 - 1.0));
            return p.V0 * (x * x - 2.0 * x);
          },
          // e^{-x} / (1 - e^{-x}) = 1 / expm1(x); stays accurate for x -> 0.
          [&](const Hulthen& p) { return -p.V0 / std::expm1(r / p.r0); },
      },
      model);
}

double centrifugal_coefficient(CentrifugalMode mode, int l, const PhysicalConstants& c) {
  const double h2 = c.hbar * c.hbar;
  switch (mode) {
    case CentrifugalMode::None: return 0.0;
    case CentrifugalMode::Schrodinger: return l * (l + 1.0) * h2;
    case CentrifugalMode::Langer: return (l + 0.5) * (l + 0.5) * h2;
  }
  return 0.0;
}

std::optional<double> analytic_eigenvalue(const PotentialModel& model, const PhysicalConstants& c,
                                          int n_r, int l, CentrifugalMode mode) {
  if (n_r < 0 || l < 0) return std::nullopt;
  return std::visit(
      overloaded{
          [&](const Coulomb& p) -> std::optional<double> {
            const double N = c.hbar * (n_r + l + 1);
            return -c.mass * p.e2 * p.e2 / (2.0 * N * N);
          },
          [&](const Harmonic3D& p) -> std::optional<double> {
            return c.hbar * p.omega * (2.0 * n_r + l + 1.5);
          },
          [&](const Morse& p) -> std::optional<double> {
            switch (mode) {
              case CentrifugalMode::None: return morse_level(p, c, n_r, 0.0);
              case CentrifugalMode::Schrodinger:
                if (l != 0) return std::nullopt;
                return morse_level(p, c, n_r, 0.0);
              case CentrifugalMode::Langer: return morse_level(p, c, n_r, c.hbar * (l + 0.5));
            }
            return std::nullopt;
          },
          [&](const Hulthen& p) -> std::optional<double> {
            if (mode != CentrifugalMode::Langer && l != 0) return std::nullopt;
            return hulthen_level(p, c, n_r + l + 1);
          },
      },
      model);
}

BoundStateCount bound_state_count(const PotentialModel& model, const PhysicalConstants& c, int l,
                                  CentrifugalMode mode) {
  if (!vanishes_at_infinity(model) || std::holds_alternative<Coulomb>(model)) {
    return {.unbounded = true, .count = 0};
  }
  // Both finite families lose bound states monotonically in n_r.
  int count = 0;
  while (analytic_eigenvalue(model, c, count, l, mode)) ++count;
  return {.unbounded = false, .count = count};
}

}  // namespace wkb
