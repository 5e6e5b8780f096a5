#include "wkb/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wkb/errors.hpp"

namespace wkb {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPointsPerDecade = 450;
constexpr double kScanCap = 1e12;  // outer scan limit when p^2 stays positive far out

std::vector<double> scan_grid(double lo, double hi) {
  const int decades = static_cast<int>(std::ceil(std::log10(hi / lo)));
  return numeric::log_grid(lo, hi, std::max(decades, 1) * kPointsPerDecade + 1);
}

// Scale of the terms in p^2 at r, used to judge when p^2 is "zero".
double p_squared_scale(const RadialContext& ctx, double r) {
  const double two_m = 2.0 * ctx.constants.mass;
  return two_m * std::abs(ctx.energy) + two_m * std::abs(evaluate(ctx.model, ctx.constants, r)) +
         ctx.lambda_squared() / (r * r);
}

double root_between(const RadialContext& ctx, double a, double b) {
  return numeric::bisect_root([&](double r) { return p_squared(ctx, r); }, a, b, 1e-15);
}

double integrate_sqrt_p2(const RadialContext& ctx, double a, double b,
                         const numeric::QuadratureOptions& options) {
  const double span = b - a;
  auto integrand = [&](double u) {
    const double s = std::sin(u);
    const double r = a + span * s * s;
    const double p2 = p_squared(ctx, r);
    return p2 > 0.0 ? std::sqrt(p2) * span * std::sin(2.0 * u) : 0.0;
  };
  return numeric::integrate_panels(integrand, 0.0, kPi / 2.0, options);
}

}  // namespace

double p_squared(const RadialContext& ctx, double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::Domain, "p^2 evaluated at r <= 0");
  const double V = evaluate(ctx.model, ctx.constants, r);
  return 2.0 * ctx.constants.mass * (ctx.energy - V) - ctx.lambda_squared() / (r * r);
}

double effective_potential(const RadialContext& ctx, double r) {
  return evaluate(ctx.model, ctx.constants, r) +
         ctx.lambda_squared() / (2.0 * ctx.constants.mass * r * r);
}

numeric::Extremum effective_potential_minimum(const PotentialModel& model,
                                              const PhysicalConstants& constants, int l,
                                              CentrifugalMode mode) {
  const RadialContext ctx{model, constants, 0.0, l, mode};
  const double scale = length_scale(model, constants);
  const auto grid = scan_grid(kScanInner * scale, kScanOuter * scale);

  std::size_t best = 0;
  double best_value = effective_potential(ctx, grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = effective_potential(ctx, grid[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best == 0 || best + 1 == grid.size()) return {grid[best], best_value};
  return numeric::golden_section_min([&](double r) { return effective_potential(ctx, r); },
                                     grid[best - 1], grid[best + 1]);
}

TurningPoints find_turning_points(const RadialContext& ctx) {
  const double scale = length_scale(ctx.model, ctx.constants);
  const double inner = kScanInner * scale;
  double outer = kScanOuter * scale;
  while (p_squared(ctx, outer) > 0.0 && outer < kScanCap * scale) outer *= 10.0;

  const auto grid = scan_grid(inner, outer);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = p_squared(ctx, grid[i]);

  std::vector<std::size_t> changes;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (numeric::sign_change(values[i], values[i + 1])) changes.push_back(i);
  }

  if (changes.empty()) {
    // p^2 <= 0 on every sample; look for a narrow allowed region between samples.
    const auto peak = std::max_element(values.begin(), values.end()) - values.begin();
    const auto i = static_cast<std::size_t>(peak);
    if (i == 0 || i + 1 == grid.size()) {
      throw Error(ErrorCode::NoClassicalRegion, "p^2 < 0 over the scanned radii");
    }
    const auto top = numeric::golden_section_min([&](double r) { return -p_squared(ctx, r); },
                                                 grid[i - 1], grid[i + 1], 1e-15);
    const double p2_max = -top.value;
    if (p2_max > 0.0) {
      return {root_between(ctx, grid[i - 1], top.x), root_between(ctx, top.x, grid[i + 1])};
    }
    if (p2_max >= -1e-9 * p_squared_scale(ctx, top.x)) return {top.x, top.x};
    throw Error(ErrorCode::NoClassicalRegion, "p^2 < 0 over the scanned radii");
  }

  if (changes.size() == 1) {
    throw Error(ErrorCode::SingleTurningPoint,
                "p^2 changes sign once; the allowed region is not enclosed (no left turning point)");
  }
  if (changes.size() > 2 || values.front() > 0.0) {
    throw Error(ErrorCode::MultiWell, std::to_string(changes.size()) +
                                          " sign changes of p^2; more than one allowed region");
  }
  const double r1 = root_between(ctx, grid[changes[0]], grid[changes[0] + 1]);
  const double r2 = root_between(ctx, grid[changes[1]], grid[changes[1] + 1]);
  return {r1, r2};
}

double phase_integral(const RadialContext& ctx, const numeric::QuadratureOptions& options) {
  const auto tp = find_turning_points(ctx);
  if (tp.degenerate()) return 0.0;
  return integrate_sqrt_p2(ctx, tp.r1, tp.r2, options);
}

double partial_phase_integral(const RadialContext& ctx, double r,
                              const numeric::QuadratureOptions& options) {
  const auto tp = find_turning_points(ctx);
  if (r < tp.r1 || r > tp.r2) {
    throw Error(ErrorCode::Domain, "partial phase integral requested outside [r1, r2]");
  }
  if (r == tp.r1) return 0.0;
  return integrate_sqrt_p2(ctx, tp.r1, r, options);
}

std::optional<double> closed_form_phase_integral(const RadialContext& ctx) {
  const double m = ctx.constants.mass;
  const double E = ctx.energy;
  const double lambda = std::sqrt(ctx.lambda_squared());
  return std::visit(
      [&](const auto& p) -> std::optional<double> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Coulomb>) {
          if (E >= 0.0) return std::nullopt;
          return kPi * (p.e2 * std::sqrt(m / (-2.0 * E)) - lambda);
        } else if constexpr (std::is_same_v<T, Harmonic3D>) {
          if (E < p.omega * lambda) return std::nullopt;
          return kPi * (E / (2.0 * p.omega) - lambda / 2.0);
        } else if constexpr (std::is_same_v<T, Morse>) {
          if (E >= 0.0) return std::nullopt;
          return kPi * p.r0 / p.alpha * (std::sqrt(2.0 * m * p.V0) - std::sqrt(-2.0 * m * E)) -
                 kPi * lambda;
        } else {
          if (E >= 0.0) return std::nullopt;
          return kPi * p.r0 * std::sqrt(2.0 * m) * (std::sqrt(p.V0 - E) - std::sqrt(-E)) -
                 kPi * lambda;
        }
      },
      ctx.model);
}

QuantizationResult solve_eigenvalue(const PotentialModel& model, const PhysicalConstants& constants,
                                    int n_r, int l, CentrifugalMode mode,
                                    const SolveOptions& options) {
  validate(model);
  validate(constants);
  if (n_r < 0 || l < 0) throw Error(ErrorCode::Precondition, "quantum numbers must be >= 0");
  if (!(options.tol > 0.0)) throw Error(ErrorCode::Precondition, "tolerance must be positive");

  const double target = kPi * constants.hbar * (n_r + 0.5);
  const double tol = options.tol * kPi * constants.hbar;
  RadialContext ctx{model, constants, 0.0, l, mode};

  const double scale = length_scale(model, constants);
  const auto well = effective_potential_minimum(model, constants, l, mode);
  if (well.x <= kScanInner * scale * (1.0 + 1e-12)) {
    // V_eff unbounded below at the origin: report why the quantization fails.
    const double probe = effective_potential(ctx, scale);
    ctx.energy = vanishes_at_infinity(model) && probe < 0.0 ? 0.5 * probe : probe;
    find_turning_points(ctx);
    throw Error(ErrorCode::NoClassicalRegion, "effective potential unbounded below at r -> 0");
  }

  auto action = [&](double E) {
    ctx.energy = E;
    return phase_integral(ctx, options.quadrature);
  };

  double lo = well.value;
  double hi = 0.0;
  double action_hi = 0.0;
  bool bracketed = false;
  if (vanishes_at_infinity(model)) {
    if (!(lo < 0.0)) throw Error(ErrorCode::NoBoundState, "effective potential has no well");
    for (int k = 1; k <= 80 && !bracketed; ++k) {
      hi = lo * std::ldexp(1.0, -k);
      action_hi = action(hi);
      if (action_hi >= target) {
        bracketed = true;
      } else {
        lo = hi;
      }
    }
    if (!bracketed) {
      throw Error(ErrorCode::NoBoundState,
                  "quantization target exceeds the phase integral at threshold");
    }
  } else {
    double step = std::max(constants.hbar * std::get<Harmonic3D>(model).omega, std::abs(lo));
    for (int k = 0; k < 200 && !bracketed; ++k, step *= 2.0) {
      hi = well.value + step;
      action_hi = action(hi);
      if (action_hi >= target) {
        bracketed = true;
      } else {
        lo = hi;
      }
    }
    if (!bracketed) throw Error(ErrorCode::NonConvergence, "could not bracket the eigenvalue");
  }

  QuantizationResult result;
  if (std::abs(action_hi - target) <= tol) {
    result.energy = hi;
    result.residual = std::abs(action_hi - target);
  } else {
    bool converged = false;
    for (int it = 0; it < 300; ++it) {
      const double mid = 0.5 * (lo + hi);
      result.iterations = it + 1;
      if (mid <= lo || mid >= hi) break;
      const double residual = action(mid) - target;
      result.energy = mid;
      result.residual = std::abs(residual);
      if (result.residual <= tol) {
        converged = true;
        break;
      }
      (residual < 0.0 ? lo : hi) = mid;
    }
    if (!converged) {
      throw Error(ErrorCode::NonConvergence,
                  "bisection collapsed before the residual reached tolerance");
    }
  }
  ctx.energy = result.energy;
  result.turning_points = find_turning_points(ctx);
  return result;
}

}  // namespace wkb
