#include "wkb/selfcheck.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "wkb/angular.hpp"
#include "wkb/errors.hpp"
#include "wkb/oracle.hpp"
#include "wkb/quantize.hpp"
#include "wkb/spectrum.hpp"
#include "wkb/table.hpp"
#include "wkb/wavefn.hpp"

namespace wkb {
namespace {

constexpr double kPi = std::numbers::pi;
using Mode = CentrifugalMode;

struct Case {
  PotentialModel model;
  Mode mode;
  int l;
  PhysicalConstants constants{};
  std::string prefix{};

  std::string label() const {
    return fmt::format("{}{}-{}-l{}", prefix, name(model), to_string(mode), l);
  }
};

struct Suite {
  CheckOptions options;
  std::vector<CheckResult> results;

  double agreement() const { return std::max(options.agreement_tol, 10.0 * options.quadrature_tol); }
  double inversion() const {
    return std::max(options.agreement_tol,
                    10.0 * std::max(options.quadrature_tol, options.root_tol));
  }
  numeric::QuadratureOptions quadrature() const { return {options.quadrature_tol, 14}; }

  void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& check) {
    try {
      auto [passed, detail] = check();
      results.push_back({name, passed, std::move(detail)});
    } catch (const std::exception& e) {
      results.push_back({name, false, e.what()});
    }
  }
};

const PhysicalConstants kUnit{};
const Coulomb kCoulomb{1.0};
const Harmonic3D kOscillator{1.0};
const Morse kMorse{10.0, 1.0, 1.0};
const Hulthen kHulthen{8.0, 1.0};

// Energies strictly inside the bound bracket of a case.
std::vector<double> sample_energies(const Case& c, int count,
                                    const PhysicalConstants& constants = kUnit) {
  const double vmin = effective_potential_minimum(c.model, constants, c.l, c.mode).value;
  const double top = vanishes_at_infinity(c.model) ? 1e-3 * vmin : vmin + 12.0 * std::abs(vmin);
  std::vector<double> energies;
  for (int k = 1; k <= count; ++k) energies.push_back(vmin + (top - vmin) * k / (count + 1.0));
  return energies;
}

void radial_checks(Suite& suite) {
  std::vector<Case> monotone{
      {kCoulomb, Mode::Langer, 0},  {kCoulomb, Mode::Langer, 2},     {kOscillator, Mode::Langer, 0},
      {kOscillator, Mode::Langer, 3}, {kMorse, Mode::None, 0},       {kMorse, Mode::Langer, 0},
      {kHulthen, Mode::Langer, 0},  {kHulthen, Mode::Langer, 1},     {kCoulomb, Mode::Schrodinger, 1},
  };
  for (const auto& model : suite.options.extra_models) {
    monotone.push_back({model, Mode::Langer, 0, suite.options.constants, "user-"});
  }
  for (const auto& c : monotone) {
    suite.run("monotonicity/" + c.label(), [&] {
      double previous = 0.0;
      int violations = 0;
      for (double E : sample_energies(c, 16, c.constants)) {
        const double I = phase_integral({c.model, c.constants, E, c.l, c.mode}, suite.quadrature());
        if (!(I > previous)) ++violations;
        previous = I;
      }
      return std::pair{violations == 0, fmt::format("{} decreasing steps in 16 samples", violations)};
    });
  }

  // Hulthen has a single turning point at lambda = 0, so it only enters with Langer.
  const std::vector<Case> closed{
      {kCoulomb, Mode::Langer, 0},     {kCoulomb, Mode::Langer, 2},    {kCoulomb, Mode::Schrodinger, 1},
      {kOscillator, Mode::Langer, 0},  {kOscillator, Mode::Langer, 3}, {kOscillator, Mode::Schrodinger, 2},
      {kMorse, Mode::None, 0},         {kMorse, Mode::Langer, 0},      {kMorse, Mode::Langer, 1},
      {kHulthen, Mode::Langer, 0},     {kHulthen, Mode::Langer, 1},
  };
  for (const auto& c : closed) {
    suite.run("closed-form/" + c.label(), [&] {
      double worst = 0.0;
      for (double E : sample_energies(c, 6)) {
        const RadialContext ctx{c.model, kUnit, E, c.l, c.mode};
        const auto exact = closed_form_phase_integral(ctx);
        if (!exact || !(*exact > 0.0)) continue;
        worst = std::max(worst, std::abs(phase_integral(ctx, suite.quadrature()) - *exact) / *exact);
      }
      return std::pair{worst <= suite.agreement(),
                       fmt::format("max rel diff {:.3e} (bound {:.0e})", worst, suite.agreement())};
    });
  }

  const std::vector<PotentialModel> inversion{kCoulomb, kOscillator, kHulthen, kMorse};
  for (const auto& model : inversion) {
    suite.run(fmt::format("inversion/{}-langer", name(model)), [&] {
      double worst = 0.0;
      int used = 0;
      for (int l = 0; l <= 2; ++l) {
        for (int n_r = 0; n_r <= 2; ++n_r) {
          const auto E = analytic_eigenvalue(model, kUnit, n_r, l, Mode::Langer);
          if (!E) continue;
          const double target = kPi * (n_r + 0.5);
          const double I = phase_integral({model, kUnit, *E, l, Mode::Langer}, suite.quadrature());
          worst = std::max(worst, std::abs(I - target) / target);
          ++used;
        }
      }
      return std::pair{used > 0 && worst <= suite.inversion(),
                       fmt::format("max rel residual {:.3e} over {} levels", worst, used)};
    });
  }

  suite.run("negative-control/coulomb-schrodinger-l1", [&] {
    const double E = solve_eigenvalue(kCoulomb, kUnit, 0, 1, Mode::Schrodinger).energy;
    const double rel = std::abs(E + 0.125) / 0.125;
    return std::pair{rel > 1e-3, fmt::format("E = {:.10f}, rel diff from -1/8 {:.3e}", E, rel)};
  });
  for (Mode mode : {Mode::Schrodinger, Mode::None}) {
    suite.run(fmt::format("negative-control/coulomb-{}-l0", to_string(mode)), [&] {
      try {
        solve_eigenvalue(kCoulomb, kUnit, 0, 0, mode);
      } catch (const Error& e) {
        return std::pair{e.code() == ErrorCode::SingleTurningPoint, std::string(e.what())};
      }
      return std::pair{false, std::string("solved without raising")};
    });
  }

  suite.run("degenerate-limit/coulomb-langer-l1", [&] {
    const double vmin = effective_potential_minimum(kCoulomb, kUnit, 1, Mode::Langer).value;
    double previous = INFINITY;
    bool decreasing = true;
    for (double delta : {1e-2, 1e-4, 1e-6}) {
      const double I = phase_integral({kCoulomb, kUnit, vmin * (1.0 - delta), 1, Mode::Langer});
      decreasing = decreasing && I < previous;
      previous = I;
    }
    return std::pair{decreasing && previous < 1e-4,
                     fmt::format("I = {:.3e} at 1e-6 |Vmin| above the minimum", previous)};
  });

  suite.run("analytic/increasing-in-n_r", [&] {
    int violations = 0;
    for (const PotentialModel& model : {PotentialModel{kMorse}, PotentialModel{kHulthen}}) {
      for (int l = 0; l <= 2; ++l) {
        std::optional<double> previous;
        for (int n_r = 0;; ++n_r) {
          const auto E = analytic_eigenvalue(model, kUnit, n_r, l, Mode::Langer);
          if (!E) break;
          if (previous && !(*E > *previous)) ++violations;
          previous = E;
        }
      }
    }
    return std::pair{violations == 0, fmt::format("{} violations", violations)};
  });
}

void angular_checks(Suite& suite) {
  suite.run("angular/closed-form", [&] {
    double worst = 0.0;
    for (double M : {0.5, 1.0, 2.5, 7.0, 13.0, 20.0}) {
      for (double f : {0.0, 0.1, 0.5, 0.9, 0.999}) {
        const AngularContext ctx{M * M, f * M, kUnit};
        const double diff = std::abs(angular_phase_integral(ctx, suite.quadrature()) - kPi * (M - f * M));
        worst = std::max(worst, diff / (kPi * M));
      }
    }
    const double bound = std::max(1e-9, 10.0 * suite.options.quadrature_tol);
    return std::pair{worst <= bound, fmt::format("max diff / pi M {:.3e}", worst)};
  });

  suite.run("angular/solve-M2", [&] {
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
      for (int m = -10; m <= 10; ++m) {
        const double exact = angular_momentum_eigenvalue(n, m, kUnit).M2;
        worst = std::max(worst, std::abs(solve_M2(n, m, kUnit) - exact) / exact);
      }
    }
    return std::pair{worst <= suite.agreement(), fmt::format("max rel diff {:.3e}", worst)};
  });

  suite.run("angular/monotonicity-and-m-symmetry", [&] {
    int violations = 0;
    for (int m : {1, 3}) {
      double previous = -1.0;
      for (double M = m + 0.1; M < m + 6.0; M += 0.5) {
        const double I = angular_phase_integral({M * M, double(m), kUnit});
        const double mirrored = angular_phase_integral({M * M, double(-m), kUnit});
        if (!(I > previous) || I != mirrored) ++violations;
        previous = I;
      }
    }
    return std::pair{violations == 0, fmt::format("{} violations", violations)};
  });
}

void wavefn_checks(Suite& suite) {
  suite.run("wavefn/parity-m0-even-l", [&] {
    const WkbAngularWave wave{4, 0, 1.0, kUnit};
    double worst = 0.0;
    for (double d : {0.1, 0.4, 0.9, 1.3}) {
      const double a = wkb_angular_value(wave, kPi / 2 + d);
      const double b = wkb_angular_value(wave, kPi / 2 - d);
      worst = std::max(worst, std::abs(a - b));
    }
    return std::pair{worst < 1e-9, fmt::format("max |diff| {:.3e}", worst)};
  });

  suite.run("wavefn/norm-roundtrip", [&] {
    double worst = 0.0;
    for (double r : {0.3, 2.0, 9.0}) {
      for (double theta : {0.2, 1.1, 2.9}) {
        const double tilde = 0.731;
        const double psi = to_psi_representation(tilde, r, theta);
        const double back = psi * psi * r * r * std::sin(theta);
        worst = std::max(worst, std::abs(back - tilde * tilde) / (tilde * tilde));
      }
    }
    return std::pair{worst <= 1e-12, fmt::format("max rel diff {:.3e}", worst)};
  });

  suite.run("wavefn/standing-wave-zero-spacing", [&] {
    const auto wave = make_standing_wave(-0.5, 0.3, kUnit);
    auto f = [&](double r) { return radial_standing_wave_value(wave, r); };
    std::vector<double> zeros;
    for (double r = 0.0; r < 30.0 && zeros.size() < 5; r += 0.05) {
      if (numeric::sign_change(f(r), f(r + 0.05))) zeros.push_back(numeric::bisect_root(f, r, r + 0.05, 1e-15));
    }
    double worst = 0.0;
    for (std::size_t i = 1; i < zeros.size(); ++i) {
      worst = std::max(worst, std::abs(zeros[i] - zeros[i - 1] - kPi / wave.p_n));
    }
    return std::pair{zeros.size() == 5 && worst < 1e-10, fmt::format("max spacing error {:.3e}", worst)};
  });

  for (auto [l, m] : {std::pair{1, 1}, std::pair{3, 2}, std::pair{5, 0}}) {
    suite.run(fmt::format("wavefn/small-angle-exponent-l{}-m{}", l, m), [&] {
      const double slope = small_angle_exponent(l, m);
      return std::pair{std::abs(slope - std::abs(m)) <= 0.05,
                       fmt::format("slope {:.4f}, expected {}", slope, std::abs(m))};
    });
  }

  suite.run("wavefn/asymptotic-match-l>=5", [&] {
    double worst = 0.0;
    int samples = 0;
    for (int l : {5, 10, 20}) {
      for (int m = 0; m <= 2; ++m) {
        // A / sqrt(p) ~ A / sqrt(M) far from the turning points fixes A.
        const double M = (l + 0.5) * kUnit.hbar;
        const WkbAngularWave wave{l, m, asymptotic_normalization(l, m) * std::sqrt(M), kUnit};
        const auto ctx = wave.context();
        for (double theta = 0.05; theta < kPi; theta += 0.01) {
          const double p2 = angular_p_squared(ctx, theta);
          if (!(p2 > 0.0) || std::abs(std::sqrt(p2) - M) >= 1e-3 * M) continue;
          const double exact = asymptotic_angular_value(l, m, theta);
          const double value = wkb_angular_value(wave, theta);
          worst = std::max(worst, std::abs(value - exact) / asymptotic_normalization(l, m));
          ++samples;
        }
      }
    }
    return std::pair{samples > 0 && worst <= 0.01,
                     fmt::format("max diff / amplitude {:.3e} over {} samples", worst, samples)};
  });

  suite.run("wavefn/quasiclassicality-decreases-with-l", [&] {
    int violations = 0;
    for (double position : {0.3, 0.5, 0.7}) {
      double previous = 0.0;
      for (int l = 0; l <= 6; ++l) {
        const double E = solve_eigenvalue(kCoulomb, kUnit, 1, l, Mode::Langer).energy;
        const RadialContext ctx{kCoulomb, kUnit, E, l, Mode::Langer};
        const auto tp = find_turning_points(ctx);
        const double ratio = quasiclassicality_ratio(ctx, tp.r1 + position * (tp.r2 - tp.r1));
        if (l > 0 && !(ratio < previous)) ++violations;
        previous = ratio;
      }
    }
    return std::pair{violations == 0, fmt::format("{} violations (Coulomb n_r=1, l=0..6)", violations)};
  });
}

void oracle_checks(Suite& suite) {
  struct Expected {
    PotentialModel model;
    int n_r;
    int l;
    double bound;
  };
  const std::vector<Expected> expected{
      {kCoulomb, 0, 0, 1e-6}, {kCoulomb, 1, 1, 1e-6},  {kOscillator, 0, 0, 1e-6}, {kOscillator, 2, 1, 1e-6},
      {kHulthen, 0, 0, 1e-6}, {kHulthen, 2, 0, 1e-6},  {kMorse, 0, 0, 1e-5},
  };
  for (const auto& e : expected) {
    suite.run(fmt::format("oracle/closed-form-{}-n{}-l{}", name(e.model), e.n_r, e.l), [&] {
      const Mode reference = std::holds_alternative<Morse>(e.model) ? Mode::None : Mode::Langer;
      const double exact = *analytic_eigenvalue(e.model, kUnit, e.n_r, e.l, reference);
      const auto result = numerov_eigenvalue(e.model, kUnit, e.n_r, e.l);
      const double diff = std::abs(result.energy - exact);
      return std::pair{diff <= e.bound && result.nodes == e.n_r,
                       fmt::format("E = {:.10f}, exact {:.10f}, |diff| {:.3e}, nodes {}", result.energy,
                                   exact, diff, result.nodes)};
    });
  }

  suite.run("oracle/orthogonality", [&] {
    const GridSpec grid{1e-6, 150.0, 40001};
    double worst = 0.0;
    std::vector<OracleResult> states;
    for (int n_r = 0; n_r <= 2; ++n_r) states.push_back(numerov_eigenvalue(kCoulomb, kUnit, n_r, 1, grid));
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t j = i + 1; j < states.size(); ++j) worst = std::max(worst, std::abs(overlap(states[i], states[j])));
    }
    return std::pair{worst < 1e-4, fmt::format("max |overlap| {:.3e}", worst)};
  });

  suite.run("oracle/convergence-order", [&] {
    std::vector<double> x, y;
    for (int points : {1001, 2001, 4001, 8001}) {
      const auto r = numerov_eigenvalue(kCoulomb, kUnit, 0, 0, GridSpec{1e-6, 40.0, points});
      x.push_back(std::log(40.0 / (points - 1)));
      y.push_back(std::log(std::abs(r.energy + 0.5)));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i] / x.size(), my += y[i] / y.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my), sxx += (x[i] - mx) * (x[i] - mx);
    const double slope = sxy / sxx;
    return std::pair{std::abs(slope - 4.0) <= 0.3, fmt::format("log-log slope {:.3f}", slope)};
  });
}

void output_checks(Suite& suite) {
  const auto rows = [] { return spectrum(kHulthen, kUnit, 3, 1, Mode::Langer); };
  suite.run("output/csv-deterministic", [&] {
    const auto a = to_csv(to_table(rows()));
    const auto b = to_csv(to_table(rows()));
    return std::pair{a == b, fmt::format("{} bytes", a.size())};
  });
  suite.run("output/json-roundtrip", [&] {
    const auto table = to_table(rows());
    return std::pair{parse_json(to_json(table)) == table, std::string("spectrum table")};
  });
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const CheckOptions& options) {
  Suite suite{options, {}};
  radial_checks(suite);
  angular_checks(suite);
  wavefn_checks(suite);
  oracle_checks(suite);
  output_checks(suite);
  return std::move(suite.results);
}

}  // namespace wkb
