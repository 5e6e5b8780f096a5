// Randomized checks of the invariants over parameter ranges.
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wkb/angular.hpp"
#include "wkb/quantize.hpp"
#include "wkb/wavefn.hpp"

using namespace wkb;
using Mode = CentrifugalMode;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("phase integral grows with E") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.02, 0.98);
  const std::vector<PotentialModel> models{Coulomb{1.3}, Harmonic3D{0.7}, Morse{12.0, 1.5, 1.2}, Hulthen{10.0, 0.8}};
  for (const auto& model : models) {
    for (int l = 0; l <= 3; ++l) {
      const double vmin = effective_potential_minimum(model, {}, l, Mode::Langer).value;
      const double top = vanishes_at_infinity(model) ? 0.0 : vmin + 20.0;
      if (!(vmin < top)) continue;  // no well below the continuum at this l
      for (int k = 0; k < 10; ++k) {
        const double a = vmin + (top - vmin) * unit(rng);
        const double b = vmin + (top - vmin) * unit(rng);
        if (a == b) continue;
        const double Ia = phase_integral({model, {}, std::min(a, b), l, Mode::Langer});
        const double Ib = phase_integral({model, {}, std::max(a, b), l, Mode::Langer});
        CHECK(Ib > Ia);
      }
    }
  }
}

TEST_CASE("quadrature agrees with the exact Coulomb and oscillator integrals for random constants") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> scale(0.3, 3.0);
  for (int k = 0; k < 20; ++k) {
    const PhysicalConstants c{scale(rng), scale(rng)};
    const int l = k % 4;
    for (Mode mode : {Mode::Langer, Mode::Schrodinger}) {
      if (mode == Mode::Schrodinger && l == 0) continue;
      const PotentialModel coulomb = Coulomb{scale(rng)};
      const double vmin = effective_potential_minimum(coulomb, c, l, mode).value;
      const RadialContext ctx{coulomb, c, vmin * scale(rng) / 3.1, l, mode};
      CHECK(phase_integral(ctx) == doctest::Approx(*closed_form_phase_integral(ctx)).epsilon(1e-10));

      const PotentialModel osc = Harmonic3D{scale(rng)};
      const double omin = effective_potential_minimum(osc, c, l, mode).value;
      const RadialContext octx{osc, c, omin * (1.0 + scale(rng)), l, mode};
      CHECK(phase_integral(octx) == doctest::Approx(*closed_form_phase_integral(octx)).epsilon(1e-10));
    }
  }
}

TEST_CASE("exact levels satisfy the quantization condition for random constants") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> scale(0.3, 3.0);
  for (int k = 0; k < 20; ++k) {
    const PhysicalConstants c{scale(rng), scale(rng)};
    const int n_r = k % 3;
    const int l = (k / 3) % 4;
    for (const PotentialModel& model : {PotentialModel{Coulomb{scale(rng)}}, PotentialModel{Harmonic3D{scale(rng)}}}) {
      const double E = solve_eigenvalue(model, c, n_r, l, Mode::Langer).energy;
      CHECK(E == doctest::Approx(*analytic_eigenvalue(model, c, n_r, l, Mode::Langer)).epsilon(1e-9));
    }
  }
}

TEST_CASE("angular closed form on a random grid, and m enters only through |m|") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> M2(0.25, 400.0), frac(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double m2 = M2(rng);
    const double Mz = std::sqrt(m2) * frac(rng);
    const double I = angular_phase_integral({m2, Mz, {}});
    CHECK(std::abs(I - pi * (std::sqrt(m2) - Mz)) <= 1e-9 * pi * std::sqrt(m2));
    CHECK(angular_phase_integral({m2, -Mz, {}}) == I);
  }
}

TEST_CASE("angular phase integral grows with M^2") {
  for (double Mz : {0.0, 1.0, 4.0}) {
    double previous = -1.0;
    for (double M = Mz + 0.01; M < Mz + 10.0; M += 0.37) {
      const double I = angular_phase_integral({M * M, Mz, {}});
      CHECK(I > previous);
      previous = I;
    }
  }
}

TEST_CASE("psi representation round trip") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> r(0.01, 50.0), theta(1e-3, pi - 1e-3), value(-3.0, 3.0);
  for (int k = 0; k < 200; ++k) {
    const double v = value(rng), rr = r(rng), t = theta(rng);
    const double psi = to_psi_representation(v, rr, t);
    CHECK(psi * psi * rr * rr * std::sin(t) == doctest::Approx(v * v).epsilon(1e-12));
  }
}

// Coulomb only: for the oscillator at fixed n_r the radial motion tends to a
// fixed one-dimensional oscillator as l grows and the ratio creeps upward.
// Positions stay outside the maximum of p, where |p'| passes through zero.
TEST_CASE("quasiclassicality improves with l") {
  for (int n_r : {0, 1, 3}) {
  for (double position : {0.5, 0.75, 0.9}) {
    double previous = INFINITY;
    for (int l = 0; l <= 8; ++l) {
      const double E = solve_eigenvalue(Coulomb{1.0}, {}, n_r, l, Mode::Langer).energy;
      const RadialContext ctx{Coulomb{1.0}, {}, E, l, Mode::Langer};
      const auto tp = find_turning_points(ctx);
      const double ratio = quasiclassicality_ratio(ctx, tp.r1 + position * (tp.r2 - tp.r1));
      CHECK(ratio < previous);
      previous = ratio;
    }
  }
  }
}
