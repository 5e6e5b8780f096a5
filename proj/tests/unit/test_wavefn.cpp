#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wkb/errors.hpp"
#include "wkb/wavefn.hpp"

using namespace wkb;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
const PhysicalConstants unit{};

ErrorCode code_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Domain;
}
}  // namespace

TEST_CASE("oscillating WKB value at the equator for l = m = 0") {
  CHECK(wkb_angular_value({0, 0, 1.0, unit}, pi / 2) == Approx(std::sqrt(2.0)));
  CHECK(wkb_angular_value({0, 0, 3.0, unit}, pi / 2) == Approx(3.0 * std::sqrt(2.0)));
}

TEST_CASE("oscillating WKB value near and outside the turning points") {
  const WkbAngularWave wave{2, 1, 1.0, unit};
  const auto tp = angular_turning_points(wave.context());
  CHECK(code_of([&] { wkb_angular_value(wave, tp.theta1 * (1.0 + 1e-15)); }) ==
        ErrorCode::TurningPointSingularity);
  CHECK(code_of([&] { wkb_angular_value(wave, tp.theta1 / 2); }) == ErrorCode::Domain);
  CHECK(code_of([&] { wkb_angular_value({1, 2, 1.0, unit}, 1.0); }) == ErrorCode::Precondition);
}

TEST_CASE("oscillating WKB parity about pi/2 for m = 0, even l") {
  for (int l : {0, 2, 6}) {
    const WkbAngularWave wave{l, 0, 1.0, unit};
    for (double d : {0.05, 0.3, 1.0, 1.5}) {
      CHECK(wkb_angular_value(wave, pi / 2 + d) == Approx(wkb_angular_value(wave, pi / 2 - d)).epsilon(1e-10));
    }
  }
}

TEST_CASE("evanescent branch decays into the barrier") {
  const WkbAngularWave wave{3, 2, 1.0, unit};
  const auto tp = angular_turning_points(wave.context());
  const double a = wkb_angular_evanescent_value(wave, 0.5 * tp.theta1);
  const double b = wkb_angular_evanescent_value(wave, 0.1 * tp.theta1);
  CHECK(a > b);
  CHECK(b > 0.0);
  CHECK(wkb_angular_evanescent_value(wave, pi - 0.1 * tp.theta1) == Approx(b));
  CHECK(code_of([] { wkb_angular_evanescent_value({2, 0, 1.0, unit}, 0.1); }) == ErrorCode::Domain);
}

TEST_CASE("normalized asymptote") {
  CHECK(asymptotic_normalization(1, 0) == Approx(0.7978846));
  CHECK(asymptotic_angular_value(1, 1, pi / 2) == Approx(asymptotic_normalization(1, 1)));
  CHECK(asymptotic_angular_value(0, 0, pi / 2) == Approx(asymptotic_normalization(0, 0)));
  CHECK(asymptotic_normalization(4, -2) == asymptotic_normalization(4, 2));
  CHECK_THROWS_AS(asymptotic_normalization(1, 2), Error);
}

TEST_CASE("Jacobian conversion") {
  CHECK(to_psi_representation(1.0, 2.0, pi / 2) == Approx(0.5));
  CHECK(to_psi_representation(1.0, 1.0, pi / 6, Representation::AngularOnly) == Approx(std::sqrt(2.0)));
  CHECK(code_of([] { to_psi_representation(1.0, 1.0, 0.0); }) == ErrorCode::Domain);
  CHECK(code_of([] { to_psi_representation(1.0, 0.0, 1.0); }) == ErrorCode::Domain);
}

TEST_CASE("radial standing wave") {
  const RadialStandingWave wave{1.0, 0.0, 2.0, unit};
  CHECK(radial_standing_wave_value(wave, pi / 4) == Approx(2.0));
  CHECK(radial_standing_wave_value(wave, pi / 4 + 2 * pi) == Approx(2.0));
  CHECK(radial_standing_wave_value(wave, 3 * pi / 4) == Approx(0.0).epsilon(1e-12));
  CHECK(radial_standing_wave_value(wave, 7 * pi / 4) == Approx(0.0).epsilon(1e-12));
  const auto made = make_standing_wave(-0.5, 0.2, unit);
  CHECK(made.p_n == Approx(1.0));
  CHECK(made.chi1 == 0.2);
  CHECK_THROWS_AS(radial_standing_wave_value({0.0, 0.0, 1.0, unit}, 1.0), Error);
}

TEST_CASE("quasiclassicality ratio") {
  const RadialContext ctx{Coulomb{1.0}, unit, -0.125, 1, CentrifugalMode::Langer};
  CHECK(quasiclassicality_ratio(ctx, 4.0) == Approx(0.7559).epsilon(1e-4));
  CHECK(code_of([&] { quasiclassicality_ratio(ctx, 0.5); }) == ErrorCode::Domain);
  // Oscillator l = 0: V_eff symmetric in log r about its minimum r^2 = 1/2; p' = 0 there.
  const RadialContext osc{Harmonic3D{1.0}, unit, 3.0, 0, CentrifugalMode::Langer};
  CHECK(quasiclassicality_ratio(osc, std::sqrt(0.5)) == Approx(0.0).epsilon(1e-6));
  const auto tp = find_turning_points(ctx);
  CHECK(quasiclassicality_ratio(ctx, tp.r1 * (1.0 + 1e-5)) > 100.0);
}

TEST_CASE("small-angle exponent follows |m| for m != 0") {
  CHECK(small_angle_exponent(1, 1) == Approx(1.0).epsilon(0.05));
  CHECK(small_angle_exponent(3, 2) == Approx(2.0).epsilon(0.025));
}
