#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace wkb::numeric {

struct QuadratureOptions {
  double rel_tol = 1e-13;
  int max_doublings = 14;  // up to 2^14 panels
};

/// Composite 20-point Gauss-Legendre on [a, b]. The panel count doubles until
/// two successive estimates agree to rel_tol (absolute floor 1e-300).
/// Throws Error{NonConvergence} when the doubling cap is reached.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& options = {});

/// Bisection on a sign change of f over [lo, hi], followed by one secant
/// polish that is kept only if it stays inside the final bracket.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                   int max_iterations = 200);

struct Extremum {
  double x;
  double value;
};

/// Golden-section minimisation of a unimodal f on [a, b].
Extremum golden_section_min(const std::function<double(double)>& f, double a, double b,
                            double rel_tol = 1e-12, int max_iterations = 200);

std::vector<double> log_grid(double lo, double hi, int points);

inline bool sign_change(double a, double b) noexcept {
  return (a > 0.0 && b <= 0.0) || (a <= 0.0 && b > 0.0);
}

}  // namespace wkb::numeric
