#include "wkb/numeric.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <limits>

#include "wkb/errors.hpp"

namespace wkb::numeric {

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& options) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  if (a == b) return 0.0;

  auto composite = [&](int panels) {
    const double width = (b - a) / panels;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) {
      const double lo = a + k * width;
      const double hi = (k + 1 == panels) ? b : lo + width;
      sum += Rule::integrate(f, lo, hi);
    }
    return sum;
  };

  double previous = composite(1);
  for (int doubling = 1, panels = 2; doubling <= options.max_doublings; ++doubling, panels *= 2) {
    const double current = composite(panels);
    const double scale = std::max(std::abs(current), 1e-300);
    if (std::abs(current - previous) <= options.rel_tol * scale) return current;
    previous = current;
  }
  throw Error(ErrorCode::NonConvergence, "panel quadrature did not converge");
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                   int max_iterations) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (!sign_change(f_lo, f_hi)) {
    throw Error(ErrorCode::Precondition, "bisect_root: interval does not bracket a root");
  }
  for (int it = 0; it < max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (sign_change(f_lo, f_mid)) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
    if (std::abs(hi - lo) <= rel_tol * std::max(std::abs(lo), std::abs(hi))) break;
  }
  // secant polish
  if (f_hi != f_lo) {
    const double x = hi - f_hi * (hi - lo) / (f_hi - f_lo);
    if (x > std::min(lo, hi) && x < std::max(lo, hi)) return x;
  }
  return 0.5 * (lo + hi);
}

Extremum golden_section_min(const std::function<double(double)>& f, double a, double b,
                            double rel_tol, int max_iterations) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iterations; ++it) {
    if (std::abs(b - a) <= rel_tol * (std::abs(c) + std::abs(d))) break;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? Extremum{c, fc} : Extremum{d, fd};
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  grid.back() = hi;
  return grid;
}

}  // namespace wkb::numeric
