#include "wkb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wkb/errors.hpp"
#include "wkb/numeric.hpp"
#include "wkb/quantize.hpp"

namespace wkb {
namespace {

constexpr double kRescaleAbove = 1e150;

struct Problem {
  const PotentialModel& model;
  const PhysicalConstants& constants;
  int l;
  GridSpec grid;
  std::vector<double> potential;  // V(r_i) + l(l+1) hbar^2 / (2 m r_i^2)
  double coulomb_strength;        // a in V ~ -a/r + b near the origin
  double core_offset;             // b
  std::size_t first = 0;          // integration starts here; u = 0 below

  Problem(const PotentialModel& m, const PhysicalConstants& c, int l_, const GridSpec& g)
      : model(m), constants(c), l(l_), grid(g), potential(static_cast<std::size_t>(g.points)) {
    const double barrier = l * (l + 1.0) * c.hbar * c.hbar / (2.0 * c.mass);
    for (int i = 0; i < g.points; ++i) {
      const double r = g.radius(i);
      potential[static_cast<std::size_t>(i)] = evaluate(m, c, r) + barrier / (r * r);
    }
    // Fit V ~ -a/r + b from r_min and 2 r_min; a and b set the Frobenius start.
    const double ra = g.r_min;
    const double rb = 2.0 * g.r_min;
    const double va = evaluate(m, c, ra);
    const double vb = evaluate(m, c, rb);
    coulomb_strength = (vb - va) * ra * rb / (rb - ra);
    core_offset = (vb * rb - va * ra) / (rb - ra);
    // Skip the points where h^2 l(l+1) / (12 r^2) is too large for a stable step.
    const double h = g.step();
    while (first + 2 < potential.size() &&
           l * (l + 1.0) * h * h / (12.0 * g.radius(static_cast<int>(first)) *
                                    g.radius(static_cast<int>(first))) > 0.05) {
      ++first;
    }
  }

  // Numerov weights stay positive for energies above this bound.
  double stable_energy_floor() const {
    const double h = grid.step();
    const double factor = 2.0 * constants.mass / (constants.hbar * constants.hbar) * h * h / 12.0;
    const auto begin = potential.begin() + static_cast<std::ptrdiff_t>(first);
    const double v_min = *std::min_element(begin, potential.end());
    const double v_max = *std::max_element(begin, potential.end());
    return std::max(v_min, v_max - 0.5 / factor);
  }

  // t_i = h^2 k_i / 12 with u'' = k u, k = (2m/hbar^2)(Veff - E); Numerov weight is 1 - t_i.
  std::vector<double> shifts(double energy) const {
    const double h = grid.step();
    const double factor = 2.0 * constants.mass / (constants.hbar * constants.hbar) * h * h / 12.0;
    std::vector<double> t(potential.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = factor * (potential[i] - energy);
    return t;
  }

  // u ~ r^{l+1} (1 + c1 r + c2 r^2), scaled to 1 at the second start point.
  double start(std::size_t i, double energy) const {
    const double k = 2.0 * constants.mass / (constants.hbar * constants.hbar);
    const double c1 = -k * coulomb_strength / (2.0 * (l + 1.0));
    const double c2 = (-k * coulomb_strength * c1 + k * (core_offset - energy)) / (2.0 * (2.0 * l + 3.0));
    const double r = grid.radius(static_cast<int>(i));
    const double r1 = grid.radius(static_cast<int>(first + 1));
    return std::pow(r / r1, l + 1.0) * (1.0 + c1 * r + c2 * r * r);
  }
};

// Numerov in summed form: w = (1 - t) u, w_{i+1} - w_i = (w_i - w_{i-1}) + 12 t_i u_i.
// Carrying the increment separately keeps the O(h^2) energy term from being
// swamped by rounding of 1 - t.
class NumerovMarch {
 public:
  NumerovMarch(const std::vector<double>& t, std::size_t i0, double u0, std::size_t i1, double u1)
      : t_(t), index_(i1), u_(u1), w_((1.0 - t[i1]) * u1), dw_(w_ - (1.0 - t[i0]) * u0),
        step_(i1 > i0 ? 1 : -1) {}

  double value() const { return u_; }
  std::size_t index() const { return index_; }

  void advance() {
    dw_ += 12.0 * t_[index_] * u_;
    w_ += dw_;
    index_ = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(index_) + step_);
    u_ = w_ / (1.0 - t_[index_]);
  }

  // Divides the running state by scale; returns it so stored values can follow.
  double rescale_if_large() {
    if (std::abs(u_) <= kRescaleAbove) return 1.0;
    u_ /= kRescaleAbove;
    w_ /= kRescaleAbove;
    dw_ /= kRescaleAbove;
    return kRescaleAbove;
  }

 private:
  const std::vector<double>& t_;
  std::size_t index_;
  double u_;
  double w_;
  double dw_;
  std::ptrdiff_t step_;
};

// Sign changes of the outward solution on the whole grid.
int count_nodes_outward(const Problem& problem, double energy) {
  const auto t = problem.shifts(energy);
  const std::size_t s = problem.first;
  NumerovMarch march(t, s, problem.start(s, energy), s + 1, problem.start(s + 1, energy));
  int nodes = 0;
  while (march.index() + 1 < t.size()) {
    const double before = march.value();
    march.advance();
    const double after = march.value();
    if ((after < 0.0 && before > 0.0) || (after > 0.0 && before < 0.0)) ++nodes;
    march.rescale_if_large();
  }
  return nodes;
}

std::vector<double> integrate_outward(const std::vector<double>& t, const Problem& problem,
                                      double energy, std::size_t last) {
  std::vector<double> u(last + 1, 0.0);
  const std::size_t s = problem.first;
  u[s] = problem.start(s, energy);
  u[s + 1] = problem.start(s + 1, energy);
  NumerovMarch march(t, s, u[s], s + 1, u[s + 1]);
  while (march.index() < last) {
    march.advance();
    u[march.index()] = march.value();
    if (const double scale = march.rescale_if_large(); scale != 1.0) {
      for (std::size_t j = 0; j < march.index(); ++j) u[j] /= scale;
      u[march.index()] = march.value();
    }
  }
  return u;
}

// Inward solution from u(r_max) = 0 down to index first; entries below first are unused.
std::vector<double> integrate_inward(const std::vector<double>& t, std::size_t first) {
  const std::size_t n = t.size();
  std::vector<double> u(n, 0.0);
  u[n - 2] = 1e-30;
  NumerovMarch march(t, n - 1, 0.0, n - 2, u[n - 2]);
  while (march.index() > first) {
    march.advance();
    u[march.index()] = march.value();
    if (const double scale = march.rescale_if_large(); scale != 1.0) {
      for (std::size_t j = march.index() + 1; j < n; ++j) u[j] /= scale;
      u[march.index()] = march.value();
    }
  }
  return u;
}

std::size_t matching_index(const Problem& problem, double energy) {
  const std::size_t n = problem.potential.size();
  std::size_t c = n / 2;
  for (std::size_t i = n - 1; i > 0; --i) {
    if (problem.potential[i] <= energy) {
      c = i;
      break;
    }
  }
  return std::clamp(c, n / 20, n - n / 20);
}

// u_out(c+1)/u_out(c) - u_in(c+1)/u_in(c); zero when both pieces are one solution.
double mismatch(const Problem& problem, double energy, std::size_t c) {
  const auto t = problem.shifts(energy);
  const auto out = integrate_outward(t, problem, energy, c + 1);
  const auto in = integrate_inward(t, c);
  return out[c + 1] / out[c] - in[c + 1] / in[c];
}

std::vector<double> eigenfunction(const Problem& problem, double energy, std::size_t c) {
  const auto t = problem.shifts(energy);
  auto u = integrate_outward(t, problem, energy, c);
  const auto in = integrate_inward(t, c);
  const double scale = u[c] / in[c];
  u.resize(t.size());
  for (std::size_t i = c + 1; i < t.size(); ++i) u[i] = in[i] * scale;

  double norm = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) norm += 0.5 * (u[i] * u[i] + u[i + 1] * u[i + 1]);
  norm = std::sqrt(norm * problem.grid.step());
  for (double& x : u) x /= norm;
  return u;
}

int count_nodes(const std::vector<double>& u) {
  double peak = 0.0;
  for (double x : u) peak = std::max(peak, std::abs(x));
  const double floor = 1e-10 * peak;
  int nodes = 0;
  int sign = 0;
  for (double x : u) {
    if (std::abs(x) <= floor) continue;
    const int s = x > 0.0 ? 1 : -1;
    if (sign != 0 && s != sign) ++nodes;
    sign = s;
  }
  return nodes;
}

}  // namespace

GridSpec default_grid(const PotentialModel& model, const PhysicalConstants& constants, int n_r,
                      int l) {
  const double scale = length_scale(model, constants);
  GridSpec grid;
  grid.r_min = kScanInner * scale;
  grid.points = 20001;

  try {
    const auto wkb = solve_eigenvalue(model, constants, n_r, l, CentrifugalMode::Langer,
                                      SolveOptions{.tol = 1e-8, .quadrature = {}});
    const double r2 = wkb.turning_points.r2;
    const RadialContext ctx{model, constants, wkb.energy, l, CentrifugalMode::Langer};
    // March outward until the WKB decay exponent reaches 20.
    double r = r2;
    double decay = 0.0;
    const double dr = 0.01 * r2;
    while (decay < 20.0 && r < 1e4 * r2) {
      const double q2 = -p_squared(ctx, r + 0.5 * dr);
      if (q2 > 0.0) decay += std::sqrt(q2) / constants.hbar * dr;
      r += dr;
    }
    grid.r_max = std::max(3.0 * r2, r);
  } catch (const Error&) {
    grid.r_max = 10.0 * scale * (n_r + l + 1) * (n_r + l + 1) + 20.0 * scale;
  }
  return grid;
}

OracleResult numerov_eigenvalue(const PotentialModel& model, const PhysicalConstants& constants,
                                int n_r, int l, const GridSpec& grid, double tol) {
  validate(model);
  validate(constants);
  if (n_r < 0 || l < 0) throw Error(ErrorCode::Precondition, "quantum numbers must be >= 0");
  if (!(grid.r_min > 0.0 && grid.r_min < grid.r_max) || grid.points < 1000) {
    throw Error(ErrorCode::Precondition, "grid needs 0 < r_min < r_max and >= 1000 points");
  }

  const Problem problem(model, constants, l, grid);
  auto above = [&](double E) { return count_nodes_outward(problem, E) >= n_r + 1; };

  double lo = problem.stable_energy_floor();
  if (count_nodes_outward(problem, lo) > n_r) {
    throw Error(ErrorCode::NonConvergence, "grid too coarse to resolve the requested level");
  }
  double hi = 0.0;
  if (vanishes_at_infinity(model)) {
    hi = -std::numeric_limits<double>::min();
    if (!above(hi)) throw Error(ErrorCode::NoBoundState, "fewer bound levels than requested");
  } else {
    double step = constants.hbar * std::get<Harmonic3D>(model).omega;
    for (int k = 0;; ++k, step *= 2.0) {
      hi = lo + step;
      if (above(hi)) break;
      if (k == 200) throw Error(ErrorCode::NonConvergence, "could not bracket the level");
    }
  }

  // Node bisection to a narrow bracket, then close it on the matching condition.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (above(mid) ? hi : lo) = mid;
    if (hi - lo <= 1e-8 * std::max(1.0, std::abs(hi))) break;
  }

  double energy = 0.5 * (lo + hi);
  const std::size_t c = matching_index(problem, energy);
  double m_lo = mismatch(problem, lo, c);
  const double m_hi = mismatch(problem, hi, c);
  if (numeric::sign_change(m_lo, m_hi)) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double m_mid = mismatch(problem, mid, c);
      if (numeric::sign_change(m_lo, m_mid)) {
        hi = mid;
      } else {
        lo = mid;
        m_lo = m_mid;
      }
      if (hi - lo <= tol * std::max(1.0, std::abs(hi))) break;
    }
    energy = 0.5 * (lo + hi);
  } else {
    // Node bisection alone already pins the Dirichlet level; finish it.
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (above(mid) ? hi : lo) = mid;
      if (hi - lo <= tol * std::max(1.0, std::abs(hi))) break;
    }
    energy = 0.5 * (lo + hi);
  }
  if (hi - lo > 1e3 * tol * std::max(1.0, std::abs(hi))) {
    throw Error(ErrorCode::NonConvergence, "eigenvalue bracket did not close");
  }

  OracleResult result;
  result.energy = energy;
  result.grid = grid;
  result.estimated_error = hi - lo;
  result.wavefunction = eigenfunction(problem, energy, matching_index(problem, energy));
  result.nodes = count_nodes(result.wavefunction);
  result.model = model;
  result.constants = constants;
  result.n_r = n_r;
  result.l = l;
  result.tol = tol;

  if (result.nodes != n_r) {
    throw Error(ErrorCode::NodeCountMismatch, "eigenfunction has " + std::to_string(result.nodes) +
                                                  " nodes, expected " + std::to_string(n_r));
  }
  const auto& u = result.wavefunction;
  double peak = 0.0;
  for (double x : u) peak = std::max(peak, std::abs(x));
  const std::size_t tail = u.size() - u.size() / 100;
  for (std::size_t i = tail; i + 1 < u.size(); ++i) {
    if (std::abs(u[i]) > 1e-6 * peak) {
      throw Error(ErrorCode::GridTooSmall, "wavefunction has not decayed at r_max");
    }
  }
  return result;
}

OracleResult numerov_eigenvalue(const PotentialModel& model, const PhysicalConstants& constants,
                                int n_r, int l) {
  return numerov_eigenvalue(model, constants, n_r, l, default_grid(model, constants, n_r, l));
}

OracleResult refine(const OracleResult& result, int factor) {
  if (factor < 2) throw Error(ErrorCode::Precondition, "refinement factor must be >= 2");
  GridSpec fine = result.grid;
  fine.points = (result.grid.points - 1) * factor + 1;
  auto refined = numerov_eigenvalue(result.model, result.constants, result.n_r, result.l, fine,
                                    result.tol);
  refined.estimated_error = std::abs(refined.energy - result.energy) / 15.0;
  return refined;
}

double overlap(const OracleResult& a, const OracleResult& b) {
  if (a.wavefunction.size() != b.wavefunction.size() || a.grid.r_min != b.grid.r_min ||
      a.grid.r_max != b.grid.r_max) {
    throw Error(ErrorCode::Precondition, "overlap needs eigenfunctions on the same grid");
  }
  const auto& u = a.wavefunction;
  const auto& v = b.wavefunction;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) sum += 0.5 * (u[i] * v[i] + u[i + 1] * v[i + 1]);
  return sum * a.grid.step();
}

}  // namespace wkb
