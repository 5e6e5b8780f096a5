#pragma once

#include <vector>

#include "wkb/potentials.hpp"

namespace wkb {

/// Uniform radial grid for the Numerov integration.
struct GridSpec {
  double r_min = 1e-6;
  double r_max = 10.0;
  int points = 20001;

  double step() const { return (r_max - r_min) / (points - 1); }
  double radius(int i) const { return r_min + i * step(); }
};

struct OracleResult {
  double energy = 0.0;
  int nodes = 0;
  GridSpec grid;
  double estimated_error = 0.0;
  // u(r) = r R(r) on the grid, normalized to unit integral of u^2.
  std::vector<double> wavefunction;

  // The request, kept so refine() can re-solve it on a finer grid.
  PotentialModel model;
  PhysicalConstants constants;
  int n_r = 0;
  int l = 0;
  double tol = 0.0;
};

/// Grid sized for the (n_r, l) state: r_min = 1e-6 length_scale, r_max the
/// larger of three outer WKB turning radii and the radius where the WKB decay
/// exponent beyond the turning point reaches 20; 20001 points.
GridSpec default_grid(const PotentialModel& model, const PhysicalConstants& constants, int n_r,
                      int l);

/// Eigenvalue of u'' = [l(l+1)/r^2 + (2m/hbar^2)(V - E)] u with
/// u(r_min) ~ r_min^{l+1} and u(r_max) = 0, by fourth-order Numerov.
///
/// Node counting of the outward solution brackets the n_r-th level; the
/// bracket is then closed by matching the outward and inward solutions at
/// the outer classical turning point. estimated_error is the final bracket
/// width (see refine() for a discretization estimate).
///
/// Throws NoBoundState, NodeCountMismatch, NonConvergence or GridTooSmall.
OracleResult numerov_eigenvalue(const PotentialModel& model, const PhysicalConstants& constants,
                                int n_r, int l, const GridSpec& grid, double tol = 1e-13);

OracleResult numerov_eigenvalue(const PotentialModel& model, const PhysicalConstants& constants,
                                int n_r, int l);

/// Re-solves on a grid with factor times the intervals and sets
/// estimated_error = |E_fine - E_coarse| / (2^4 - 1). factor must be >= 2.
OracleResult refine(const OracleResult& result, int factor = 2);

/// Trapezoidal integral of u_a u_b over a shared grid.
double overlap(const OracleResult& a, const OracleResult& b);

}  // namespace wkb
