#pragma once

#include <string>
#include <vector>

#include "wkb/potentials.hpp"

namespace wkb {

struct CheckOptions {
  // Pass thresholds never drop below the documented invariant bounds; looser
  // values only widen them.
  double agreement_tol = 1e-8;
  double quadrature_tol = 1e-13;
  double root_tol = 1e-12;
  // Extra models (with their constants) that get the monotonicity check.
  std::vector<PotentialModel> extra_models;
  PhysicalConstants constants;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suite of every module. Each check is independent; an
/// exception inside one is reported as a failure of that check.
std::vector<CheckResult> run_selfcheck(const CheckOptions& options = {});

}  // namespace wkb
