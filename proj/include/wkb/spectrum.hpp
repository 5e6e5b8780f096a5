#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wkb/quantize.hpp"

namespace wkb {

enum class RowStatus {
  Ok,
  NoBoundState,
  NoAnalytic,
  OracleFailed,
  WkbFailed,  // turning-point or quadrature failure other than a missing bound state
};

std::string_view to_string(RowStatus status) noexcept;
std::optional<RowStatus> parse_status(std::string_view text) noexcept;

struct SpectrumRow {
  std::string potential;
  CentrifugalMode mode = CentrifugalMode::Langer;
  int n_r = 0;
  int l = 0;
  std::optional<double> E_wkb;
  std::optional<double> E_analytic;
  std::optional<double> E_oracle;
  // E_wkb against E_analytic, or against E_oracle when there is no closed form.
  std::optional<double> abs_err;
  std::optional<double> rel_err;
  RowStatus status = RowStatus::Ok;
  std::string message;  // why a row failed; not part of the table

  bool operator==(const SpectrumRow&) const = default;
};

/// One row per (n_r, l) with 0 <= n_r <= n_r_max, 0 <= l <= l_max, ordered by
/// (l, n_r). Per-row failures are recorded in the row status. A negative range
/// yields an empty list.
std::vector<SpectrumRow> spectrum(const PotentialModel& model, const PhysicalConstants& constants,
                                  int n_r_max, int l_max, CentrifugalMode mode,
                                  const SolveOptions& options = {}, bool with_oracle = false);

}  // namespace wkb
