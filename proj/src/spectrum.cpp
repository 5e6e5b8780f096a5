#include "wkb/spectrum.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "wkb/errors.hpp"
#include "wkb/oracle.hpp"

namespace wkb {
namespace {

constexpr std::array<std::pair<RowStatus, std::string_view>, 5> kStatusNames{{
    {RowStatus::Ok, "ok"},
    {RowStatus::NoBoundState, "no-bound-state"},
    {RowStatus::NoAnalytic, "no-analytic"},
    {RowStatus::OracleFailed, "oracle-failed"},
    {RowStatus::WkbFailed, "wkb-failed"},
}};

SpectrumRow make_row(const PotentialModel& model, const PhysicalConstants& constants, int n_r,
                     int l, CentrifugalMode mode, const SolveOptions& options, bool with_oracle) {
  SpectrumRow row;
  row.potential = std::string(name(model));
  row.mode = mode;
  row.n_r = n_r;
  row.l = l;
  row.E_analytic = analytic_eigenvalue(model, constants, n_r, l, mode);

  std::optional<RowStatus> failure;
  try {
    row.E_wkb = solve_eigenvalue(model, constants, n_r, l, mode, options).energy;
  } catch (const Error& e) {
    failure = e.code() == ErrorCode::NoBoundState ? RowStatus::NoBoundState : RowStatus::WkbFailed;
    row.message = e.what();
  }

  if (with_oracle) {
    try {
      row.E_oracle = numerov_eigenvalue(model, constants, n_r, l).energy;
    } catch (const Error& e) {
      // A missing oracle state is expected alongside a missing WKB state.
      if (!failure) failure = RowStatus::OracleFailed;
      if (row.message.empty()) row.message = e.what();
    }
  }

  const auto& reference = row.E_analytic ? row.E_analytic : row.E_oracle;
  if (row.E_wkb && reference) {
    row.abs_err = std::abs(*row.E_wkb - *reference);
    row.rel_err = *reference != 0.0 ? *row.abs_err / std::abs(*reference) : *row.abs_err;
  }

  if (failure) {
    row.status = *failure;
  } else if (!row.E_analytic) {
    row.status = RowStatus::NoAnalytic;
  }
  return row;
}

}  // namespace

std::string_view to_string(RowStatus status) noexcept {
  for (const auto& [s, text] : kStatusNames) {
    if (s == status) return text;
  }
  return "unknown";
}

std::optional<RowStatus> parse_status(std::string_view text) noexcept {
  for (const auto& [s, name] : kStatusNames) {
    if (name == text) return s;
  }
  return std::nullopt;
}

std::vector<SpectrumRow> spectrum(const PotentialModel& model, const PhysicalConstants& constants,
                                  int n_r_max, int l_max, CentrifugalMode mode,
                                  const SolveOptions& options, bool with_oracle) {
  std::vector<SpectrumRow> rows;
  if (n_r_max < 0 || l_max < 0) return rows;
  validate(model);
  validate(constants);
  for (int l = 0; l <= l_max; ++l) {
    for (int n_r = 0; n_r <= n_r_max; ++n_r) {
      rows.push_back(make_row(model, constants, n_r, l, mode, options, with_oracle));
    }
  }
  return rows;
}

}  // namespace wkb
