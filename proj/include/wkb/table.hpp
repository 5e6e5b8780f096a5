#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wkb/spectrum.hpp"

namespace wkb {

// monostate is a missing value: an empty CSV field, null in JSON.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  bool operator==(const Table&) const = default;
};

/// Columns potential,mode,n_r,l,E_wkb,E_analytic,E_oracle,abs_err,rel_err,status.
Table to_table(const std::vector<SpectrumRow>& rows);
std::vector<SpectrumRow> spectrum_rows(const Table& table);

/// Header line plus one line per row. Reals use 17 significant digits, so the
/// output is byte-identical for identical input.
std::string to_csv(const Table& table);

/// {"columns": [...], "rows": [{column: value, ...}, ...]}
std::string to_json(const Table& table);
/// Inverse of to_json. Throws Error{Domain} on malformed input.
Table parse_json(std::string_view text);

}  // namespace wkb
