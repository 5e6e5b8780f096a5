#include "wkb/table.hpp"

#include <fmt/format.h>

#include <json.hpp>

#include "wkb/errors.hpp"

namespace wkb {
namespace {

using ordered_json = nlohmann::ordered_json;

Cell optional_cell(const std::optional<double>& value) {
  if (value) return *value;
  return std::monostate{};
}

std::optional<double> optional_value(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  return std::nullopt;
}

std::string csv_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return fmt::format("{}", v); }
    std::string operator()(double v) const { return fmt::format("{:.17g}", v); }
    std::string operator()(const std::string& v) const {
      if (v.find_first_of(",\"\n") == std::string::npos) return v;
      std::string quoted = "\"";
      for (char c : v) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
  };
  return std::visit(Visitor{}, cell);
}

ordered_json json_value(const Cell& cell) {
  struct Visitor {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(std::int64_t v) const { return v; }
    ordered_json operator()(double v) const { return v; }
    ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

Cell cell_value(const ordered_json& value) {
  if (value.is_null()) return std::monostate{};
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_number_float()) return value.get<double>();
  if (value.is_string()) return value.get<std::string>();
  throw Error(ErrorCode::Domain, "unsupported JSON cell type");
}

const std::vector<std::string> kSpectrumColumns{
    "potential", "mode", "n_r", "l", "E_wkb", "E_analytic", "E_oracle", "abs_err", "rel_err", "status"};

}  // namespace

Table to_table(const std::vector<SpectrumRow>& rows) {
  Table table{kSpectrumColumns, {}};
  for (const auto& r : rows) {
    table.rows.push_back({r.potential, std::string(to_string(r.mode)), std::int64_t{r.n_r},
                          std::int64_t{r.l}, optional_cell(r.E_wkb), optional_cell(r.E_analytic),
                          optional_cell(r.E_oracle), optional_cell(r.abs_err),
                          optional_cell(r.rel_err), std::string(to_string(r.status))});
  }
  return table;
}

std::vector<SpectrumRow> spectrum_rows(const Table& table) {
  if (table.columns != kSpectrumColumns) throw Error(ErrorCode::Domain, "not a spectrum table");
  std::vector<SpectrumRow> rows;
  for (const auto& cells : table.rows) {
    if (cells.size() != kSpectrumColumns.size()) throw Error(ErrorCode::Domain, "ragged row");
    const auto* potential = std::get_if<std::string>(&cells[0]);
    const auto* mode_text = std::get_if<std::string>(&cells[1]);
    const auto* n_r = std::get_if<std::int64_t>(&cells[2]);
    const auto* l = std::get_if<std::int64_t>(&cells[3]);
    const auto* status_text = std::get_if<std::string>(&cells[9]);
    if (!potential || !mode_text || !n_r || !l || !status_text) {
      throw Error(ErrorCode::Domain, "malformed spectrum row");
    }
    const auto mode = parse_mode(*mode_text);
    const auto status = parse_status(*status_text);
    if (!mode || !status) throw Error(ErrorCode::Domain, "unknown mode or status");
    SpectrumRow row;
    row.potential = *potential;
    row.mode = *mode;
    row.n_r = static_cast<int>(*n_r);
    row.l = static_cast<int>(*l);
    row.E_wkb = optional_value(cells[4]);
    row.E_analytic = optional_value(cells[5]);
    row.E_oracle = optional_value(cells[6]);
    row.abs_err = optional_value(cells[7]);
    row.rel_err = optional_value(cells[8]);
    row.status = *status;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  ordered_json doc;
  doc["columns"] = table.columns;
  doc["rows"] = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json object = ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      object[table.columns[i]] = json_value(row[i]);
    }
    doc["rows"].push_back(std::move(object));
  }
  return doc.dump(2) + '\n';
}

Table parse_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Domain, e.what());
  }
  if (!doc.is_object() || !doc.contains("columns") || !doc.contains("rows")) {
    throw Error(ErrorCode::Domain, "expected an object with columns and rows");
  }
  Table table;
  try {
    table.columns = doc["columns"].get<std::vector<std::string>>();
    for (const auto& object : doc["rows"]) {
      std::vector<Cell> row;
      for (const auto& column : table.columns) {
        row.push_back(object.contains(column) ? cell_value(object[column]) : Cell{});
      }
      table.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Domain, e.what());
  }
  return table;
}

}  // namespace wkb
