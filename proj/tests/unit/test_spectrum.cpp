#include <doctest.h>

#include <cmath>

#include "wkb/errors.hpp"
#include "wkb/spectrum.hpp"
#include "wkb/table.hpp"

using namespace wkb;
using doctest::Approx;
using Mode = CentrifugalMode;

namespace {
const PhysicalConstants unit{};
}

TEST_CASE("Coulomb spectrum rows") {
  const auto rows = spectrum(Coulomb{1.0}, unit, 2, 1, Mode::Langer);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].l == static_cast<int>(i / 3));
    CHECK(rows[i].n_r == static_cast<int>(i % 3));
    CHECK(rows[i].status == RowStatus::Ok);
    CHECK(*rows[i].rel_err <= 1e-8);
    CHECK_FALSE(rows[i].E_oracle);
  }
}

TEST_CASE("Hulthen rows beyond the last level are flagged, not dropped") {
  const auto rows = spectrum(Hulthen{8.0, 1.0}, unit, 3, 0, Mode::Langer);
  REQUIRE(rows.size() == 4);
  for (int i = 0; i < 3; ++i) CHECK(rows[i].status == RowStatus::Ok);
  CHECK(rows[3].status == RowStatus::NoBoundState);
  CHECK_FALSE(rows[3].E_wkb);
  CHECK_FALSE(rows[3].abs_err);
}

TEST_CASE("empty and failing requests") {
  CHECK(spectrum(Coulomb{1.0}, unit, -1, 0, Mode::Langer).empty());
  CHECK(spectrum(Coulomb{1.0}, unit, 0, -1, Mode::Langer).empty());
  const auto rows = spectrum(Coulomb{1.0}, unit, 0, 1, Mode::Schrodinger);
  CHECK(rows[0].status == RowStatus::WkbFailed);
  CHECK(rows[1].status == RowStatus::Ok);
  CHECK(*rows[1].rel_err > 1e-3);
}

TEST_CASE("rows without a closed form compare against the oracle") {
  const auto rows = spectrum(Hulthen{8.0, 1.0}, unit, 0, 1, Mode::Schrodinger, {}, true);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].status == RowStatus::NoAnalytic);
  REQUIRE(rows[1].E_oracle);
  CHECK(*rows[1].abs_err == Approx(std::abs(*rows[1].E_wkb - *rows[1].E_oracle)));
}

TEST_CASE("status names round-trip") {
  for (auto s : {RowStatus::Ok, RowStatus::NoBoundState, RowStatus::NoAnalytic, RowStatus::OracleFailed,
                 RowStatus::WkbFailed}) {
    CHECK(parse_status(to_string(s)) == s);
  }
}

TEST_CASE("CSV layout") {
  const auto rows = spectrum(Hulthen{8.0, 1.0}, unit, 3, 0, Mode::Langer);
  const auto csv = to_csv(to_table(rows));
  CHECK(csv.rfind("potential,mode,n_r,l,E_wkb,E_analytic,E_oracle,abs_err,rel_err,status\n", 0) == 0);
  CHECK(csv.find("hulthen,langer,3,0,,,,,,no-bound-state\n") != std::string::npos);
  CHECK(csv.find("-28.125,") != std::string::npos);
  CHECK(to_csv(to_table(rows)) == csv);
}

TEST_CASE("CSV quoting and 17 significant digits") {
  const Table table{{"a", "b"}, {{0.1, std::string("x,\"y\"")}}};
  CHECK(to_csv(table) == "a,b\n0.10000000000000001,\"x,\"\"y\"\"\"\n");
}

TEST_CASE("JSON round-trips spectrum tables") {
  const auto rows = spectrum(Morse{10.0, 1.0, 1.0}, unit, 4, 1, Mode::None, {}, true);
  const auto table = to_table(rows);
  const auto parsed = parse_json(to_json(table));
  CHECK(parsed == table);
  auto back = spectrum_rows(parsed);
  for (auto& r : back) r.message.clear();
  auto original = rows;
  for (auto& r : original) r.message.clear();
  CHECK(back == original);
}

TEST_CASE("JSON round-trips generic tables, including integral doubles") {
  const Table table{{"x", "n", "s", "missing"}, {{2.0, std::int64_t{2}, std::string("a"), std::monostate{}}}};
  CHECK(parse_json(to_json(table)) == table);
  CHECK_THROWS_AS(parse_json("[1, 2"), Error);
  CHECK_THROWS_AS(parse_json("{\"columns\": []}"), Error);
}
