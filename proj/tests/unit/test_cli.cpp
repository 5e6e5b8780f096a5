#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wkb/cli.hpp"
#include "wkb/table.hpp"

using namespace wkb;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("spectrum: Coulomb Langer table") {
  const auto r = run({"spectrum", "--potential", "coulomb", "--e2", "1", "--mode", "langer", "--nr-max", "2",
                      "--l-max", "1"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == 7);
  for (const auto& row : spectrum_rows(parse_json(run({"spectrum", "--potential", "coulomb", "--e2", "1",
                                                       "--nr-max", "2", "--l-max", "1", "--format", "json"})
                                                      .out))) {
    CHECK(*row.rel_err <= 1e-8);
  }
}

TEST_CASE("spectrum: Hulthen runs out of levels") {
  const auto r = run({"spectrum", "--potential", "hulthen", "--V0", "8", "--r0", "1", "--mode", "langer",
                      "--nr-max", "5", "--l-max", "0"});
  CHECK(r.code == kExitPartial);
  CHECK(lines(r.out) == 7);
  CHECK(r.out.find("hulthen,langer,2,0,-0.67") != std::string::npos);
  CHECK(r.out.find("hulthen,langer,3,0,,,,,,no-bound-state") != std::string::npos);
}

TEST_CASE("usage errors exit 1 with a diagnostic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"spectrum", "--potential", "hulthen", "--r0", "1"},
           {"spectrum", "--potential", "yukawa"},
           {"spectrum", "--potential", "coulomb", "--e2", "1", "--mode", "wkb"},
           {"spectrum", "--potential", "coulomb", "--e2", "-1"},
           {"spectrum", "--potential", "coulomb", "--e2", "1", "--format", "xml"},
           {"angular", "--n-theta", "-1", "--m", "0"},
           {"check", "--potential", "hulthen", "--V0", "-1", "--r0", "1"},
       }) {
    const auto r = run(args);
    CHECK(r.code == kExitUsage);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
  }
}

TEST_CASE("help exits 0") {
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"spectrum", "--help"}).code == kExitOk);
}

TEST_CASE("compare: numeric failures exit 2, negative control visible") {
  const auto r = run({"compare", "--potential", "coulomb", "--e2", "1", "--mode", "langer,schrodinger",
                      "--nr-max", "0", "--l-max", "1"});
  CHECK(r.code == kExitNumeric);
  const auto rows = spectrum_rows(parse_json(run({"compare", "--potential", "coulomb", "--e2", "1", "--mode",
                                                  "schrodinger", "--nr-max", "0", "--l-max", "1",
                                                  "--format", "json"})
                                                 .out));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].status == RowStatus::WkbFailed);
  CHECK(*rows[1].rel_err > 1e-3);
}

TEST_CASE("compare: oscillator within 1e-6") {
  const auto r = run({"compare", "--potential", "harmonic", "--omega", "1", "--nr-max", "2", "--l-max", "2",
                      "--format", "json"});
  CHECK(r.code == kExitOk);
  for (const auto& row : spectrum_rows(parse_json(r.out))) {
    CHECK(*row.rel_err <= 1e-6);
    CHECK(std::abs(*row.E_oracle - *row.E_analytic) <= 1e-6);
  }
}

TEST_CASE("compare: Morse two routes") {
  const auto r = run({"compare", "--potential", "morse", "--V0", "10", "--r0", "1", "--alpha", "1", "--mode",
                      "none,langer", "--nr-max", "0", "--l-max", "0", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto rows = spectrum_rows(parse_json(r.out));
  REQUIRE(rows.size() == 2);
  CHECK(*rows[0].E_analytic == doctest::Approx(-7.8889322).epsilon(1e-7));
  CHECK(*rows[1].E_analytic == doctest::Approx(-6.0278640).epsilon(1e-8));
  CHECK(*rows[0].E_oracle == *rows[1].E_oracle);
}

TEST_CASE("angular record") {
  const auto a = run({"angular", "--n-theta", "0", "--m", "0", "--format", "json"});
  CHECK(a.code == kExitOk);
  const auto table = parse_json(a.out);
  CHECK(std::get<double>(table.rows[0][3]) == 0.25);
  CHECK(std::get<std::string>(table.rows[0][6]) == "true");
  const auto b = run({"angular", "--n-theta", "2", "--m", "-3"});
  CHECK(b.out.find("\n2,-3,5,30.25,") != std::string::npos);
}

TEST_CASE("wavefn samples") {
  const auto angular = run({"wavefn", "--kind", "angular", "--l", "5", "--m", "0", "--samples", "50",
                            "--format", "json"});
  CHECK(angular.code == kExitOk);
  const auto table = parse_json(angular.out);
  CHECK(table.rows.size() == 50);
  for (const auto& row : table.rows) {
    const double theta = std::get<double>(row[0]);
    CHECK(theta > 0.0);
    CHECK(theta < 3.14159265358979);
    CHECK(std::isfinite(std::get<double>(row[1])));
  }

  const auto psi = parse_json(run({"wavefn", "--l", "2", "--m", "1", "--samples", "5", "--psi", "--format",
                                   "json"}).out);
  const auto plain = parse_json(run({"wavefn", "--l", "2", "--m", "1", "--samples", "5", "--format", "json"}).out);
  for (std::size_t i = 0; i < psi.rows.size(); ++i) {
    const double theta = std::get<double>(psi.rows[i][0]);
    CHECK(std::get<double>(psi.rows[i][1]) ==
          doctest::Approx(std::get<double>(plain.rows[i][1]) / std::sqrt(std::sin(theta))));
  }

  const auto radial = parse_json(run({"wavefn", "--kind", "radial", "--p-n", "1", "--chi1", "0", "--samples",
                                      "9", "--r-max", "12.566370614359172", "--format", "json"}).out);
  // Period 2 pi hbar: samples 4 apart (2 pi) agree.
  for (std::size_t i = 0; i + 4 < radial.rows.size(); ++i) {
    CHECK(std::get<double>(radial.rows[i][1]) == doctest::Approx(std::get<double>(radial.rows[i + 4][1])));
  }
  CHECK(run({"wavefn", "--kind", "radial"}).code == kExitUsage);
}

TEST_CASE("output file and byte-identical CSV") {
  const auto path = (std::filesystem::temp_directory_path() / "wkbq_test_output.csv").string();
  const std::vector<std::string> args{"spectrum", "--potential", "hulthen", "--V0", "8", "--r0", "1",
                                      "--nr-max", "3", "--l-max", "1", "--output", path};
  CHECK(run(args).out.empty());
  std::ifstream first(path);
  const std::string a((std::istreambuf_iterator<char>(first)), {});
  run(args);
  std::ifstream second(path);
  const std::string b((std::istreambuf_iterator<char>(second)), {});
  CHECK_FALSE(a.empty());
  CHECK(a == b);
  std::filesystem::remove(path);
}

TEST_CASE("tolerance overrides from the environment") {
  ::setenv("WKB_TOL_ROOT", "bogus", 1);
  CHECK(run({"spectrum", "--potential", "coulomb", "--e2", "1"}).code == kExitUsage);
  ::setenv("WKB_TOL_ROOT", "1e-6", 1);
  CHECK(run({"spectrum", "--potential", "coulomb", "--e2", "1"}).code == kExitOk);
  ::unsetenv("WKB_TOL_ROOT");
}

TEST_CASE("check prints one line per invariant") {
  const auto r = run({"check"});
  CHECK(lines(r.out) > 30);
  CHECK(r.out.find("PASS closed-form/coulomb-langer-l0") != std::string::npos);
  CHECK(r.out.find("checks passed\n") != std::string::npos);
  // Exit 0 iff every line passes.
  CHECK((r.code == kExitOk) == (r.out.find("FAIL ") == std::string::npos));
}
