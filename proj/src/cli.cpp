#include "wkb/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "wkb/angular.hpp"
#include "wkb/errors.hpp"
#include "wkb/selfcheck.hpp"
#include "wkb/spectrum.hpp"
#include "wkb/table.hpp"
#include "wkb/wavefn.hpp"

namespace wkb {
namespace {

constexpr double kPi = std::numbers::pi;

// Raised for bad input that survives CLI11's own parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PotentialFlags {
  std::string potential;
  std::optional<double> e2, omega, V0, r0, alpha;
  double hbar = 1.0;
  double mass = 1.0;

  void attach(CLI::App& app, bool required) {
    auto* opt = app.add_option("--potential", potential, "coulomb | harmonic | morse | hulthen")
                    ->check(CLI::IsMember({"coulomb", "harmonic", "morse", "hulthen"}));
    if (required) opt->required();
    app.add_option("--e2", e2, "Coulomb coupling, V = -e2/r");
    app.add_option("--omega", omega, "oscillator frequency");
    app.add_option("--V0", V0, "well depth (morse, hulthen)");
    app.add_option("--r0", r0, "length parameter (morse, hulthen)");
    app.add_option("--alpha", alpha, "Morse width parameter");
    add_constants(app);
  }

  void add_constants(CLI::App& app) {
    app.add_option("--hbar", hbar, "reduced Planck constant")->capture_default_str();
    app.add_option("--mass", mass, "particle mass")->capture_default_str();
  }

  PhysicalConstants constants() const {
    PhysicalConstants c{hbar, mass};
    validate(c);
    return c;
  }

  PotentialModel model() const {
    auto need = [&](const std::optional<double>& value, const char* flag) {
      if (!value) throw UsageError(fmt::format("--potential {} requires {}", potential, flag));
      return *value;
    };
    PotentialModel model;
    if (potential == "coulomb") {
      model = Coulomb{need(e2, "--e2")};
    } else if (potential == "harmonic") {
      model = Harmonic3D{need(omega, "--omega")};
    } else if (potential == "morse") {
      model = Morse{need(V0, "--V0"), need(r0, "--r0"), need(alpha, "--alpha")};
    } else {
      model = Hulthen{need(V0, "--V0"), need(r0, "--r0")};
    }
    validate(model);
    return model;
  }
};

struct Tolerances {
  std::optional<double> quad, root;

  void attach(CLI::App& app) {
    app.add_option("--tol-quad", quad, "quadrature relative tolerance (env WKB_TOL_QUAD)");
    app.add_option("--tol-root", root, "root/residual tolerance (env WKB_TOL_ROOT)");
  }

  static double from_env(const char* name, double fallback) {
    const char* text = std::getenv(name);
    if (!text || !*text) return fallback;
    char* end = nullptr;
    const double value = std::strtod(text, &end);
    if (*end != '\0' || !(value > 0.0)) {
      throw UsageError(fmt::format("{} must be a positive number, got '{}'", name, text));
    }
    return value;
  }

  double quadrature() const {
    const double v = quad ? *quad : from_env("WKB_TOL_QUAD", numeric::QuadratureOptions{}.rel_tol);
    if (!(v > 0.0)) throw UsageError("--tol-quad must be positive");
    return v;
  }
  double root_finding() const {
    const double v = root ? *root : from_env("WKB_TOL_ROOT", SolveOptions{}.tol);
    if (!(v > 0.0)) throw UsageError("--tol-root must be positive");
    return v;
  }
  SolveOptions solve() const {
    SolveOptions options;
    options.tol = root_finding();
    options.quadrature.rel_tol = quadrature();
    return options;
  }
};

struct OutputFlags {
  std::string format = "csv";
  std::string path;

  void attach(CLI::App& app) {
    app.add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", path, "write to this file instead of standard output");
  }

  void emit(const Table& table, std::ostream& out) const {
    const std::string text = format == "json" ? to_json(table) : to_csv(table);
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    file << text;
    if (!file) throw UsageError(fmt::format("cannot write {}", path));
  }
};

std::vector<CentrifugalMode> parse_modes(const std::vector<std::string>& texts) {
  std::vector<CentrifugalMode> modes;
  for (const auto& text : texts) {
    const auto mode = parse_mode(text);
    if (!mode) throw UsageError(fmt::format("unknown mode '{}'", text));
    modes.push_back(*mode);
  }
  return modes;
}

int spectrum_exit_code(const std::vector<SpectrumRow>& rows, std::ostream& err) {
  int code = kExitOk;
  for (const auto& row : rows) {
    switch (row.status) {
      case RowStatus::WkbFailed:
      case RowStatus::OracleFailed:
        err << fmt::format("{} n_r={} l={} {}: {}\n", to_string(row.mode), row.n_r, row.l,
                           to_string(row.status), row.message);
        code = kExitNumeric;
        break;
      case RowStatus::NoBoundState:
        if (code == kExitOk) code = kExitPartial;
        break;
      default: break;
    }
  }
  return code;
}

Table angular_record(int n_theta, int m, const PhysicalConstants& constants) {
  const auto exact = angular_momentum_eigenvalue(n_theta, m, constants);
  const double numeric = solve_M2(n_theta, m, constants);
  const double rel = std::abs(numeric - exact.M2) / exact.M2;
  return {{"n_theta", "m", "l", "M2_analytic", "M2_numeric", "rel_diff", "agree"},
          {{std::int64_t{n_theta}, std::int64_t{m}, std::int64_t{exact.l}, exact.M2, numeric, rel,
            std::string(rel <= 1e-8 ? "true" : "false")}}};
}

struct WavefnFlags {
  std::string kind = "angular";
  int l = 0;
  int m = 0;
  double amplitude = 1.0;
  bool psi = false;
  std::optional<double> p_n, energy;
  double chi1 = 0.0;
  double r_max = 4.0 * kPi;
  int samples = 64;
};

Table wavefn_samples(const WavefnFlags& f, const PhysicalConstants& constants) {
  if (f.samples < 1) throw UsageError("--samples must be >= 1");
  if (f.kind == "angular") {
    if (f.l < 0 || f.l < std::abs(f.m)) throw UsageError("angular samples need l >= |m| >= 0");
    const WkbAngularWave wave{f.l, f.m, f.amplitude, constants};
    const auto tp = angular_turning_points(wave.context());
    Table table{{"theta", "value"}, {}};
    // Cell midpoints keep the singular endpoints out of the table.
    for (int i = 0; i < f.samples; ++i) {
      const double theta = tp.theta1 + (tp.theta2 - tp.theta1) * (i + 0.5) / f.samples;
      double value;
      try {
        value = wkb_angular_value(wave, theta);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::TurningPointSingularity) continue;
        throw;
      }
      if (f.psi) value = to_psi_representation(value, 1.0, theta, Representation::AngularOnly);
      table.rows.push_back({theta, value});
    }
    return table;
  }
  RadialStandingWave wave;
  if (f.p_n) {
    wave = {*f.p_n, f.chi1, f.amplitude, constants};
  } else if (f.energy) {
    wave = make_standing_wave(*f.energy, f.chi1, constants, f.amplitude);
  } else {
    throw UsageError("--kind radial requires --p-n or --energy");
  }
  if (!(f.r_max > 0.0)) throw UsageError("--r-max must be positive");
  Table table{{"r", "value"}, {}};
  for (int i = 0; i < f.samples; ++i) {
    const double r = f.r_max * i / std::max(1, f.samples - 1);
    table.rows.push_back({r, radial_standing_wave_value(wave, r)});
  }
  return table;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Domain:
    case ErrorCode::Precondition: return kExitUsage;
    default: return kExitNumeric;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semiclassical (WKB) bound-state quantization", "wkbq"};
  app.require_subcommand(1);

  PotentialFlags potential;
  Tolerances tolerances;
  OutputFlags output;
  std::vector<std::string> mode_names{"langer"};
  int nr_max = 3;
  int l_max = 0;

  auto add_table_command = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    potential.attach(*cmd, true);
    cmd->add_option("--mode", mode_names, "none | schrodinger | langer (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--nr-max", nr_max, "largest radial quantum number")->capture_default_str();
    cmd->add_option("--l-max", l_max, "largest orbital quantum number")->capture_default_str();
    tolerances.attach(*cmd);
    output.attach(*cmd);
    return cmd;
  };
  auto* spectrum_cmd = add_table_command("spectrum", "WKB eigenvalues against closed forms");
  auto* compare_cmd = add_table_command("compare", "WKB eigenvalues against closed forms and the Numerov oracle");

  int n_theta = 0;
  int m = 0;
  auto* angular_cmd = app.add_subcommand("angular", "squared angular momentum eigenvalue");
  angular_cmd->add_option("--n-theta", n_theta, "polar quantum number")->required();
  angular_cmd->add_option("--m", m, "azimuthal quantum number")->required();
  potential.add_constants(*angular_cmd);
  output.attach(*angular_cmd);

  WavefnFlags wave;
  auto* wavefn_cmd = app.add_subcommand("wavefn", "sample WKB wavefunctions");
  wavefn_cmd->add_option("--kind", wave.kind, "angular | radial")
      ->check(CLI::IsMember({"angular", "radial"}))
      ->capture_default_str();
  wavefn_cmd->add_option("--l", wave.l, "orbital quantum number");
  wavefn_cmd->add_option("--m", wave.m, "azimuthal quantum number");
  wavefn_cmd->add_option("--amplitude", wave.amplitude, "the arbitrary constant A")->capture_default_str();
  wavefn_cmd->add_flag("--psi", wave.psi, "divide angular values by sqrt(sin theta)");
  wavefn_cmd->add_option("--p-n", wave.p_n, "radial momentum of the standing wave");
  wavefn_cmd->add_option("--energy", wave.energy, "eigenvalue; sets p_n = sqrt(2 m |E|)");
  wavefn_cmd->add_option("--chi1", wave.chi1, "phase at the inner turning point")->capture_default_str();
  wavefn_cmd->add_option("--r-max", wave.r_max, "radial sample range [0, r_max]");
  wavefn_cmd->add_option("--samples", wave.samples, "number of samples")->capture_default_str();
  potential.add_constants(*wavefn_cmd);
  output.attach(*wavefn_cmd);

  std::optional<double> agreement;
  auto* check_cmd = app.add_subcommand("check", "run the invariant suite");
  potential.attach(*check_cmd, false);
  tolerances.attach(*check_cmd);
  check_cmd->add_option("--tol-agree", agreement, "closed-form agreement bound (never tightened below 1e-8)");

  std::vector<std::string> argv_storage{"wkbq"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help requests arrive here too.
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kExitOk;
    }
    err << "wkbq: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (spectrum_cmd->parsed() || compare_cmd->parsed()) {
      const bool with_oracle = compare_cmd->parsed();
      const auto model = potential.model();
      const auto constants = potential.constants();
      const auto options = tolerances.solve();
      if (nr_max < 0 || l_max < 0) throw UsageError("--nr-max and --l-max must be >= 0");
      std::vector<SpectrumRow> rows;
      for (auto mode : parse_modes(mode_names)) {
        auto part = spectrum(model, constants, nr_max, l_max, mode, options, with_oracle);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      output.emit(to_table(rows), out);
      return spectrum_exit_code(rows, err);
    }
    if (angular_cmd->parsed()) {
      const auto constants = potential.constants();
      if (n_theta < 0) throw UsageError("--n-theta must be >= 0");
      output.emit(angular_record(n_theta, m, constants), out);
      return kExitOk;
    }
    if (wavefn_cmd->parsed()) {
      output.emit(wavefn_samples(wave, potential.constants()), out);
      return kExitOk;
    }
    CheckOptions options;
    options.quadrature_tol = tolerances.quadrature();
    options.root_tol = tolerances.root_finding();
    if (agreement) options.agreement_tol = std::max(options.agreement_tol, *agreement);
    options.constants = potential.constants();
    if (!potential.potential.empty()) options.extra_models.push_back(potential.model());
    const auto results = run_selfcheck(options);
    int passed = 0;
    for (const auto& r : results) {
      out << fmt::format("{} {}: {}\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
      passed += r.passed;
    }
    out << fmt::format("{}/{} checks passed\n", passed, results.size());
    return passed == static_cast<int>(results.size()) ? kExitOk : kExitNumeric;
  } catch (const UsageError& e) {
    err << "wkbq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "wkbq: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace wkb
