#include "fibrefilter/cli.hpp"
#include "fibrefilter/io.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>

namespace fibrefilter::cli {

namespace {

enum class Format { report, json, csv };

// Command-line inputs. Options not given on the command line stay unset so
// that config-file values show through.
struct Flags {
  std::string config_path;
  std::string format;
  std::map<std::string, double> values;
  std::map<std::string, CLI::Option*> options;
  std::string param;
  CLI::Option* param_opt = nullptr;
  std::size_t points = 0;
  CLI::Option* points_opt = nullptr;
  bool log_scale = false;
  CLI::Option* log_opt = nullptr;
};

void add_number(CLI::App* app, Flags& flags, const std::string& name,
                const std::string& help) {
  flags.options[name] = app->add_option("--" + name, flags.values[name], help)
                            ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

void add_scenario_options(CLI::App* app, Flags& flags) {
  app->add_option("--config", flags.config_path, "JSON scenario file");
  app->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"report", "json", "csv"}));
  add_number(app, flags, "L", "Medium thickness [mm]");
  add_number(app, flags, "dp", "Particle diameter [um]");
  add_number(app, flags, "df", "Fiber diameter [um]");
  add_number(app, flags, "alpha", "Solidity (fiber volume fraction)");
  add_number(app, flags, "u", "Face velocity [m/s]");
  add_number(app, flags, "T", "Absolute temperature [K]");
  add_number(app, flags, "mu", "Dynamic viscosity [kg/(m s)]");
  add_number(app, flags, "rho", "Sets both fluid and particle density [kg/m^3]");
  add_number(app, flags, "rho-fluid", "Fluid density [kg/m^3]");
  add_number(app, flags, "rho-particle", "Particle density [kg/m^3]");
  add_number(app, flags, "dF", "Filter element diameter for Reynolds [m]");
  add_number(app, flags, "area", "Element cross-section area [m^2]");
  add_number(app, flags, "perimeter", "Element cross-section perimeter [m]");
  add_number(app, flags, "cd", "Drag coefficient C_D");
  add_number(app, flags, "kb", "Boltzmann constant [J/K]");
}

void add_sweep_options(CLI::App* app, Flags& flags) {
  flags.param_opt = app->add_option("--param", flags.param,
                                    "Swept input: dp, L, df, alpha, u, T, mu, rho_p");
  add_number(app, flags, "start", "First grid value");
  add_number(app, flags, "stop", "Last grid value");
  flags.points_opt = app->add_option("--points", flags.points, "Number of grid points");
  flags.log_opt = app->add_flag("--log", flags.log_scale, "Logarithmic spacing");
}

void add_mpps_options(CLI::App* app, Flags& flags) {
  add_number(app, flags, "dp-lo", "Lower end of the search interval [um] (default 0.01)");
  add_number(app, flags, "dp-hi", "Upper end of the search interval [um] (default 10)");
  add_number(app, flags, "tol", "Bracket width at termination [um] (default 1e-4)");
}

std::optional<double> flag(const Flags& flags, const std::string& name) {
  const auto it = flags.options.find(name);
  if (it == flags.options.end() || it->second->count() == 0) return std::nullopt;
  return flags.values.at(name);
}

ScenarioConfig config_from_flags(const Flags& f) {
  ScenarioConfig c;
  c.thickness_L = flag(f, "L");
  c.diameter_dp = flag(f, "dp");
  c.fiber_diameter_df = flag(f, "df");
  c.solidity_alpha = flag(f, "alpha");
  c.velocity_u = flag(f, "u");
  c.temperature_T = flag(f, "T");
  c.viscosity_mu = flag(f, "mu");
  c.fluid_density_rho_f = flag(f, "rho");
  c.density_rho_p = flag(f, "rho");
  if (auto v = flag(f, "rho-fluid")) c.fluid_density_rho_f = v;
  if (auto v = flag(f, "rho-particle")) c.density_rho_p = v;
  c.element_diameter_dF = flag(f, "dF");
  c.element_area = flag(f, "area");
  c.element_perimeter = flag(f, "perimeter");
  c.constants.drag_CD = flag(f, "cd");
  c.constants.boltzmann_k = flag(f, "kb");
  c.mpps.dp_lo = flag(f, "dp-lo");
  c.mpps.dp_hi = flag(f, "dp-hi");
  c.mpps.tol = flag(f, "tol");
  return c;
}

// A dF given on the command line replaces element geometry from the config
// file and vice versa, so the two routes never collide across sources.
ScenarioConfig merge(ScenarioConfig file, const ScenarioConfig& flags) {
  if (flags.element_diameter_dF) {
    file.element_area.reset();
    file.element_perimeter.reset();
  }
  if (flags.element_area || flags.element_perimeter) {
    file.element_diameter_dF.reset();
  }
  return overlay(std::move(file), flags);
}

Format resolve_format(const std::string& name, Format fallback) {
  if (name == "report") return Format::report;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return fallback;
}

SweepSpec sweep_spec(const ScenarioConfig& config, const Flags& f) {
  SweepSpec spec;
  if (config.sweep) {
    spec = *config.sweep;
  } else if (f.param_opt->count() == 0) {
    throw DomainError("param", "sweep requires --param (or a \"sweep\" object "
                               "in the config file)");
  }
  if (f.param_opt->count() > 0) {
    const auto p = parse_sweep_parameter(f.param);
    if (!p) {
      throw DomainError("param", "unknown sweep parameter '" + f.param +
                                     "' (expected dp, L, df, alpha, u, T, mu, rho_p)");
    }
    spec.parameter = *p;
  }
  if (auto v = flag(f, "start")) spec.start = *v;
  else if (!config.sweep) throw DomainError("start", "sweep requires --start");
  if (auto v = flag(f, "stop")) spec.stop = *v;
  else if (!config.sweep) throw DomainError("stop", "sweep requires --stop");
  if (f.points_opt->count() > 0) spec.points = f.points;
  else if (!config.sweep) throw DomainError("points", "sweep requires --points");
  if (f.log_opt->count() > 0) spec.scale = SweepScale::logarithmic;
  validate(spec);
  return spec;
}

void emit(std::ostream& out, const std::string& text) {
  out << text;
  out.flush();
  if (!out) throw IoError("failed to write output");
}

int run_point(const ScenarioConfig& config, Format format, std::ostream& out) {
  const Scenario scenario = resolve_scenario(config);
  const ReportRecord record = make_record(scenario, evaluate(scenario));
  switch (format) {
  case Format::report: emit(out, format_report(record)); break;
  case Format::json: emit(out, format_json(record)); break;
  case Format::csv:
    emit(out, csv_header() + "\n" + csv_row(scenario.particle.diameter_dp, record) + "\n");
    break;
  }
  return kSuccess;
}

int run_sweep(const ScenarioConfig& config, const SweepSpec& spec, Format format,
              std::ostream& out) {
  ResolveOptions options;
  options.swept = spec.parameter;
  const Scenario base = resolve_scenario(config, options);
  const std::vector<CurvePoint> curve = sweep(base, spec);
  std::vector<ReportRecord> rows;
  std::vector<double> values;
  rows.reserve(curve.size());
  values.reserve(curve.size());
  for (const CurvePoint& point : curve) {
    rows.push_back(make_record(with_parameter(base, spec.parameter, point.parameter_value),
                               point.result));
    values.push_back(point.parameter_value);
  }
  switch (format) {
  case Format::report: emit(out, format_sweep_report(spec, rows, values)); break;
  case Format::json: emit(out, format_sweep_json(spec, rows, values)); break;
  case Format::csv: emit(out, format_sweep_csv(spec, rows, values)); break;
  }
  return kSuccess;
}

int run_mpps(const ScenarioConfig& config, Format format, std::ostream& out) {
  const double lo = config.mpps.dp_lo.value_or(0.01);
  const double hi = config.mpps.dp_hi.value_or(10.0);
  const double tol = config.mpps.tol.value_or(1e-4);
  ResolveOptions options;
  options.require_dp = false;
  options.dp_placeholder = lo;
  const Scenario base = resolve_scenario(config, options);
  const MppsResult result = find_mpps(base, lo, hi, tol);
  switch (format) {
  case Format::report: emit(out, format_mpps_report(result, tol)); break;
  case Format::json: emit(out, format_mpps_json(result, tol)); break;
  case Format::csv: emit(out, format_mpps_csv(result, tol)); break;
  }
  return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Efficiency and penetration of fibrous filter media", "fibrefilter"};
  app.require_subcommand(1);

  Flags point_flags;
  Flags sweep_flags;
  Flags mpps_flags;
  CLI::App* point = app.add_subcommand("point", "Evaluate one operating point");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "One-parameter sweep (CSV by default)");
  CLI::App* mpps = app.add_subcommand("mpps", "Most-penetrating particle size search");
  add_scenario_options(point, point_flags);
  add_scenario_options(sweep_cmd, sweep_flags);
  add_sweep_options(sweep_cmd, sweep_flags);
  add_scenario_options(mpps, mpps_flags);
  add_mpps_options(mpps, mpps_flags);

  // CLI11 parses arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  try {
    Flags& f = point->parsed() ? point_flags : sweep_cmd->parsed() ? sweep_flags : mpps_flags;
    ScenarioConfig config = f.config_path.empty() ? ScenarioConfig{} : load_config(f.config_path);
    config = merge(std::move(config), config_from_flags(f));

    if (point->parsed()) {
      return run_point(config, resolve_format(f.format, Format::report), out);
    }
    if (sweep_cmd->parsed()) {
      const SweepSpec spec = sweep_spec(config, f);
      return run_sweep(config, spec, resolve_format(f.format, Format::csv), out);
    }
    return run_mpps(config, resolve_format(f.format, Format::report), out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

} // namespace fibrefilter::cli
