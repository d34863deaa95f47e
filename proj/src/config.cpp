#include "fibrefilter/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace fibrefilter {

namespace {

using json = nlohmann::json;

DomainError config_error(const std::string& key, const std::string& what) {
  return DomainError(key, "config: " + key + ": " + what);
}

std::optional<double> read_number(const json& value, const std::string& key) {
  if (value.is_null()) return std::nullopt;
  if (!value.is_number()) throw config_error(key, "expected a number");
  return value.get<double>();
}

void read_constants(const json& object, ConstantOverrides& c) {
  if (!object.is_object()) throw config_error("constants", "expected an object");
  for (const auto& [key, value] : object.items()) {
    const std::string path = "constants." + key;
    if (key == "boltzmann_k") c.boltzmann_k = read_number(value, path);
    else if (key == "slip_A1") c.slip_A1 = read_number(value, path);
    else if (key == "slip_A2") c.slip_A2 = read_number(value, path);
    else if (key == "slip_A3") c.slip_A3 = read_number(value, path);
    else if (key == "slip_lambda") c.slip_lambda = read_number(value, path);
    else if (key == "drag_CD") c.drag_CD = read_number(value, path);
    else if (key == "nr_threshold") c.nr_threshold = read_number(value, path);
    else if (key == "diffusion_coeff") c.diffusion_coeff = read_number(value, path);
    else throw config_error(path, "unknown key");
  }
}

SweepSpec read_sweep(const json& object) {
  if (!object.is_object()) throw config_error("sweep", "expected an object");
  SweepSpec spec;
  bool has_start = false;
  bool has_stop = false;
  for (const auto& [key, value] : object.items()) {
    const std::string path = "sweep." + key;
    if (key == "parameter") {
      if (!value.is_string()) throw config_error(path, "expected a string");
      const auto p = parse_sweep_parameter(value.get<std::string>());
      if (!p) throw config_error(path, "unknown parameter '" + value.get<std::string>() + "'");
      spec.parameter = *p;
    } else if (key == "start") {
      spec.start = read_number(value, path).value_or(0.0);
      has_start = !value.is_null();
    } else if (key == "stop") {
      spec.stop = read_number(value, path).value_or(0.0);
      has_stop = !value.is_null();
    } else if (key == "points") {
      if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw config_error(path, "expected a non-negative integer");
      }
      spec.points = value.get<std::size_t>();
    } else if (key == "scale") {
      const std::string s = value.is_string() ? value.get<std::string>() : "";
      if (s == "linear") spec.scale = SweepScale::linear;
      else if (s == "logarithmic" || s == "log") spec.scale = SweepScale::logarithmic;
      else throw config_error(path, "expected \"linear\" or \"logarithmic\"");
    } else {
      throw config_error(path, "unknown key");
    }
  }
  if (!has_start) throw config_error("sweep.start", "missing");
  if (!has_stop) throw config_error("sweep.stop", "missing");
  return spec;
}

void read_mpps(const json& object, MppsSpec& m) {
  if (!object.is_object()) throw config_error("mpps", "expected an object");
  for (const auto& [key, value] : object.items()) {
    const std::string path = "mpps." + key;
    if (key == "dp_lo") m.dp_lo = read_number(value, path);
    else if (key == "dp_hi") m.dp_hi = read_number(value, path);
    else if (key == "tol") m.tol = read_number(value, path);
    else throw config_error(path, "unknown key");
  }
}

template <typename T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

double require(const std::optional<double>& value, const char* symbol) {
  if (!value) {
    throw DomainError(symbol, std::string("missing required input ") + symbol);
  }
  return *value;
}

// Known-valid stand-in for a field that will be supplied later (sweep or
// MPPS), used only to validate the remaining fields.
Scenario with_stand_in(Scenario s, SweepParameter parameter) {
  switch (parameter) {
  case SweepParameter::dp: return with_parameter(std::move(s), parameter, 1.0);
  case SweepParameter::L: return with_parameter(std::move(s), parameter, 1.0);
  case SweepParameter::df: return with_parameter(std::move(s), parameter, 1.0);
  case SweepParameter::alpha: return with_parameter(std::move(s), parameter, 0.1);
  case SweepParameter::u: return with_parameter(std::move(s), parameter, 0.1);
  case SweepParameter::T: return with_parameter(std::move(s), parameter, 293.0);
  case SweepParameter::mu: return with_parameter(std::move(s), parameter, 1.8e-5);
  case SweepParameter::rho_p: return with_parameter(std::move(s), parameter, 1000.0);
  }
  return s;
}

} // namespace

ScenarioConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DomainError("config", std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw config_error("config", "top level must be an object");

  ScenarioConfig c;
  for (const auto& [key, value] : doc.items()) {
    if (key == "thickness_L") c.thickness_L = read_number(value, key);
    else if (key == "fiber_diameter_df") c.fiber_diameter_df = read_number(value, key);
    else if (key == "solidity_alpha") c.solidity_alpha = read_number(value, key);
    else if (key == "element_diameter_dF") c.element_diameter_dF = read_number(value, key);
    else if (key == "element_area") c.element_area = read_number(value, key);
    else if (key == "element_perimeter") c.element_perimeter = read_number(value, key);
    else if (key == "viscosity_mu") c.viscosity_mu = read_number(value, key);
    else if (key == "temperature_T") c.temperature_T = read_number(value, key);
    else if (key == "velocity_u") c.velocity_u = read_number(value, key);
    else if (key == "fluid_density_rho_f") c.fluid_density_rho_f = read_number(value, key);
    else if (key == "diameter_dp") c.diameter_dp = read_number(value, key);
    else if (key == "density_rho_p") c.density_rho_p = read_number(value, key);
    else if (key == "constants") read_constants(value, c.constants);
    else if (key == "sweep") c.sweep = read_sweep(value);
    else if (key == "mpps") read_mpps(value, c.mpps);
    else throw config_error(key, "unknown key");
  }
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config file " + path.string());
  return parse_config(buffer.str());
}

ScenarioConfig overlay(ScenarioConfig base, const ScenarioConfig& top) {
  take(base.thickness_L, top.thickness_L);
  take(base.fiber_diameter_df, top.fiber_diameter_df);
  take(base.solidity_alpha, top.solidity_alpha);
  take(base.element_diameter_dF, top.element_diameter_dF);
  take(base.element_area, top.element_area);
  take(base.element_perimeter, top.element_perimeter);
  take(base.viscosity_mu, top.viscosity_mu);
  take(base.temperature_T, top.temperature_T);
  take(base.velocity_u, top.velocity_u);
  take(base.fluid_density_rho_f, top.fluid_density_rho_f);
  take(base.diameter_dp, top.diameter_dp);
  take(base.density_rho_p, top.density_rho_p);

  take(base.constants.boltzmann_k, top.constants.boltzmann_k);
  take(base.constants.slip_A1, top.constants.slip_A1);
  take(base.constants.slip_A2, top.constants.slip_A2);
  take(base.constants.slip_A3, top.constants.slip_A3);
  take(base.constants.slip_lambda, top.constants.slip_lambda);
  take(base.constants.drag_CD, top.constants.drag_CD);
  take(base.constants.nr_threshold, top.constants.nr_threshold);
  take(base.constants.diffusion_coeff, top.constants.diffusion_coeff);

  take(base.sweep, top.sweep);
  take(base.mpps.dp_lo, top.mpps.dp_lo);
  take(base.mpps.dp_hi, top.mpps.dp_hi);
  take(base.mpps.tol, top.mpps.tol);
  return base;
}

Scenario resolve_scenario(const ScenarioConfig& c, const ResolveOptions& options) {
  std::optional<SweepParameter> deferred = options.swept;
  if (!options.require_dp && !deferred) deferred = SweepParameter::dp;

  const auto get = [&](const std::optional<double>& value, const char* symbol,
                       SweepParameter parameter, double stand_in) {
    if (deferred && *deferred == parameter && !value) return stand_in;
    return require(value, symbol);
  };

  Scenario s;
  s.medium.thickness_L = get(c.thickness_L, "thickness_L", SweepParameter::L, 1.0);
  s.medium.fiber_diameter_df =
      get(c.fiber_diameter_df, "fiber_diameter_df", SweepParameter::df, 1.0);
  s.medium.solidity_alpha =
      get(c.solidity_alpha, "solidity_alpha", SweepParameter::alpha, 0.1);
  s.fluid.viscosity_mu = get(c.viscosity_mu, "viscosity_mu", SweepParameter::mu, 1.8e-5);
  s.fluid.temperature_T = get(c.temperature_T, "temperature_T", SweepParameter::T, 293.0);
  s.fluid.velocity_u = get(c.velocity_u, "velocity_u", SweepParameter::u, 0.1);
  s.particle.diameter_dp =
      get(c.diameter_dp, "diameter_dp", SweepParameter::dp, options.dp_placeholder);
  s.particle.density_rho_p =
      get(c.density_rho_p, "density_rho_p", SweepParameter::rho_p, 1000.0);

  const bool has_geometry = c.element_area || c.element_perimeter;
  if (c.element_diameter_dF && has_geometry) {
    throw DomainError("element_diameter_dF",
                      "give either element_diameter_dF or element_area and "
                      "element_perimeter, not both");
  }
  if (has_geometry) {
    const double area = require(c.element_area, "element_area");
    const double perimeter = require(c.element_perimeter, "element_perimeter");
    s.medium.element_diameter_dF = equivalent_diameter(area, perimeter);
  } else if (c.element_diameter_dF) {
    s.medium.element_diameter_dF = *c.element_diameter_dF;
  }

  if (c.fluid_density_rho_f) {
    s.fluid.fluid_density_rho_f = *c.fluid_density_rho_f;
  } else if (s.medium.element_diameter_dF) {
    throw DomainError("fluid_density_rho_f",
                      "missing required input fluid_density_rho_f (needed for "
                      "the Reynolds number)");
  } else {
    s.fluid.fluid_density_rho_f = s.particle.density_rho_p;
  }

  const ConstantOverrides& o = c.constants;
  ModelConstants& k = s.constants;
  k.boltzmann_k = o.boltzmann_k.value_or(k.boltzmann_k);
  k.slip_A1 = o.slip_A1.value_or(k.slip_A1);
  k.slip_A2 = o.slip_A2.value_or(k.slip_A2);
  k.slip_A3 = o.slip_A3.value_or(k.slip_A3);
  k.slip_lambda = o.slip_lambda.value_or(k.slip_lambda);
  k.drag_CD = o.drag_CD.value_or(k.drag_CD);
  k.nr_threshold = o.nr_threshold.value_or(k.nr_threshold);
  k.diffusion_coeff = o.diffusion_coeff.value_or(k.diffusion_coeff);

  if (deferred) {
    validate(with_stand_in(s, *deferred));
  } else {
    validate(s);
  }
  return s;
}

} // namespace fibrefilter
