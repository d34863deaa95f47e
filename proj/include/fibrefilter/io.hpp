#ifndef FIBREFILTER_IO_HPP
#define FIBREFILTER_IO_HPP

#include "fibrefilter/sweep.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibrefilter {

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ConstantOverrides {
  std::optional<double> boltzmann_k;
  std::optional<double> slip_A1;
  std::optional<double> slip_A2;
  std::optional<double> slip_A3;
  std::optional<double> slip_lambda;
  std::optional<double> drag_CD;
  std::optional<double> nr_threshold;
  std::optional<double> diffusion_coeff;
};

struct MppsSpec {
  std::optional<double> dp_lo;
  std::optional<double> dp_hi;
  std::optional<double> tol;
};

/**
 * Partially specified scenario, as read from a JSON config file or built
 * from command-line flags. Keys in the JSON file are the member names.
 */
struct ScenarioConfig {
  std::optional<double> thickness_L;
  std::optional<double> fiber_diameter_df;
  std::optional<double> solidity_alpha;
  std::optional<double> element_diameter_dF;
  std::optional<double> element_area;
  std::optional<double> element_perimeter;

  std::optional<double> viscosity_mu;
  std::optional<double> temperature_T;
  std::optional<double> velocity_u;
  std::optional<double> fluid_density_rho_f;

  std::optional<double> diameter_dp;
  std::optional<double> density_rho_p;

  ConstantOverrides constants;
  std::optional<SweepSpec> sweep;
  MppsSpec mpps;
};

/// Parses a JSON config document. Unknown keys and non-numeric values are
/// rejected with DomainError naming the key.
ScenarioConfig parse_config(std::string_view json_text);

/// Reads and parses a config file. Throws IoError if it cannot be read.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Fields set in `top` replace those in `base`.
ScenarioConfig overlay(ScenarioConfig base, const ScenarioConfig& top);

struct ResolveOptions {
  /// When false a missing diameter_dp is filled with `dp_placeholder`
  /// (sweeps over dp, MPPS searches).
  bool require_dp = true;
  double dp_placeholder = 1.0;
  /// Parameter a sweep will supply; its field need not be present.
  std::optional<SweepParameter> swept;
};

/**
 * @brief Turns a config into a validated Scenario.
 *
 * element_diameter_dF may be given directly or derived from element_area and
 * element_perimeter, not both. fluid_density_rho_f is required only when a
 * Reynolds number is requested; otherwise it defaults to the particle
 * density, matching the single-density convention of the original model.
 */
Scenario resolve_scenario(const ScenarioConfig& config,
                          const ResolveOptions& options = {});

/// Flat report of one evaluation, with P and E as percentages.
struct ReportRecord {
  Scenario inputs;
  double P_percent = 100.0;
  double E_percent = 0.0;
  double log_penetration = 0.0;
  double nD = 0.0;
  double nR = 0.0;
  double nI = 0.0;
  double sum_n = 0.0;
  std::optional<double> Re;
  double Ku = 0.0;
  double Pe = 0.0;
  double Stk = 0.0;
  double NR = 0.0;
  double Cc = 0.0;
  double J = 0.0;
  std::vector<std::string> warnings;
};

ReportRecord make_record(const Scenario& inputs, const FiltrationResult& result);

/// Shortest representation that parses back to the same double.
std::string format_roundtrip(double value);

/// Human-readable report, 6 significant digits.
std::string format_report(const ReportRecord& record);
std::string format_json(const ReportRecord& record);

/// parameter_value,P_percent,E_percent,nD,nR,nI,Ku,Pe,NR,Stk,J,Cc,Re,warnings
std::string csv_header();
std::string csv_row(double parameter_value, const ReportRecord& record);

std::string format_sweep_csv(const SweepSpec& spec,
                             const std::vector<ReportRecord>& rows,
                             const std::vector<double>& values);
std::string format_sweep_json(const SweepSpec& spec,
                              const std::vector<ReportRecord>& rows,
                              const std::vector<double>& values);
std::string format_sweep_report(const SweepSpec& spec,
                                const std::vector<ReportRecord>& rows,
                                const std::vector<double>& values);

std::string format_mpps_report(const MppsResult& result, double tol);
std::string format_mpps_json(const MppsResult& result, double tol);
std::string format_mpps_csv(const MppsResult& result, double tol);

} // namespace fibrefilter

#endif
