#include "fibrefilter/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <sstream>

namespace fibrefilter {

namespace {

using ojson = nlohmann::ordered_json;

std::string sig6(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string join_warnings(const std::vector<std::string>& warnings) {
  std::string joined;
  for (const auto& w : warnings) {
    if (!joined.empty()) joined += " | ";
    joined += w;
  }
  return joined;
}

ojson inputs_json(const Scenario& s) {
  ojson in;
  in["thickness_L"] = s.medium.thickness_L;
  in["fiber_diameter_df"] = s.medium.fiber_diameter_df;
  in["solidity_alpha"] = s.medium.solidity_alpha;
  if (s.medium.element_diameter_dF) {
    in["element_diameter_dF"] = *s.medium.element_diameter_dF;
  }
  in["viscosity_mu"] = s.fluid.viscosity_mu;
  in["temperature_T"] = s.fluid.temperature_T;
  in["velocity_u"] = s.fluid.velocity_u;
  in["fluid_density_rho_f"] = s.fluid.fluid_density_rho_f;
  in["diameter_dp"] = s.particle.diameter_dp;
  in["density_rho_p"] = s.particle.density_rho_p;
  const ModelConstants& k = s.constants;
  in["constants"] = {
      {"boltzmann_k", k.boltzmann_k}, {"slip_A1", k.slip_A1},
      {"slip_A2", k.slip_A2},         {"slip_A3", k.slip_A3},
      {"slip_lambda", k.slip_lambda}, {"drag_CD", k.drag_CD},
      {"nr_threshold", k.nr_threshold},
      {"diffusion_coeff", k.diffusion_coeff},
  };
  return in;
}

ojson results_json(const ReportRecord& r) {
  ojson j;
  j["P_percent"] = r.P_percent;
  j["E_percent"] = r.E_percent;
  j["log_penetration"] = r.log_penetration;
  j["nD"] = r.nD;
  j["nR"] = r.nR;
  j["nI"] = r.nI;
  j["sum_n"] = r.sum_n;
  j["Re"] = r.Re ? ojson(*r.Re) : ojson(nullptr);
  j["Ku"] = r.Ku;
  j["Pe"] = r.Pe;
  j["Stk"] = r.Stk;
  j["NR"] = r.NR;
  j["Cc"] = r.Cc;
  j["J"] = r.J;
  j["warnings"] = r.warnings;
  return j;
}

ojson mpps_json(const MppsResult& m, double tol) {
  ojson j;
  j["dp_star_um"] = m.dp_star;
  j["p_max_percent"] = 100.0 * m.p_max;
  j["log_p_max"] = m.log_p_max;
  j["bracket_um"] = {m.bracket_lo, m.bracket_hi};
  j["tol_um"] = tol;
  j["boundary"] = std::string(to_string(m.boundary));
  j["interior_maxima"] = m.interior_maxima;
  return j;
}

void line(std::ostringstream& os, const char* label, const std::string& value,
          const char* unit = "") {
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %-10s = %s%s%s\n", label, value.c_str(),
                *unit ? " " : "", unit);
  os << buf;
}

} // namespace

ReportRecord make_record(const Scenario& inputs, const FiltrationResult& result) {
  ReportRecord r;
  r.inputs = inputs;
  r.P_percent = 100.0 * result.penetration_P;
  r.E_percent = 100.0 * result.efficiency_E;
  r.log_penetration = result.log_penetration;
  r.nD = result.factors.eta_diffusion_nD;
  r.nR = result.factors.eta_interception_nR;
  r.nI = result.factors.eta_impaction_nI;
  r.sum_n = result.factors.sum_n;
  r.Re = result.groups.reynolds_Re;
  r.Ku = result.groups.kuwabara_Ku;
  r.Pe = result.groups.peclet_Pe;
  r.Stk = result.groups.stokes_Stk;
  r.NR = result.groups.interception_NR;
  r.Cc = result.groups.slip_Cc;
  r.J = result.groups.impaction_J;
  r.warnings = result.warnings;
  return r;
}

std::string format_roundtrip(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_report(const ReportRecord& r) {
  const Scenario& s = r.inputs;
  std::ostringstream os;
  os << "Filtration efficiency and penetration\n";
  os << "inputs\n";
  line(os, "L", sig6(s.medium.thickness_L), "mm");
  line(os, "d_p", sig6(s.particle.diameter_dp), "um");
  line(os, "d_f", sig6(s.medium.fiber_diameter_df), "um");
  line(os, "alpha", sig6(s.medium.solidity_alpha));
  line(os, "T", sig6(s.fluid.temperature_T), "K");
  line(os, "mu", sig6(s.fluid.viscosity_mu), "kg/(m s)");
  line(os, "u", sig6(s.fluid.velocity_u), "m/s");
  line(os, "rho_p", sig6(s.particle.density_rho_p), "kg/m^3");
  line(os, "rho_f", sig6(s.fluid.fluid_density_rho_f), "kg/m^3");
  if (s.medium.element_diameter_dF) {
    line(os, "d_F", sig6(*s.medium.element_diameter_dF), "m");
  }
  os << "results\n";
  line(os, "E", sig6(r.E_percent), "%");
  line(os, "P", sig6(r.P_percent), "%");
  line(os, "n_D", sig6(r.nD));
  line(os, "n_R", sig6(r.nR));
  line(os, "n_I", sig6(r.nI));
  line(os, "Re", r.Re ? sig6(*r.Re) : std::string("n/a (no element diameter)"));
  os << "dimensionless groups\n";
  line(os, "Ku", sig6(r.Ku));
  line(os, "Pe", sig6(r.Pe));
  line(os, "Stk", sig6(r.Stk));
  line(os, "N_R", sig6(r.NR));
  line(os, "Cc", sig6(r.Cc));
  line(os, "J", sig6(r.J));
  line(os, "sum n", sig6(r.sum_n));
  for (const auto& w : r.warnings) {
    os << "warning: " << w << '\n';
  }
  return os.str();
}

std::string format_json(const ReportRecord& record) {
  ojson j;
  j["inputs"] = inputs_json(record.inputs);
  j["results"] = results_json(record);
  return j.dump(2) + "\n";
}

std::string csv_header() {
  return "parameter_value,P_percent,E_percent,nD,nR,nI,Ku,Pe,NR,Stk,J,Cc,Re,warnings";
}

std::string csv_row(double parameter_value, const ReportRecord& r) {
  std::string row;
  for (double v : {parameter_value, r.P_percent, r.E_percent, r.nD, r.nR, r.nI,
                   r.Ku, r.Pe, r.NR, r.Stk, r.J, r.Cc}) {
    row += format_roundtrip(v);
    row += ',';
  }
  if (r.Re) row += format_roundtrip(*r.Re);
  row += ',';
  row += csv_field(join_warnings(r.warnings));
  return row;
}

std::string format_sweep_csv(const SweepSpec&, const std::vector<ReportRecord>& rows,
                             const std::vector<double>& values) {
  std::string out = csv_header() + "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += csv_row(values[i], rows[i]);
    out += '\n';
  }
  return out;
}

std::string format_sweep_json(const SweepSpec& spec,
                              const std::vector<ReportRecord>& rows,
                              const std::vector<double>& values) {
  ojson j;
  j["parameter"] = std::string(to_string(spec.parameter));
  j["field"] = std::string(field_name(spec.parameter));
  j["scale"] = std::string(to_string(spec.scale));
  j["start"] = spec.start;
  j["stop"] = spec.stop;
  j["points"] = spec.points;
  j["base_inputs"] = rows.empty() ? ojson(nullptr) : inputs_json(rows.front().inputs);
  ojson curve = ojson::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ojson point;
    point["parameter_value"] = values[i];
    point.update(results_json(rows[i]));
    curve.push_back(std::move(point));
  }
  j["curve"] = std::move(curve);
  return j.dump(2) + "\n";
}

std::string format_sweep_report(const SweepSpec& spec,
                                const std::vector<ReportRecord>& rows,
                                const std::vector<double>& values) {
  std::ostringstream os;
  os << "Sweep of " << field_name(spec.parameter) << " (" << to_string(spec.scale)
     << ", " << spec.points << " points)\n";
  char buf[200];
  std::snprintf(buf, sizeof buf, "%13s %13s %13s %13s %13s %13s\n",
                std::string(to_string(spec.parameter)).c_str(), "P [%]", "E [%]",
                "n_D", "n_R", "n_I");
  os << buf;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ReportRecord& r = rows[i];
    std::snprintf(buf, sizeof buf, "%13.6g %13.6g %13.6g %13.6g %13.6g %13.6g\n",
                  values[i], r.P_percent, r.E_percent, r.nD, r.nR, r.nI);
    os << buf;
    for (const auto& w : r.warnings) os << "  warning: " << w << '\n';
  }
  return os.str();
}

std::string format_mpps_report(const MppsResult& m, double tol) {
  std::ostringstream os;
  os << "Most-penetrating particle size\n";
  line(os, "dp*", sig6(m.dp_star), "um");
  line(os, "P_max", sig6(100.0 * m.p_max), "%");
  line(os, "bracket", "[" + sig6(m.bracket_lo) + ", " + sig6(m.bracket_hi) + "]",
       "um");
  line(os, "tol", sig6(tol), "um");
  line(os, "boundary", std::string(to_string(m.boundary)));
  line(os, "maxima", std::to_string(m.interior_maxima) + " interior (coarse scan)");
  return os.str();
}

std::string format_mpps_json(const MppsResult& m, double tol) {
  return mpps_json(m, tol).dump(2) + "\n";
}

std::string format_mpps_csv(const MppsResult& m, double tol) {
  std::string out =
      "dp_star_um,p_max_percent,bracket_lo_um,bracket_hi_um,tol_um,boundary,"
      "interior_maxima\n";
  out += format_roundtrip(m.dp_star) + ',' + format_roundtrip(100.0 * m.p_max) +
         ',' + format_roundtrip(m.bracket_lo) + ',' +
         format_roundtrip(m.bracket_hi) + ',' + format_roundtrip(tol) + ',' +
         std::string(to_string(m.boundary)) + ',' +
         std::to_string(m.interior_maxima) + '\n';
  return out;
}

} // namespace fibrefilter
