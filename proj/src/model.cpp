#include "fibrefilter/model.hpp"

#include "validation.hpp"

#include <cmath>
#include <numbers>

namespace fibrefilter {

namespace {

using detail::format_number;
using detail::require_nonnegative;
using detail::require_open_unit;
using detail::require_positive;

// Micrometer-system scale factors.
constexpr double kUm2ToM2 = 1e-12;
constexpr double kMmToUm = 1e3;
constexpr double kDensityToKgPerUm3 = 1e-18; // kg/m^3 -> kg/um^3
constexpr double kVelocityToUmPerS = 1e6;    // m/s -> um/s
constexpr double kViscosityToUm = 1e-6;      // kg/(m s) -> kg/(um s)

} // namespace

double kuwabara(double alpha) {
  require_open_unit(alpha, "solidity_alpha");
  return (4.0 * alpha - alpha * alpha - 3.0) / 4.0 - std::log(alpha) / 2.0;
}

double slip_correction(double dp, const ModelConstants& constants) {
  require_positive(dp, "diameter_dp");
  validate(constants);
  return 1.0 + (constants.slip_lambda / dp) *
                   (constants.slip_A1 +
                    constants.slip_A2 * std::exp(-constants.slip_A3 * dp));
}

double peclet(const FluidState& fluid, double df, double dp,
              const ModelConstants& constants) {
  require_positive(fluid.viscosity_mu, "viscosity_mu");
  require_positive(fluid.temperature_T, "temperature_T");
  require_positive(fluid.velocity_u, "velocity_u");
  require_positive(df, "fiber_diameter_df");
  const double cc = slip_correction(dp, constants);
  return 3.0 * kUm2ToM2 * std::numbers::pi * fluid.viscosity_mu *
         fluid.velocity_u * df * dp /
         (constants.boltzmann_k * fluid.temperature_T * cc);
}

double eta_diffusion(double alpha, double ku, double pe,
                     const ModelConstants& constants) {
  require_open_unit(alpha, "solidity_alpha");
  require_positive(ku, "kuwabara_Ku");
  require_positive(pe, "peclet_Pe");
  require_positive(constants.diffusion_coeff, "diffusion_coeff");
  return constants.diffusion_coeff * std::cbrt((1.0 - alpha) / ku) *
         std::pow(pe, -2.0 / 3.0);
}

double interception_ratio(double dp, double df) {
  require_positive(dp, "diameter_dp");
  require_positive(df, "fiber_diameter_df");
  return dp / df;
}

double eta_interception(double alpha, double ku, double nr) {
  require_open_unit(alpha, "solidity_alpha");
  require_positive(ku, "kuwabara_Ku");
  require_nonnegative(nr, "interception_NR");
  return (1.0 - alpha) * nr * nr / (ku * (1.0 + nr));
}

double stokes(const Particle& particle, const FluidState& fluid, double df,
              const ModelConstants& constants) {
  require_positive(particle.diameter_dp, "diameter_dp");
  require_positive(particle.density_rho_p, "density_rho_p");
  require_positive(fluid.viscosity_mu, "viscosity_mu");
  require_positive(fluid.velocity_u, "velocity_u");
  require_positive(df, "fiber_diameter_df");
  require_positive(constants.drag_CD, "drag_CD");
  const double rho = particle.density_rho_p * kDensityToKgPerUm3;
  const double u = fluid.velocity_u * kVelocityToUmPerS;
  const double mu = fluid.viscosity_mu * kViscosityToUm;
  const double dp = particle.diameter_dp;
  return rho * dp * dp * u * constants.drag_CD / (18.0 * mu * df);
}

double inertial_j(double nr, double alpha, const ModelConstants& constants) {
  require_nonnegative(nr, "interception_NR");
  require_open_unit(alpha, "solidity_alpha");
  require_positive(constants.nr_threshold, "nr_threshold");
  if (nr >= constants.nr_threshold) {
    return 2.0;
  }
  return (29.6 - 28.0 * std::pow(alpha, 0.62)) * nr * nr -
         27.5 * std::pow(nr, 2.8);
}

double eta_impaction(double stk, double j, double ku) {
  require_nonnegative(stk, "stokes_Stk");
  require_positive(ku, "kuwabara_Ku");
  if (!std::isfinite(j)) {
    throw DomainError("impaction_J", "impaction_J must be finite");
  }
  return stk * j / (2.0 * ku * ku);
}

double log_penetration(const FilterMedium& medium, double sum_n) {
  validate(medium);
  require_nonnegative(sum_n, "sum_n");
  const double thickness_um = medium.thickness_L * kMmToUm;
  return -4.0 * thickness_um * medium.solidity_alpha * sum_n /
         (std::numbers::pi * medium.fiber_diameter_df);
}

double penetration(const FilterMedium& medium, double sum_n) {
  return std::exp(log_penetration(medium, sum_n));
}

double efficiency(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("penetration_P",
                      "penetration_P must lie in [0, 1] (got " +
                          format_number(p) + ")");
  }
  return 1.0 - p;
}

double reynolds(const FluidState& fluid, double dF) {
  require_positive(fluid.velocity_u, "velocity_u");
  require_positive(fluid.fluid_density_rho_f, "fluid_density_rho_f");
  require_positive(fluid.viscosity_mu, "viscosity_mu");
  require_positive(dF, "element_diameter_dF");
  return fluid.velocity_u * dF * fluid.fluid_density_rho_f / fluid.viscosity_mu;
}

double equivalent_diameter(double area, double perimeter) {
  require_positive(area, "element_area");
  require_positive(perimeter, "element_perimeter");
  return 4.0 * area / perimeter;
}

FiltrationResult evaluate(const FilterMedium& medium, const FluidState& fluid,
                          const Particle& particle,
                          const ModelConstants& constants) {
  validate(medium);
  validate(fluid);
  validate(particle);
  validate(constants);

  const double alpha = medium.solidity_alpha;
  const double df = medium.fiber_diameter_df;
  const double dp = particle.diameter_dp;

  FiltrationResult result;
  DimensionlessGroups& g = result.groups;
  MechanismFactors& f = result.factors;

  g.kuwabara_Ku = kuwabara(alpha);
  g.slip_Cc = slip_correction(dp, constants);
  g.peclet_Pe = peclet(fluid, df, dp, constants);
  f.eta_diffusion_nD = eta_diffusion(alpha, g.kuwabara_Ku, g.peclet_Pe, constants);

  g.interception_NR = interception_ratio(dp, df);
  f.eta_interception_nR = eta_interception(alpha, g.kuwabara_Ku, g.interception_NR);

  g.stokes_Stk = stokes(particle, fluid, df, constants);
  g.impaction_J = inertial_j(g.interception_NR, alpha, constants);
  f.eta_impaction_nI = eta_impaction(g.stokes_Stk, g.impaction_J, g.kuwabara_Ku);
  if (g.impaction_J < 0.0) {
    result.warnings.push_back(
        "negative impaction factor J = " + format_number(g.impaction_J) +
        " at N_R = " + format_number(g.interception_NR) +
        " and solidity_alpha = " + format_number(alpha) +
        "; n_I = " + format_number(f.eta_impaction_nI) +
        " raises penetration");
  }

  f.sum_n = f.eta_diffusion_nD + f.eta_interception_nR + f.eta_impaction_nI;
  if (!(f.sum_n >= 0.0)) {
    throw DomainError("sum_n",
                      "sum_n = " + format_number(f.sum_n) +
                          " is negative (impaction J = " +
                          format_number(g.impaction_J) +
                          "); penetration would exceed 1");
  }

  if (medium.element_diameter_dF) {
    g.reynolds_Re = reynolds(fluid, *medium.element_diameter_dF);
  }

  result.log_penetration = log_penetration(medium, f.sum_n);
  result.penetration_P = std::exp(result.log_penetration);
  result.efficiency_E = -std::expm1(result.log_penetration);
  return result;
}

FiltrationResult evaluate(const Scenario& scenario) {
  return evaluate(scenario.medium, scenario.fluid, scenario.particle,
                  scenario.constants);
}

} // namespace fibrefilter
