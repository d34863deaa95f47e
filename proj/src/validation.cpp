#include "fibrefilter/errors.hpp"
#include "fibrefilter/types.hpp"
#include "validation.hpp"

#include <cmath>
#include <cstdio>

namespace fibrefilter {

GridPointError::GridPointError(std::size_t index, double value,
                               const DomainError& cause)
    : DomainError(cause.symbol(),
                  "grid point " + std::to_string(index) + " (value " +
                      detail::format_number(value) + "): " + cause.what()),
      index_(index), value_(value) {}

namespace detail {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

void require_positive(double value, const char* symbol) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(symbol, std::string(symbol) + " must be > 0 (got " +
                                  format_number(value) + ")");
  }
}

void require_nonnegative(double value, const char* symbol) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError(symbol, std::string(symbol) + " must be >= 0 (got " +
                                  format_number(value) + ")");
  }
}

void require_open_unit(double value, const char* symbol) {
  if (!(value > 0.0 && value < 1.0)) {
    throw DomainError(symbol, std::string(symbol) +
                                  " must satisfy 0 < " + symbol +
                                  " < 1 (got " + format_number(value) + ")");
  }
}

} // namespace detail

void validate(const FilterMedium& medium) {
  detail::require_nonnegative(medium.thickness_L, "thickness_L");
  detail::require_positive(medium.fiber_diameter_df, "fiber_diameter_df");
  detail::require_open_unit(medium.solidity_alpha, "solidity_alpha");
  if (medium.element_diameter_dF) {
    detail::require_positive(*medium.element_diameter_dF, "element_diameter_dF");
  }
}

void validate(const FluidState& fluid) {
  detail::require_positive(fluid.viscosity_mu, "viscosity_mu");
  detail::require_positive(fluid.temperature_T, "temperature_T");
  detail::require_positive(fluid.velocity_u, "velocity_u");
  detail::require_positive(fluid.fluid_density_rho_f, "fluid_density_rho_f");
}

void validate(const Particle& particle) {
  detail::require_positive(particle.diameter_dp, "diameter_dp");
  detail::require_positive(particle.density_rho_p, "density_rho_p");
}

void validate(const ModelConstants& constants) {
  detail::require_positive(constants.boltzmann_k, "boltzmann_k");
  detail::require_positive(constants.slip_A1, "slip_A1");
  detail::require_positive(constants.slip_A2, "slip_A2");
  detail::require_positive(constants.slip_A3, "slip_A3");
  detail::require_positive(constants.slip_lambda, "slip_lambda");
  detail::require_positive(constants.drag_CD, "drag_CD");
  detail::require_positive(constants.nr_threshold, "nr_threshold");
  detail::require_positive(constants.diffusion_coeff, "diffusion_coeff");
}

void validate(const Scenario& scenario) {
  validate(scenario.medium);
  validate(scenario.fluid);
  validate(scenario.particle);
  validate(scenario.constants);
}

} // namespace fibrefilter
