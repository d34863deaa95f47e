#ifndef FIBREFILTER_TYPES_HPP
#define FIBREFILTER_TYPES_HPP

/**
 * @file types.hpp
 * @brief Inputs and outputs of the fibrous-filter penetration model.
 *
 * Units follow the conventional filtration-practice inputs and are converted
 * inside the model, never by the caller:
 *
 *   thickness L ............ mm
 *   fiber / particle size .. um
 *   element diameter dF .... m
 *   velocity u ............. m/s
 *   viscosity mu ........... kg/(m s)
 *   temperature T .......... K
 *   densities .............. kg/m^3
 */

#include <optional>
#include <string>
#include <vector>

namespace fibrefilter {

struct FilterMedium {
  double thickness_L = 0.0;        ///< mm, >= 0
  double fiber_diameter_df = 0.0;  ///< um, > 0
  double solidity_alpha = 0.0;     ///< fiber volume fraction, in (0, 1)
  std::optional<double> element_diameter_dF; ///< m, only used for Reynolds
};

/// Carrier fluid and face velocity.
struct FluidState {
  double viscosity_mu = 0.0;        ///< kg/(m s)
  double temperature_T = 0.0;       ///< K
  double velocity_u = 0.0;          ///< m/s
  double fluid_density_rho_f = 0.0; ///< kg/m^3, Reynolds only
};

struct Particle {
  double diameter_dp = 0.0;   ///< um
  double density_rho_p = 0.0; ///< kg/m^3
};

/**
 * @brief Empirical constants of the model.
 *
 * The defaults reproduce the published model, including its Boltzmann constant
 * of 1.3708e-23 J/K (CODATA: 1.380649e-23).
 */
struct ModelConstants {
  double boltzmann_k = 1.3708e-23; ///< J/K
  double slip_A1 = 2.492;
  double slip_A2 = 0.84;
  double slip_A3 = 6.49;      ///< 1/um
  double slip_lambda = 0.067; ///< um
  double drag_CD = 0.44;
  double nr_threshold = 0.4;  ///< N_R at and above which J = 2
  double diffusion_coeff = 1.61;
};

struct DimensionlessGroups {
  double kuwabara_Ku = 0.0;
  double peclet_Pe = 0.0;
  double stokes_Stk = 0.0;
  double interception_NR = 0.0;
  std::optional<double> reynolds_Re;
  double slip_Cc = 0.0;
  double impaction_J = 0.0;
};

/// Single-fiber capture factors. `sum_n` is always the plain sum of the three.
struct MechanismFactors {
  double eta_diffusion_nD = 0.0;
  double eta_interception_nR = 0.0;
  double eta_impaction_nI = 0.0;
  double sum_n = 0.0;
};

struct FiltrationResult {
  double penetration_P = 1.0; ///< fraction in [0, 1]
  double efficiency_E = 0.0;  ///< fraction, 1 - P
  /// ln P. Finite even when P underflows to zero in double precision.
  double log_penetration = 0.0;
  DimensionlessGroups groups;
  MechanismFactors factors;
  std::vector<std::string> warnings;
};

/// One fully specified operating point.
struct Scenario {
  FilterMedium medium;
  FluidState fluid;
  Particle particle;
  ModelConstants constants;
};

// Invariant checks. Each throws DomainError naming the first offending field.
void validate(const FilterMedium& medium);
void validate(const FluidState& fluid);
void validate(const Particle& particle);
void validate(const ModelConstants& constants);
void validate(const Scenario& scenario);

} // namespace fibrefilter

#endif
