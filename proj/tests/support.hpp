#ifndef FIBREFILTER_TESTS_SUPPORT_HPP
#define FIBREFILTER_TESTS_SUPPORT_HPP

#include "fibrefilter/model.hpp"
#include "oracle/reference_model.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace testing_support {

using fibrefilter::Scenario;

/// L = 1 mm, d_f = 2 um, alpha = 0.05, d_p = 0.1 um, rho = 1000 kg/m^3,
/// u = 0.1 m/s, mu = 1.81e-5 kg/(m s), T = 293 K, default constants.
inline Scenario worked_scenario() {
  Scenario s;
  s.medium.thickness_L = 1.0;
  s.medium.fiber_diameter_df = 2.0;
  s.medium.solidity_alpha = 0.05;
  s.fluid.viscosity_mu = 1.81e-5;
  s.fluid.temperature_T = 293.0;
  s.fluid.velocity_u = 0.1;
  s.fluid.fluid_density_rho_f = 1000.0;
  s.particle.diameter_dp = 0.1;
  s.particle.density_rho_p = 1000.0;
  return s;
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return std::exp(d(rng));
}

/// Random valid scenario: log-uniform d_p in [0.01, 10] um, d_f in
/// [0.5, 50] um, alpha in [0.01, 0.5], u in [0.01, 5] m/s, L in [0.1, 10] mm,
/// with the carrier gas and particle density also varied.
inline reference::Inputs oracle_inputs(const Scenario& s) {
  reference::Inputs in{};
  in.L_mm = s.medium.thickness_L;
  in.df_um = s.medium.fiber_diameter_df;
  in.alpha = s.medium.solidity_alpha;
  in.dp_um = s.particle.diameter_dp;
  in.rho_p = s.particle.density_rho_p;
  in.u = s.fluid.velocity_u;
  in.mu = s.fluid.viscosity_mu;
  in.T = s.fluid.temperature_T;
  in.kB = s.constants.boltzmann_k;
  in.cd = s.constants.drag_CD;
  return in;
}

inline Scenario random_scenario(std::mt19937_64& rng) {
  Scenario s;
  s.particle.diameter_dp = log_uniform(rng, 0.01, 10.0);
  s.medium.fiber_diameter_df = log_uniform(rng, 0.5, 50.0);
  s.medium.solidity_alpha = log_uniform(rng, 0.01, 0.5);
  s.fluid.velocity_u = log_uniform(rng, 0.01, 5.0);
  s.medium.thickness_L = log_uniform(rng, 0.1, 10.0);
  s.fluid.viscosity_mu = log_uniform(rng, 1.0e-5, 3.0e-5);
  s.fluid.temperature_T = std::uniform_real_distribution<double>(250.0, 400.0)(rng);
  s.fluid.fluid_density_rho_f = log_uniform(rng, 0.8, 1.4);
  s.particle.density_rho_p = log_uniform(rng, 500.0, 3000.0);
  return s;
}


/// Draws until the exact mechanism sum is non-negative. Scenarios with a
/// negative sum lie outside the model's domain and are rejected by `evaluate`.
inline Scenario random_valid_scenario(std::mt19937_64& rng) {
  for (;;) {
    Scenario s = random_scenario(rng);
    if (reference::evaluate(oracle_inputs(s)).sum >= 0) return s;
  }
}

/// Relative error of `actual` against `expected`. Values whose difference is
/// below the smallest subnormal spacing count as equal: no double can do
/// better there.
inline double rel_error(double actual, double expected) {
  const double diff = std::abs(actual - expected);
  if (diff <= 2.0 * std::numeric_limits<double>::denorm_min()) return 0.0;
  if (expected == 0.0) return std::numeric_limits<double>::infinity();
  return diff / std::abs(expected);
}

inline double rel_error(double actual, const reference::Real& expected) {
  return rel_error(actual, static_cast<double>(expected));
}

} // namespace testing_support

#endif
