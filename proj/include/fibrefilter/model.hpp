#ifndef FIBREFILTER_MODEL_HPP
#define FIBREFILTER_MODEL_HPP

/**
 * @file model.hpp
 * @brief Closed-form penetration model of a fibrous filter medium.
 *
 * Penetration through a medium of thickness L, fiber diameter d_f and
 * solidity alpha is
 *
 *   P = exp( -4 L alpha (n_D + n_R + n_I) / (pi d_f) )
 *
 * where n_D, n_R and n_I are the single-fiber capture factors for diffusion,
 * interception and inertial impaction. All functions are pure and reject
 * out-of-domain arguments with DomainError.
 */

#include "fibrefilter/errors.hpp"
#include "fibrefilter/types.hpp"

namespace fibrefilter {

/// Kuwabara hydrodynamic factor Ku = (4a - a^2 - 3)/4 - ln(a)/2, alpha in (0, 1).
double kuwabara(double alpha);

/// Slip correction 1 + (lambda/d_p)(A1 + A2 exp(-A3 d_p)), d_p in um.
double slip_correction(double dp, const ModelConstants& constants = {});

/**
 * @brief Peclet number 3 pi mu u d_f d_p / (k T Cc).
 *
 * d_f and d_p are in um; the 1e-12 factor brings their product to m^2.
 * Reads viscosity, velocity and temperature from `fluid`.
 */
double peclet(const FluidState& fluid, double df, double dp,
              const ModelConstants& constants = {});

/// Diffusion factor n_D = c ((1 - alpha)/Ku)^(1/3) Pe^(-2/3).
double eta_diffusion(double alpha, double ku, double pe,
                     const ModelConstants& constants = {});

/// Interception parameter N_R = d_p / d_f.
double interception_ratio(double dp, double df);

/// Interception factor n_R = (1 - alpha) N_R^2 / (Ku (1 + N_R)).
double eta_interception(double alpha, double ku, double nr);

/**
 * @brief Stokes number rho_p d_p^2 u C_D / (18 mu d_f).
 *
 * Lengths in um; density, velocity and viscosity are rescaled to the
 * micrometer system (kg/um^3, um/s, kg/(um s)) so the result is dimensionless.
 */
double stokes(const Particle& particle, const FluidState& fluid, double df,
              const ModelConstants& constants = {});

/**
 * @brief Impaction multiplier J.
 *
 * (29.6 - 28 alpha^0.62) N_R^2 - 27.5 N_R^2.8 below the threshold, 2 at or
 * above it. The polynomial branch goes negative for large N_R and alpha; it
 * is returned unclamped.
 */
double inertial_j(double nr, double alpha, const ModelConstants& constants = {});

/// Impaction factor n_I = Stk J / (2 Ku^2). Carries the sign of J.
double eta_impaction(double stk, double j, double ku);

/// ln P = -4 L alpha sum_n / (pi d_f), L converted from mm to um.
double log_penetration(const FilterMedium& medium, double sum_n);

/// P = exp(log_penetration(medium, sum_n)), in (0, 1] up to underflow.
double penetration(const FilterMedium& medium, double sum_n);

/// E = 1 - P for P in [0, 1].
double efficiency(double p);

/// Pipe Reynolds number u dF rho_f / mu, all SI.
double reynolds(const FluidState& fluid, double dF);

/// Equivalent diameter 4 A / perimeter, in the unit of the inputs.
double equivalent_diameter(double area, double perimeter);

/**
 * @brief Full model chain for one operating point.
 *
 * Ku -> Cc -> Pe -> n_D, N_R -> n_R, Stk -> J -> n_I, sum -> P -> E.
 * Reynolds is only populated when the medium carries an element diameter.
 * A negative J adds a warning. A negative mechanism sum (possible only
 * through a strongly negative J) is rejected as DomainError on "sum_n".
 *
 * E is computed as -expm1(ln P), which equals 1 - P to within one rounding
 * and keeps full relative precision when P is close to one.
 */
FiltrationResult evaluate(const FilterMedium& medium, const FluidState& fluid,
                          const Particle& particle,
                          const ModelConstants& constants = {});

FiltrationResult evaluate(const Scenario& scenario);

} // namespace fibrefilter

#endif
