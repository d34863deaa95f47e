#ifndef FIBREFILTER_SWEEP_HPP
#define FIBREFILTER_SWEEP_HPP

#include "fibrefilter/model.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace fibrefilter {

/// Scenario inputs that a sweep may vary. Units follow the model inputs.
enum class SweepParameter { dp, L, df, alpha, u, T, mu, rho_p };

enum class SweepScale { linear, logarithmic };

struct SweepSpec {
  SweepParameter parameter = SweepParameter::dp;
  double start = 0.0;
  double stop = 0.0;
  std::size_t points = 2;
  SweepScale scale = SweepScale::linear;
};

struct CurvePoint {
  double parameter_value = 0.0;
  FiltrationResult result;
};

enum class MppsBoundary { none, lower, upper };

struct MppsResult {
  double dp_star = 0.0; ///< um
  double p_max = 0.0;   ///< penetration at dp_star
  double log_p_max = 0.0;
  double bracket_lo = 0.0; ///< um, final search interval
  double bracket_hi = 0.0;
  /// Set when the maximum sits on an end of the searched interval.
  MppsBoundary boundary = MppsBoundary::none;
  /// Interior local maxima found by the coarse scan; 1 for a unimodal curve.
  std::size_t interior_maxima = 0;
};

std::string_view to_string(SweepParameter parameter);
std::string_view to_string(SweepScale scale);
std::string_view to_string(MppsBoundary boundary);
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);

/// Name of the model field a sweep parameter maps to (e.g. "solidity_alpha").
std::string_view field_name(SweepParameter parameter);

void validate(const SweepSpec& spec);

/// Grid values in ascending order. Both endpoints are reproduced exactly.
std::vector<double> grid(const SweepSpec& spec);

/// Copy of `base` with one input replaced.
Scenario with_parameter(Scenario base, SweepParameter parameter, double value);

/**
 * @brief Evaluate `base` at every grid point of `spec`.
 *
 * Point i is exactly evaluate(with_parameter(base, spec.parameter, grid[i])).
 * The first invalid grid point aborts with GridPointError carrying its index.
 */
std::vector<CurvePoint> sweep(const Scenario& base, const SweepSpec& spec);

struct MppsOptions {
  std::size_t coarse_points = 64; ///< per scanned piece, at least 64
  std::size_t max_iterations = 500;
};

/**
 * @brief Most-penetrating particle size on [dp_lo, dp_hi].
 *
 * A log-spaced coarse scan locates the best grid point; golden-section search
 * then maximizes ln P over the neighbouring cells until the bracket is no
 * wider than `tol` (um). Ranking uses ln P so that curves whose penetration
 * underflows still have a well-defined maximizer.
 *
 * The bracket is split where N_R reaches the J branch threshold and each
 * side is scanned on its own grid. The left piece ends at the largest dp
 * below the threshold, so a supremum approached from the left is reported
 * at that point.
 */
MppsResult find_mpps(const Scenario& base, double dp_lo, double dp_hi,
                     double tol, const MppsOptions& options = {});

} // namespace fibrefilter

#endif
