#include "fibrefilter/sweep.hpp"

#include "validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace fibrefilter {

namespace {

constexpr std::array<std::pair<SweepParameter, std::string_view>, 8> kNames{{
    {SweepParameter::dp, "dp"},
    {SweepParameter::L, "L"},
    {SweepParameter::df, "df"},
    {SweepParameter::alpha, "alpha"},
    {SweepParameter::u, "u"},
    {SweepParameter::T, "T"},
    {SweepParameter::mu, "mu"},
    {SweepParameter::rho_p, "rho_p"},
}};

double log_p_at(const Scenario& base, double dp) {
  return evaluate(with_parameter(base, SweepParameter::dp, dp)).log_penetration;
}

// Smallest dp whose interception ratio reaches the constant-J branch.
double branch_switch(const Scenario& base) {
  const double df = base.medium.fiber_diameter_df;
  const double threshold = base.constants.nr_threshold;
  double x = threshold * df;
  while (x / df >= threshold) x = std::nextafter(x, 0.0);
  while (x / df < threshold) x = std::nextafter(x, std::numeric_limits<double>::infinity());
  return x;
}

struct Piece {
  std::vector<double> xs;
  std::vector<double> fs;
};

struct GoldenOutcome {
  double lo;
  double hi;
  double x;
  double value;
};

// Maximizes f on [lo, hi] until the bracket is at most `tol` wide.
template <typename F>
GoldenOutcome golden_maximize(F&& f, double lo, double hi, double tol,
                              std::size_t max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    if (b - a <= tol) break;
    if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * b) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  if (fc >= fd) return {a, b, c, fc};
  return {a, b, d, fd};
}

} // namespace

std::string_view to_string(SweepParameter parameter) {
  for (const auto& [p, name] : kNames) {
    if (p == parameter) return name;
  }
  return "?";
}

std::string_view to_string(SweepScale scale) {
  return scale == SweepScale::linear ? "linear" : "logarithmic";
}

std::string_view to_string(MppsBoundary boundary) {
  switch (boundary) {
  case MppsBoundary::lower: return "lower";
  case MppsBoundary::upper: return "upper";
  default: return "none";
  }
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
  for (const auto& [p, n] : kNames) {
    if (n == name) return p;
  }
  return std::nullopt;
}

std::string_view field_name(SweepParameter parameter) {
  switch (parameter) {
  case SweepParameter::dp: return "diameter_dp";
  case SweepParameter::L: return "thickness_L";
  case SweepParameter::df: return "fiber_diameter_df";
  case SweepParameter::alpha: return "solidity_alpha";
  case SweepParameter::u: return "velocity_u";
  case SweepParameter::T: return "temperature_T";
  case SweepParameter::mu: return "viscosity_mu";
  case SweepParameter::rho_p: return "density_rho_p";
  }
  return "?";
}

void validate(const SweepSpec& spec) {
  if (!std::isfinite(spec.start)) {
    throw DomainError("start", "sweep start must be finite");
  }
  if (!std::isfinite(spec.stop) || !(spec.start < spec.stop)) {
    throw DomainError("stop", "sweep requires start < stop (got start = " +
                                  detail::format_number(spec.start) +
                                  ", stop = " +
                                  detail::format_number(spec.stop) + ")");
  }
  if (spec.points < 2) {
    throw DomainError("points", "sweep requires at least 2 points (got " +
                                    std::to_string(spec.points) + ")");
  }
  if (spec.scale == SweepScale::logarithmic && !(spec.start > 0.0)) {
    throw DomainError("start", "logarithmic sweep requires start > 0 (got " +
                                   detail::format_number(spec.start) + ")");
  }
}

std::vector<double> grid(const SweepSpec& spec) {
  validate(spec);
  const std::size_t n = spec.points;
  const double last = static_cast<double>(n - 1);
  std::vector<double> values(n);
  if (spec.scale == SweepScale::linear) {
    const double step = (spec.stop - spec.start) / last;
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = spec.start + static_cast<double>(i) * step;
    }
  } else {
    const double lo = std::log(spec.start);
    const double step = (std::log(spec.stop) - lo) / last;
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = std::exp(lo + static_cast<double>(i) * step);
    }
  }
  values.front() = spec.start;
  values.back() = spec.stop;
  return values;
}

Scenario with_parameter(Scenario base, SweepParameter parameter, double value) {
  switch (parameter) {
  case SweepParameter::dp: base.particle.diameter_dp = value; break;
  case SweepParameter::L: base.medium.thickness_L = value; break;
  case SweepParameter::df: base.medium.fiber_diameter_df = value; break;
  case SweepParameter::alpha: base.medium.solidity_alpha = value; break;
  case SweepParameter::u: base.fluid.velocity_u = value; break;
  case SweepParameter::T: base.fluid.temperature_T = value; break;
  case SweepParameter::mu: base.fluid.viscosity_mu = value; break;
  case SweepParameter::rho_p: base.particle.density_rho_p = value; break;
  }
  return base;
}

std::vector<CurvePoint> sweep(const Scenario& base, const SweepSpec& spec) {
  const std::vector<double> values = grid(spec);
  std::vector<CurvePoint> curve;
  curve.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    try {
      curve.push_back(
          {values[i], evaluate(with_parameter(base, spec.parameter, values[i]))});
    } catch (const DomainError& e) {
      throw GridPointError(i, values[i], e);
    }
  }
  return curve;
}

MppsResult find_mpps(const Scenario& base, double dp_lo, double dp_hi,
                     double tol, const MppsOptions& options) {
  detail::require_positive(dp_lo, "dp_lo");
  if (!std::isfinite(dp_hi) || !(dp_lo < dp_hi)) {
    throw DomainError("dp_hi", "MPPS bracket requires dp_lo < dp_hi (got [" +
                                   detail::format_number(dp_lo) + ", " +
                                   detail::format_number(dp_hi) + "])");
  }
  detail::require_positive(tol, "tol");
  validate(base);

  // ln P jumps where J switches branch, so each side is scanned separately.
  std::vector<std::pair<double, double>> pieces;
  const double up = branch_switch(base);
  const double below = std::nextafter(up, 0.0);
  if (dp_lo <= below && up <= dp_hi) {
    pieces.emplace_back(dp_lo, below);
    pieces.emplace_back(up, dp_hi);
  } else {
    pieces.emplace_back(dp_lo, dp_hi);
  }

  const std::size_t points = std::max<std::size_t>(options.coarse_points, 64);
  std::vector<Piece> scans;
  for (const auto& [a, b] : pieces) {
    Piece piece;
    piece.xs = a == b ? std::vector<double>{a}
                      : grid({SweepParameter::dp, a, b, points, SweepScale::logarithmic});
    for (double x : piece.xs) piece.fs.push_back(log_p_at(base, x));
    scans.push_back(std::move(piece));
  }

  MppsResult out;
  std::vector<double> all;
  for (const auto& piece : scans) all.insert(all.end(), piece.fs.begin(), piece.fs.end());
  for (std::size_t i = 1; i + 1 < all.size(); ++i) {
    if (all[i] > all[i - 1] && all[i] >= all[i + 1]) ++out.interior_maxima;
  }

  std::size_t best_piece = 0;
  std::size_t best = 0;
  for (std::size_t k = 0; k < scans.size(); ++k) {
    for (std::size_t i = 0; i < scans[k].fs.size(); ++i) {
      if (scans[k].fs[i] > scans[best_piece].fs[best]) {
        best_piece = k;
        best = i;
      }
    }
  }

  const auto& xs = scans[best_piece].xs;
  const auto& fs = scans[best_piece].fs;
  const std::size_t n = xs.size();
  out.dp_star = xs[best];
  out.log_p_max = fs[best];
  out.bracket_lo = xs[best];
  out.bracket_hi = xs[best];

  if (n > 1) {
    // Global grid maximum seeds the refinement; with a single interior
    // maximum this is the unimodal bracket.
    const double lo = xs[best == 0 ? 0 : best - 1];
    const double hi = xs[best + 1 == n ? n - 1 : best + 1];
    const auto f = [&](double dp) { return log_p_at(base, dp); };
    const GoldenOutcome g = golden_maximize(f, lo, hi, tol, options.max_iterations);
    const bool at_end = best == 0 || best + 1 == n;
    if (!at_end || g.value > fs[best]) {
      out.dp_star = g.x;
      out.log_p_max = g.value;
      out.bracket_lo = g.lo;
      out.bracket_hi = g.hi;
    } else if (best == 0) {
      out.bracket_hi = g.hi;
    } else {
      out.bracket_lo = g.lo;
    }
  }

  if (out.dp_star == dp_lo) out.boundary = MppsBoundary::lower;
  if (out.dp_star == dp_hi) out.boundary = MppsBoundary::upper;
  out.p_max = std::exp(out.log_p_max);
  return out;
}

} // namespace fibrefilter
