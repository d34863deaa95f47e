#include "fibrefilter/model.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

namespace fibrefilter {
namespace {

using testing_support::random_scenario;
using testing_support::random_valid_scenario;
using testing_support::rel_error;

constexpr int kSamples = 2000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

TEST(ModelProperties, PenetrationEfficiencyIdentity) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < kSamples; ++i) {
    const FiltrationResult r = evaluate(random_valid_scenario(rng));
    EXPECT_GE(r.penetration_P, 0.0);
    EXPECT_LE(r.penetration_P, 1.0);
    EXPECT_GE(r.efficiency_E, 0.0);
    EXPECT_LE(r.efficiency_E, 1.0);
    EXPECT_LE(std::abs(r.efficiency_E + r.penetration_P - 1.0), 2.0 * kEps);
    EXPECT_EQ(r.penetration_P, std::exp(r.log_penetration));
    // Strict bounds wherever the double format can resolve them.
    if (r.log_penetration > -700.0) EXPECT_GT(r.penetration_P, 0.0);
    if (r.penetration_P >= kEps) EXPECT_LT(r.efficiency_E, 1.0);
  }
}

TEST(ModelProperties, PenetrationDecreasesWithThickness) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < kSamples; ++i) {
    Scenario s = random_valid_scenario(rng);
    double l1 = testing_support::log_uniform(rng, 0.1, 10.0);
    double l2 = testing_support::log_uniform(rng, 0.1, 10.0);
    if (l1 == l2) continue;
    if (l2 < l1) std::swap(l1, l2);
    s.medium.thickness_L = l1;
    const FiltrationResult r1 = evaluate(s);
    s.medium.thickness_L = l2;
    const FiltrationResult r2 = evaluate(s);
    if (r1.factors.sum_n <= 1e-12) continue;
    EXPECT_LT(r2.log_penetration, r1.log_penetration);
    if (r1.penetration_P > 0.0) {
      EXPECT_LT(r2.penetration_P, r1.penetration_P);
    }
  }
}

TEST(ModelProperties, DoublingThicknessSquaresPenetration) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < kSamples; ++i) {
    Scenario s = random_valid_scenario(rng);
    const FiltrationResult r1 = evaluate(s);
    s.medium.thickness_L *= 2.0;
    const FiltrationResult r2 = evaluate(s);
    EXPECT_LE(rel_error(r2.log_penetration, 2.0 * r1.log_penetration), 1e-12);
    // P^2 must stay a normal double for a relative comparison.
    if (r1.log_penetration > -300.0) {
      EXPECT_LE(rel_error(r2.penetration_P, r1.penetration_P * r1.penetration_P), 1e-12);
    }
  }
}

TEST(ModelProperties, KuwabaraPositiveAndDecreasing) {
  double previous = std::numeric_limits<double>::infinity();
  for (int i = 1; i < 1000; ++i) {
    const double alpha = i / 1000.0;
    const double ku = kuwabara(alpha);
    EXPECT_GT(ku, 0.0) << "alpha = " << alpha;
    EXPECT_LT(ku, previous) << "alpha = " << alpha;
    previous = ku;
  }
}

TEST(ModelProperties, SlipCorrectionAboveOneAndDecreasing) {
  double previous = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 1000; ++i) {
    const double dp = std::pow(10.0, -3.0 + 7.0 * i / 1000.0);
    const double cc = slip_correction(dp);
    EXPECT_GT(cc, 1.0) << "dp = " << dp;
    EXPECT_LT(cc, previous) << "dp = " << dp;
    previous = cc;
  }
}

TEST(ModelProperties, DiffusionTimesPecletPowerIsConstant) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> alpha_dist(0.01, 0.9);
  for (int i = 0; i < 200; ++i) {
    const double alpha = alpha_dist(rng);
    const double ku = kuwabara(alpha);
    const double reference = eta_diffusion(alpha, ku, 1.0);
    for (double pe : {3.0, 30.0, 300.0, 3000.0}) {
      const double scaled = eta_diffusion(alpha, ku, pe) * std::pow(pe, 2.0 / 3.0);
      EXPECT_LE(rel_error(scaled, reference), 1e-12) << "Pe = " << pe;
    }
  }
}

TEST(ModelProperties, InterceptionZeroIffNoInterception) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> unit(0.01, 0.9);
  for (int i = 0; i < 500; ++i) {
    const double alpha = unit(rng);
    const double ku = kuwabara(alpha);
    EXPECT_EQ(eta_interception(alpha, ku, 0.0), 0.0);
    EXPECT_GT(eta_interception(alpha, ku, unit(rng)), 0.0);
  }
}

TEST(ModelProperties, ImpactionZeroIffStokesTimesJZero) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> unit(0.01, 0.9);
  for (int i = 0; i < 500; ++i) {
    const double ku = kuwabara(unit(rng));
    const double stk = unit(rng);
    const double j = unit(rng) - 0.45;
    EXPECT_EQ(eta_impaction(0.0, j, ku), 0.0);
    EXPECT_EQ(eta_impaction(stk, 0.0, ku), 0.0);
    EXPECT_NE(eta_impaction(stk, j, ku), 0.0);
  }
}

TEST(ModelProperties, JBranchMatchesPolynomialOrConstant) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> nr_dist(0.0, 1.0);
  std::uniform_real_distribution<double> alpha_dist(0.01, 0.99);
  for (int i = 0; i < kSamples; ++i) {
    const double nr = nr_dist(rng);
    const double alpha = alpha_dist(rng);
    const double j = inertial_j(nr, alpha);
    if (nr >= 0.4) {
      EXPECT_EQ(j, 2.0);
      continue;
    }
    reference::Real n(nr);
    reference::Real a(alpha);
    const reference::Real expected =
        (reference::Real("29.6") - 28 * boost::multiprecision::pow(a, reference::Real("0.62"))) *
            n * n -
        reference::Real("27.5") * boost::multiprecision::pow(n, reference::Real("2.8"));
    // Absolute floor for the cancellation zone where the two terms balance.
    const double scale = static_cast<double>(
        reference::Real("27.5") * boost::multiprecision::pow(n, reference::Real("2.8")));
    EXPECT_LE(std::abs(j - static_cast<double>(expected)),
              1e-12 * std::max(std::abs(static_cast<double>(expected)), scale))
        << "nr = " << nr << ", alpha = " << alpha;
  }
}

TEST(ModelProperties, ImpactionInheritsSignOfJ) {
  std::mt19937_64 rng(18);
  for (int i = 0; i < kSamples; ++i) {
    Scenario s = random_valid_scenario(rng);
    FiltrationResult r;
    try {
      r = evaluate(s);
    } catch (const DomainError& e) {
      EXPECT_EQ(e.symbol(), "sum_n");
      continue;
    }
    if (r.groups.impaction_J >= 0.0) {
      EXPECT_GE(r.factors.eta_impaction_nI, 0.0);
      EXPECT_TRUE(r.warnings.empty());
    } else {
      EXPECT_LE(r.factors.eta_impaction_nI, 0.0);
      EXPECT_EQ(r.warnings.size(), 1u);
    }
  }
}

TEST(ModelProperties, NegativeJScenariosWarn) {
  // alpha = 0.5 drives the J polynomial negative for 0.332 < N_R < 0.4.
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> nr_dist(0.34, 0.39);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    Scenario s = testing_support::worked_scenario();
    s.medium.solidity_alpha = 0.5;
    s.medium.fiber_diameter_df = 1.0;
    s.particle.diameter_dp = nr_dist(rng);
    s.fluid.velocity_u = testing_support::log_uniform(rng, 0.01, 0.05);
    const FiltrationResult r = evaluate(s);
    ASSERT_LT(r.groups.impaction_J, 0.0);
    EXPECT_LT(r.factors.eta_impaction_nI, 0.0);
    EXPECT_FALSE(r.warnings.empty());
    ++checked;
  }
  EXPECT_EQ(checked, 500);
}

TEST(ModelProperties, NegativeMechanismSumIsRejected) {
  // Dense media just below the J branch switch, where n_I can outweigh n_D + n_R.
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> nr_dist(0.33, 0.4);
  int rejected = 0;
  int accepted = 0;
  for (int i = 0; i < kSamples; ++i) {
    Scenario s = random_scenario(rng);
    s.medium.solidity_alpha = testing_support::log_uniform(rng, 0.3, 0.9);
    s.particle.diameter_dp = nr_dist(rng) * s.medium.fiber_diameter_df;
    const auto o = reference::evaluate(testing_support::oracle_inputs(s));
    if (o.sum >= 0) {
      EXPECT_NO_THROW(evaluate(s));
      ++accepted;
      continue;
    }
    try {
      evaluate(s);
      ADD_FAILURE() << "accepted negative sum " << static_cast<double>(o.sum);
    } catch (const DomainError& e) {
      EXPECT_EQ(e.symbol(), "sum_n");
      EXPECT_LT(o.J, 0);
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 0);
  EXPECT_GT(accepted, 0);
}

TEST(ModelProperties, MechanismSumIsExact) {
  std::mt19937_64 rng(20);
  for (int i = 0; i < kSamples; ++i) {
    const FiltrationResult r = evaluate(random_valid_scenario(rng));
    EXPECT_EQ(r.factors.sum_n, r.factors.eta_diffusion_nD + r.factors.eta_interception_nR +
                                   r.factors.eta_impaction_nI);
  }
}

TEST(ModelProperties, AgreesWithHighPrecisionOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const Scenario s = random_valid_scenario(rng);
    const auto o = reference::evaluate(testing_support::oracle_inputs(s));
    const FiltrationResult r = evaluate(s);
    EXPECT_LE(rel_error(r.penetration_P, o.P), 1e-10);
    EXPECT_LE(rel_error(r.efficiency_E, o.E), 1e-10);
    EXPECT_LE(rel_error(r.factors.eta_diffusion_nD, o.nD), 1e-10);
    EXPECT_LE(rel_error(r.groups.peclet_Pe, o.Pe), 1e-10);
  }
}

} // namespace
} // namespace fibrefilter
