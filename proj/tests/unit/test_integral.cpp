#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bsy/error.hpp"
#include "bsy/integral.hpp"
#include "bsy/scan.hpp"
#include "bsy/verify/oracles.hpp"
#include "bsy/zeta.hpp"
#include "common.hpp"

namespace bsy {
namespace {

using test::default_cfg;
using test::kGamma1;
using test::zeros_200;

TEST(Integrand, AtZero) {
  const double log_zeta_half = std::log(std::abs(verify::zeta_borwein({0.5, 0.0})));
  EXPECT_NEAR(bsy_integrand(0.0, default_cfg()), 4 * log_zeta_half, 1e-10);
}

TEST(Integrand, Even) {
  for (const double t : {0.3, 7.0, 42.0}) {
    EXPECT_DOUBLE_EQ(bsy_integrand(-t, default_cfg()), bsy_integrand(t, default_cfg()));
  }
}

TEST(Integrand, GrowthAtOneThousand) {
  const double t = 1000.0;
  const double c = std::fabs(bsy_integrand(t, default_cfg())) * t * t / std::log(t);
  EXPECT_LT(c, 1.0);
}

TEST(ComputeI, MatchesTrapezoidBelowFirstOrdinate) {
  const IntegralResult r = compute_I(10.0, zeros_200(), default_cfg());
  EXPECT_NEAR(r.value, verify::trapezoid_I(10.0, 20001, default_cfg()), 1e-6);
  EXPECT_EQ(r.singularities_handled, 0);
  EXPECT_TRUE(r.converged);
}

TEST(ComputeI, SingularPanelAndBounds) {
  const IntegralResult r = compute_I(15.0, zeros_200(), default_cfg());
  EXPECT_EQ(r.singularities_handled, 1);
  EXPECT_TRUE(std::isfinite(r.abs_error_est));
  EXPECT_LE(r.abs_error_est, 100 * default_cfg().quad_tol);
  EXPECT_LE(r.subintervals, default_cfg().max_subdivisions * (r.singularities_handled + 2));
}

TEST(ComputeI, RefinementStaysInsideBound) {
  const IntegralResult coarse = compute_I(60.0, zeros_200(), default_cfg());
  const IntegralResult fine = compute_I(60.0, zeros_200(), default_cfg().refined(10.0));
  EXPECT_LE(std::fabs(coarse.value - fine.value),
            coarse.abs_error_est + coarse.evaluation_error + fine.abs_error_est + fine.evaluation_error);
}

TEST(ComputeI, LadderAndTailAreAdditive) {
  const std::vector<double> heights{20.0, 40.0, 80.0};
  const auto ladder = compute_I_ladder(heights, zeros_200(), default_cfg());
  ASSERT_EQ(ladder.size(), 3u);
  for (std::size_t i = 0; i < heights.size(); ++i) {
    EXPECT_NEAR(ladder[i].value, compute_I(heights[i], zeros_200(), default_cfg()).value, 1e-9);
  }
  const IntegralResult tail = tail_I(40.0, 80.0, zeros_200(), default_cfg());
  EXPECT_NEAR(ladder[2].value, ladder[1].value - tail.value, 1e-9);
}

TEST(ComputeI, ZeroListMustCoverHeight) {
  const ZeroList short_list = find_zeros_up_to(20.0, default_cfg());
  try {
    compute_I(30.0, short_list, default_cfg());
    FAIL() << "expected ZeroListInsufficient";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroListInsufficient);
  }
}

TEST(ZeroSumTerm, VanishesOnCriticalLine) {
  for (const double gamma : {kGamma1, 30.0, 100.0, 1000.0}) {
    EXPECT_LE(zero_sum_term({0.5 + 1e-9, gamma}), 1e-8);
    EXPECT_GT(zero_sum_term({0.5 + 1e-9, gamma}), 0.0);
  }
}

TEST(ZeroSumTerm, ClosedForm) {
  const ZeroCandidate rho{0.75, 20.0};
  const double direct = std::log(std::hypot(0.75, 20.0) / std::hypot(0.25, 20.0));
  EXPECT_NEAR(zero_sum_term(rho), direct, 1e-15);
}

TEST(Theorem2, HypotheticalShiftsResidualOnlyInsideWindow) {
  const double I = 0.001;
  const ZeroCandidate inside{0.6, 30.0};
  const ZeroCandidate outside{0.6, 60.0};
  const auto none = theorem2_residual(50.0, I, {});
  const auto one = theorem2_residual(50.0, I, std::span(&inside, 1));
  const auto far = theorem2_residual(50.0, I, std::span(&outside, 1));
  EXPECT_NEAR(one.residual - none.residual, -2 * std::numbers::pi * zero_sum_term(inside), 1e-15);
  EXPECT_EQ(far.residual, none.residual);
  EXPECT_NEAR(none.normalized, I * 2500 / std::log(50.0), 1e-12);
}

TEST(FitDecay, RecoversSyntheticPowerLaw) {
  std::vector<ScanSample> samples;
  for (double T = 10; T <= 1e4; T *= 2) samples.push_back({T, 3.0 * std::pow(T, -2.0)});
  const ScanReport r = fit_decay(samples, DecayModel::PurePower);
  ASSERT_EQ(r.fitted_params.size(), 2u);
  EXPECT_NEAR(r.fitted_params[0], std::log(3.0), 1e-12);
  EXPECT_NEAR(r.fitted_params[1], 2.0, 1e-12);
  EXPECT_NEAR(r.residual_rms, 0.0, 1e-12);

  const ScanReport log_model = fit_decay(samples, DecayModel::LogTOverT2);
  EXPECT_EQ(log_model.fitted_params.size(), 1u);
  EXPECT_GT(log_model.residual_rms, 0.0);
}

TEST(FitDecay, LogModelIsExactOnItsOwnData) {
  std::vector<ScanSample> samples;
  for (double T = 10; T <= 1e4; T *= 2) samples.push_back({T, -0.5 * std::log(T) / (T * T)});
  const ScanReport r = fit_decay(samples, DecayModel::LogTOverT2);
  EXPECT_NEAR(r.fitted_params[0], std::log(0.5), 1e-12);
  EXPECT_NEAR(r.residual_rms, 0.0, 1e-12);
}

TEST(FitDecay, FlaggedSamplesAreExcluded) {
  std::vector<ScanSample> samples;
  for (double T = 10; T <= 1e4; T *= 2) samples.push_back({T, std::pow(T, -2.0)});
  samples[4].stat = 1e-20;
  samples[4].flagged = true;
  const ScanReport r = fit_decay(samples, DecayModel::PurePower);
  EXPECT_NEAR(r.fitted_params[1], 2.0, 1e-12);
  EXPECT_EQ(r.samples.size(), samples.size());
}

TEST(FitDecay, ModelNames) {
  EXPECT_EQ(parse_decay_model("pure_power"), DecayModel::PurePower);
  EXPECT_EQ(parse_decay_model("logT_over_T2"), DecayModel::LogTOverT2);
  EXPECT_EQ(parse_decay_model("sqrtlog_T2"), DecayModel::SqrtLogT2);
  EXPECT_THROW(parse_decay_model("cubic"), Error);
}

TEST(FlagSignChanges, MarksSmallValueNextToSignFlip) {
  std::vector<ScanSample> samples{{10, 1.0}, {20, 0.5}, {40, 0.01}, {80, -0.4}, {160, -0.2}};
  flag_sign_changes(samples);
  EXPECT_FALSE(samples[1].flagged);
  EXPECT_TRUE(samples[2].flagged);
  EXPECT_FALSE(samples[3].flagged);
  EXPECT_FALSE(samples[4].flagged);
}

TEST(WeightIdentity, TailWithinMajorant) {
  for (const double X : {10.0, 100.0, 1000.0}) {
    EXPECT_LE(std::fabs(weight_identity_check(X, default_cfg())), weight_identity_majorant(X)) << X;
  }
}

}  // namespace
}  // namespace bsy
