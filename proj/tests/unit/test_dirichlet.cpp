#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "bsy/arith.hpp"
#include "bsy/dirichlet.hpp"
#include "bsy/error.hpp"
#include "bsy/resonator.hpp"
#include "bsy/verify/oracles.hpp"

namespace bsy {
namespace {

const PrecisionConfig kCfg{};

ResonatorTable constant_table() {
  ResonatorTable t;
  t.entries = {{1, 1.0}};
  t.params.N = 1;
  return t;
}

ResonatorTable toy_table(std::uint64_t N = 100, SignVariant variant = SignVariant::Plus) {
  ResonatorParams p;
  p.mu = 1;
  p.N = N;
  p.h = 0.1;
  p.override = true;
  p.L = 1.0;
  p.A = 2.0;
  p.B = 30.0;
  return build_resonator(p, variant);
}

ResonatorTable first_entries(std::size_t count) {
  ResonatorTable t = toy_table(1000);
  t.entries.resize(count);
  t.params.N = t.entries.back().n;
  return t;
}

/// T sum over m | k in the table, n = k / m a prime power.
std::complex<double> rhs_pair_loop(const ResonatorTable& table, double alpha, double h, double T) {
  std::complex<double> sum = 0.0;
  for (const auto& m : table.entries) {
    for (const auto& k : table.entries) {
      if (k.n % m.n != 0) continue;
      const std::uint64_t n = k.n / m.n;
      const double lambda = verify::von_mangoldt_naive(n);
      if (lambda == 0.0) continue;
      const double ln = std::log(static_cast<double>(n));
      sum += lambda * m.r * k.r * std::exp(-std::complex<double>(alpha, h) * ln) / ln;
    }
  }
  return T * sum;
}

TEST(EvalR, ElementaryValues) {
  EXPECT_EQ(eval_R(constant_table(), 123.4), std::complex<double>(1.0, 0.0));
  const ResonatorTable t = toy_table();
  double sum = 0.0;
  for (const auto& e : t.entries) sum += e.r;
  EXPECT_NEAR(std::abs(eval_R(t, 0.0)), sum, 1e-13);
  EXPECT_LT(std::abs(std::conj(eval_R(t, 17.0)) - eval_R(t, -17.0)), 1e-13);
}

TEST(MeanSquare, ConstantPolynomial) {
  for (const double T : {1.0, 10.0, 12345.0}) EXPECT_NEAR(mean_square_exact(constant_table(), T), T, 1e-12 * T);
}

TEST(MeanSquare, WithinOffDiagonalMajorant) {
  const ResonatorTable t = toy_table();
  for (const double T : {10.0, 100.0, 1000.0}) {
    const double diag = T * t.sum_squares();
    const double delta = mean_square_offdiagonal_delta(t, T);
    EXPECT_LE(std::fabs(mean_square_exact(t, T) / diag - 1), delta * (1 + 1e-12)) << T;
  }
}

TEST(MeanSquare, MatchesQuadratureOracle) {
  for (const std::size_t size : {1u, 5u, 20u}) {
    const ResonatorTable t = first_entries(size);
    const double exact = mean_square_exact(t, 1000.0);
    EXPECT_NEAR(exact, verify::mean_square_quadrature(t, 1000.0), kCfg.quad_tol * std::max(1.0, exact)) << size;
  }
}

TEST(MeanSquare, RatioApproachesOne) {
  const ResonatorTable t = first_entries(20);
  double previous = 1e300;
  for (const double T : {1e2, 1e3, 1e4, 1e5}) {
    const double dev = std::fabs(mean_square_exact(t, T) / (T * t.sum_squares()) - 1);
    EXPECT_LT(dev, previous * 1.5) << T;
    previous = dev;
  }
  EXPECT_LT(previous, 1e-3);
}

TEST(Lemma3Rhs, EmptyForConstantTable) {
  const ResonatorTable t = constant_table();
  Lemma3Request req{0.6, 0.1, 1000.0, &t};
  EXPECT_EQ(lemma3_rhs(req), std::complex<double>(0.0, 0.0));
}

TEST(Lemma3Rhs, MatchesPairLoopAndScalesWithT) {
  for (const auto variant : {SignVariant::Plus, SignVariant::Minus}) {
    const ResonatorTable t = toy_table(100, variant);
    for (const double alpha : {0.5, 0.6, 2.0}) {
      Lemma3Request req{alpha, 0.1, 1000.0, &t};
      const auto fast = lemma3_rhs(req);
      const auto slow = rhs_pair_loop(t, alpha, 0.1, 1000.0);
      EXPECT_LE(std::abs(fast - slow), 1e-12 * std::abs(slow));
      req.T = 3000.0;
      EXPECT_LE(std::abs(lemma3_rhs(req) - 3.0 * fast), 1e-12 * std::abs(fast));
    }
  }
}

TEST(Lemma3Lhs, AlphaTwoMatchesSeries) {
  const ResonatorTable t = first_entries(5);
  Lemma3Request req{2.0, 0.1, 100.0, &t};
  const ComplexEstimate lhs = lemma3_lhs(req, kCfg);
  const verify::SeriesValue series = verify::lemma3_series(t, 2.0, 0.1, 100.0, 1'000'000);
  EXPECT_LE(std::abs(lhs.value - series.value), 1e-8 + series.tail_bound + lhs.abs_error);
}

TEST(Lemma3Lhs, ConstantTableAtAlphaTwo) {
  const ResonatorTable t = constant_table();
  Lemma3Request req{2.0, 0.0, 100.0, &t};
  const ComplexEstimate lhs = lemma3_lhs(req, kCfg);
  const verify::SeriesValue series = verify::lemma3_series(t, 2.0, 0.0, 100.0, 1'000'000);
  EXPECT_LE(std::abs(lhs.value - series.value), 1e-8 + series.tail_bound);
  // The mean of log zeta(2 + it) is the n = 1 term, which is absent.
  EXPECT_LT(std::fabs(lhs.value.real()) / req.T, 0.01);
}

TEST(Lemma3Lhs, ContinuousInShift) {
  const ResonatorTable t = first_entries(5);
  Lemma3Request a{0.8, 0.0, 100.0, &t};
  Lemma3Request b{0.8, 1e-6, 100.0, &t};
  const auto va = lemma3_lhs(a, kCfg).value;
  const auto vb = lemma3_lhs(b, kCfg).value;
  // |d/dt log zeta| is below 10 on sigma = 0.8 at this height.
  EXPECT_LT(std::abs(va - vb), 1e-6 * a.T * 10 * t.sum_squares() + 1e-8);
}

TEST(Lemma3Lhs, RejectsAlphaTooCloseToHalf) {
  const ResonatorTable t = constant_table();
  Lemma3Request req{0.52, 0.0, 100.0, &t};
  EXPECT_THROW(lemma3_lhs(req, kCfg), Error);
}

TEST(Lemma3Compare, ConstantTableGapIsLhs) {
  const ResonatorTable t = constant_table();
  Lemma3Request req{0.7, 0.2, 200.0, &t};
  const Lemma3Comparison c = lemma3_compare(req, kCfg);
  EXPECT_EQ(c.rhs, std::complex<double>(0.0, 0.0));
  EXPECT_NEAR(c.gap, std::abs(c.lhs.value), 1e-15 * c.gap);
  EXPECT_NEAR(c.normalized_gap, c.gap / std::pow(std::log(200.0), 1.5), 1e-15);
}

TEST(Lemma3Compare, AlphaTwoGapTiny) {
  const ResonatorTable t = first_entries(5);
  Lemma3Request req{2.0, 0.1, 1000.0, &t};
  EXPECT_LT(lemma3_compare(req, kCfg).normalized_gap, 0.05);
}

TEST(Resonance, ZeroShiftAndSign) {
  const ResonatorTable t = toy_table();
  const ResonanceStatistic zero = s1_resonance_statistic(t, 0.0, 100.0, kCfg);
  EXPECT_EQ(zero.sin2_ratio, 0.0);
  EXPECT_EQ(zero.sin_ratio, 0.0);
  for (const double h : {0.05, 0.3, 1.0}) EXPECT_GT(s1_resonance_statistic(t, h, 100.0, kCfg).sin2_ratio, 0.0);
}

TEST(Resonance, MatchesPairLoop) {
  const ResonatorTable t = toy_table(100, SignVariant::Minus);
  const double h = 0.3;
  double sin2 = 0.0, sin1 = 0.0;
  for (const auto& m : t.entries) {
    for (const auto& k : t.entries) {
      if (k.n % m.n != 0) continue;
      const std::uint64_t n = k.n / m.n;
      const double lambda = verify::von_mangoldt_naive(n);
      if (lambda == 0.0) continue;
      const double ln = std::log(static_cast<double>(n));
      const double base = lambda * m.r * k.r / (std::sqrt(static_cast<double>(n)) * ln * ln);
      sin2 += base * std::pow(std::sin(0.5 * h * ln), 2);
      sin1 += base * std::sin(h * ln);
    }
  }
  const ResonanceStatistic s = s1_resonance_statistic(t, h, 100.0, kCfg);
  EXPECT_NEAR(s.sin2_ratio, 2 / std::numbers::pi * sin2 / t.sum_squares(), 1e-14);
  EXPECT_NEAR(s.sin_ratio, 2 * sin1 / t.sum_squares(), 1e-14);
}

}  // namespace
}  // namespace bsy
