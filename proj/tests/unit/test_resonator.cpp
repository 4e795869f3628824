#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "bsy/arith.hpp"
#include "bsy/error.hpp"
#include "bsy/resonator.hpp"
#include "bsy/verify/oracles.hpp"

namespace bsy {
namespace {

ResonatorParams toy(int mu = 1, int nu = 0, std::uint64_t N = 100, double h = 0.1) {
  ResonatorParams p;
  p.mu = mu;
  p.nu = nu;
  p.N = N;
  p.h = h;
  p.override = true;
  p.L = 1.0;
  p.A = 2.0;
  p.B = 30.0;
  return p;
}

TEST(SolveL, InvertsForwardArithmetic) {
  // nu = 0, L = 3: log N = 9 log 27.
  const double log_n = 9 * std::log(27.0);
  const auto N = static_cast<std::uint64_t>(std::llround(std::exp(log_n)));
  const double L = solve_L(N, 0);
  EXPECT_NEAR(L, 3.0, 1e-9);
  EXPECT_NEAR(L * L * 3 * std::log(L), std::log(static_cast<double>(N)), 1e-12 * log_n);
}

TEST(SolveL, RootBelowThresholdIsDegenerate) {
  // L = 2 solves the constraint for N near 4103 but lies below e^1.01.
  EXPECT_THROW(solve_L(4103, 0), Error);
}

TEST(SolveL, IncreasingInN) {
  double previous = 0.0;
  for (std::uint64_t N = 10'000'000'000; N <= 1'000'000'000'000'000'000; N *= 10) {
    const double L = solve_L(N, 0);
    EXPECT_GT(L, previous);
    previous = L;
  }
}

TEST(SolveL, DegenerateWhenRootTooSmall) {
  try {
    solve_L(1'000'000, 2);
    FAIL() << "expected Degenerate";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
}

TEST(MakeParams, SatisfiesConstraints) {
  const ResonatorParams p = make_params(1, 0, 1'000'000'000'000, 0.05);
  EXPECT_NEAR(p.A, p.L * p.L * std::log(p.L), 1e-10 * p.A);
  EXPECT_NEAR(p.B, p.L * p.L * p.L, 1e-10 * p.B);
  EXPECT_NEAR(p.L * p.L * std::log(p.B), std::log(1e12), 1e-10 * std::log(1e12));
  EXPECT_NO_THROW(p.validate());
}

TEST(Params, ValidateRejectsBadWindow) {
  ResonatorParams p = toy();
  p.A = 40.0;
  EXPECT_THROW(p.validate(), Error);
  p = toy();
  p.h = 2.0;
  EXPECT_THROW(p.validate(), Error);
}

TEST(BuildResonator, ToyTableExamples) {
  const ResonatorTable plus = build_resonator(toy(), SignVariant::Plus);
  EXPECT_DOUBLE_EQ(plus.r(1), 1.0);
  EXPECT_NEAR(plus.r(15), 1 / std::sqrt(15.0), 1e-15);
  EXPECT_EQ(plus.r(105), 0.0);
  EXPECT_EQ(plus.r(4), 0.0);
  EXPECT_EQ(plus.r(2), 0.0);

  const ResonatorTable minus = build_resonator(toy(), SignVariant::Minus);
  EXPECT_NEAR(minus.r(15), 1 / std::sqrt(15.0), 1e-15);
  EXPECT_NEAR(minus.r(3), -1 / std::sqrt(3.0), 1e-15);
}

TEST(BuildResonator, MatchesBruteForce) {
  for (const auto variant : {SignVariant::Plus, SignVariant::Minus}) {
    ResonatorParams p = toy(1, 1, 3000);
    p.L = 1.3;
    const ResonatorTable table = build_resonator(p, variant);
    const auto oracle = verify::resonator_brute_force(p, variant);
    ASSERT_EQ(table.entries.size(), oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      EXPECT_EQ(table.entries[i].n, oracle[i].n);
      EXPECT_NEAR(table.entries[i].r, oracle[i].r, 1e-14 * std::fabs(oracle[i].r));
    }
  }
}

TEST(BuildResonator, SupportLawAndMultiplicativity) {
  const ResonatorParams p = toy(0, 0, 20000);
  const ResonatorTable table = build_resonator(p, SignVariant::Plus);
  for (const auto& e : table.entries) {
    ASSERT_TRUE(is_squarefree(e.n)) << e.n;
    for (std::uint64_t q = 2; q <= e.n; ++q) {
      if (e.n % q == 0 && von_mangoldt(q) > 0) {
        EXPECT_GT(static_cast<double>(q), p.A);
        EXPECT_LT(static_cast<double>(q), p.B);
      }
    }
  }
  EXPECT_NEAR(table.r(3 * 7 * 11), table.r(3) * table.r(77), 1e-15);
  EXPECT_NEAR(table.r(5 * 13 * 29), table.r(5 * 29) * table.r(13), 1e-15);
}

TEST(BuildResonator, EntryCap) {
  try {
    build_resonator(toy(0, 0, 100000), SignVariant::Plus, 10);
    FAIL() << "expected TableTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TableTooLarge);
  }
}

TEST(Numerator, MatchesPairLoopOnToyTable) {
  for (const auto variant : {SignVariant::Plus, SignVariant::Minus}) {
    const ResonatorTable table = build_resonator(toy(), variant);
    for (const int mu : {0, 1, 2}) {
      for (const int nu : {0, 1}) {
        for (const double h : {0.05, 0.1, 0.3}) {
          const double fast = resonator_numerator(table, mu, nu, h);
          const double slow = verify::numerator_pair_loop(table, mu, nu, h);
          EXPECT_NEAR(fast, slow, 1e-12 * std::max(1.0, std::fabs(slow)));
        }
      }
    }
  }
}

TEST(Numerator, MatchesPairLoopOnRandomTables) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 3; ++k) {
    ResonatorParams p = toy(1, 0, 2000 + 3000 * k);
    p.B = 60.0;
    p.L = 0.5 + k * 0.4;
    const ResonatorTable table = build_resonator(p, k % 2 ? SignVariant::Minus : SignVariant::Plus);
    const double fast = resonator_numerator(table, 1, 0, 0.07);
    const double slow = verify::numerator_pair_loop(table, 1, 0, 0.07);
    EXPECT_NEAR(fast, slow, 1e-12 * std::max(1.0, std::fabs(slow)));
  }
}

TEST(Numerator, ZeroShiftKillsSinePower) {
  const ResonatorTable table = build_resonator(toy(), SignVariant::Plus);
  EXPECT_EQ(resonator_numerator(table, 1, 0, 0.0), 0.0);
  EXPECT_EQ(resonator_numerator(table, 2, 1, 0.0), 0.0);
}

TEST(Numerator, FlatAtZeroForSquaredSine) {
  const ResonatorTable table = build_resonator(toy(), SignVariant::Plus);
  const double d = 1e-4;
  const double slope = (resonator_numerator(table, 2, 0, d) - resonator_numerator(table, 2, 0, -d)) / (2 * d);
  EXPECT_NEAR(slope, 0.0, 1e-12);
  const double step = resonator_numerator(table, 2, 0, 0.1 + d) - resonator_numerator(table, 2, 0, 0.1);
  EXPECT_LT(std::fabs(step), 1e-2);
}

TEST(Denominator, SignInvariantAndClosedForm) {
  const ResonatorTable plus = build_resonator(toy(), SignVariant::Plus);
  const ResonatorTable minus = build_resonator(toy(), SignVariant::Minus);
  EXPECT_DOUBLE_EQ(resonator_denominator(plus), resonator_denominator(minus));
  double brute = 0.0;
  for (const auto& e : verify::resonator_brute_force(toy(), SignVariant::Plus)) brute += e.r * e.r;
  EXPECT_NEAR(resonator_denominator(plus), brute, 1e-14);

  ResonatorParams single = toy(1, 0, 10);
  single.A = 6.0;
  single.B = 8.0;
  const ResonatorTable one_prime = build_resonator(single, SignVariant::Plus);
  ASSERT_EQ(one_prime.entries.size(), 2u);
  EXPECT_NEAR(resonator_denominator(one_prime), 1 + 1 / 7.0, 1e-15);
}

TEST(Lemma4, SignsOfBothVariants) {
  for (const double h : {0.05, 0.1, 0.2}) {
    for (const int mu : {0, 1, 3}) {
      const Lemma4Result r = lemma4_check(toy(mu, 0, 1000, h));
      EXPECT_GT(r.ratio_plus, 0.0) << mu << " " << h;
      EXPECT_LT(r.ratio_minus, 0.0) << mu << " " << h;
      EXPECT_GT(r.normalizer, 0.0);
      EXPECT_NEAR(r.normalized_plus, r.ratio_plus / r.normalizer, 1e-15 * std::fabs(r.normalized_plus));
    }
  }
}

TEST(Lemma4, ScalingLKeepsSignAndIsContinuous) {
  double previous = 0.0;
  for (double c = 0.5; c <= 2.0; c += 0.01) {
    ResonatorParams p = toy(1, 0, 1000, 0.1);
    p.L = c;
    const Lemma4Result r = lemma4_check(p);
    EXPECT_GT(r.ratio_plus, 0.0) << c;
    EXPECT_LT(r.ratio_minus, 0.0) << c;
    if (previous > 0.0) {
      EXPECT_LT(std::fabs(r.ratio_plus - previous), 0.02 * previous) << c;
    }
    previous = r.ratio_plus;
  }
}

TEST(TableFile, RoundTrip) {
  const ResonatorTable table = build_resonator(toy(), SignVariant::Minus);
  std::stringstream buf;
  write_table(table, buf);
  const ResonatorTable back = read_table(buf);
  ASSERT_EQ(back.entries.size(), table.entries.size());
  EXPECT_EQ(back.sign, SignVariant::Minus);
  EXPECT_EQ(back.params.N, table.params.N);
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    EXPECT_EQ(back.entries[i].n, table.entries[i].n);
    EXPECT_EQ(back.entries[i].r, table.entries[i].r);
  }
}

TEST(TableFile, RejectsGarbage) {
  std::istringstream in("1 1\n3 abc\n");
  EXPECT_THROW(read_table(in), Error);
}

}  // namespace
}  // namespace bsy
