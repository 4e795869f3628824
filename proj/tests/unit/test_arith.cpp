#include <gtest/gtest.h>

#include <cmath>

#include "bsy/arith.hpp"
#include "bsy/verify/oracles.hpp"

namespace bsy {
namespace {

TEST(VonMangoldt, Examples) {
  EXPECT_DOUBLE_EQ(von_mangoldt(8), std::log(2.0));
  EXPECT_EQ(von_mangoldt(6), 0.0);
  EXPECT_DOUBLE_EQ(von_mangoldt(97), std::log(97.0));
  EXPECT_EQ(von_mangoldt(1), 0.0);
}

TEST(VonMangoldt, MatchesTrialDivision) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    ASSERT_EQ(von_mangoldt(n), verify::von_mangoldt_naive(n)) << n;
  }
}

TEST(VonMangoldt, ChebyshevPsiNearN) {
  double psi = 0.0;
  for (std::uint64_t n = 1; n <= 100000; ++n) psi += von_mangoldt(n);
  EXPECT_NEAR(psi / 100000, 1.0, 0.01);
}

TEST(Primes, SegmentedSieveCounts) {
  EXPECT_EQ(primes_between(1, 100).size(), 25u);
  EXPECT_EQ(primes_between(2, 2).size(), 1u);
  std::size_t expected = 0;
  for (std::uint64_t n = 1'000'000; n <= 1'001'000; ++n) {
    if (verify::von_mangoldt_naive(n) == std::log(static_cast<double>(n))) ++expected;
  }
  EXPECT_EQ(primes_between(1'000'000, 1'001'000).size(), expected);
  EXPECT_TRUE(primes_between(24, 28).empty());
}

TEST(Multiplicative, MoebiusAndSquarefree) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(15), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_FALSE(is_squarefree(4));
  EXPECT_TRUE(is_squarefree(105));
  EXPECT_EQ(distinct_prime_factors(360), 3);
  EXPECT_EQ(prime_power_base(81), 3u);
  EXPECT_EQ(prime_power_base(12), 0u);
}

TEST(Multiplicative, MertensSmallValues) {
  int m = 0;
  for (std::uint64_t n = 1; n <= 1000; ++n) m += mobius(n);
  EXPECT_EQ(m, 2);
}

}  // namespace
}  // namespace bsy
