#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "bsy/error.hpp"
#include "bsy/verify/oracles.hpp"
#include "bsy/zeros.hpp"
#include "bsy/zeta.hpp"
#include "common.hpp"

namespace bsy {
namespace {

using test::default_cfg;
using test::kGamma1;
using test::zeros_200;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(CountZeros, BelowFirstOrdinate) { EXPECT_EQ(count_zeros(10.0, default_cfg()), 0); }

TEST(CountZeros, AtOneHundredMatchesSignChangeOracle) {
  const auto oracle = verify::sign_change_zeros(100.0, default_cfg());
  EXPECT_EQ(oracle.size(), 29u);
  EXPECT_EQ(count_zeros(100.0, default_cfg()), static_cast<long long>(oracle.size()));
}

TEST(CountZeros, JumpAcrossFirstOrdinate) {
  EXPECT_EQ(count_zeros(kGamma1 + 1e-4, default_cfg()) - count_zeros(kGamma1 - 1e-4, default_cfg()), 1);
}

TEST(CountZeros, OnOrdinate) {
  EXPECT_EQ(kind_of([] { count_zeros(kGamma1, default_cfg()); }), ErrorKind::OnOrdinate);
}

TEST(CountZeros, NondecreasingWithUnitJumps) {
  long long previous = 0;
  for (double t = 10.5; t <= 200.0; t += 0.5) {
    const long long n = count_zeros_formula(t, default_cfg());
    EXPECT_GE(n, previous) << t;
    EXPECT_EQ(n, static_cast<long long>(zeros_200().count_below(t))) << t;
    previous = n;
  }
}

TEST(FindZeros, FirstOrdinate) {
  const ZeroList list = find_zeros_up_to(15.0, default_cfg());
  ASSERT_EQ(list.ordinates.size(), 1u);
  EXPECT_NEAR(list.ordinates[0], 14.1347251417, 1e-9);
  EXPECT_TRUE(list.verified);
  EXPECT_EQ(list.source, ZeroSource::Computed);
}

TEST(FindZeros, LengthMatchesCount) {
  const ZeroList list = find_zeros_up_to(50.0, default_cfg());
  EXPECT_EQ(static_cast<long long>(list.ordinates.size()), count_zeros(50.0, default_cfg()));
}

TEST(FindZeros, MatchesBisectionOracle) {
  const auto oracle = verify::sign_change_zeros(100.0, default_cfg());
  const auto& ords = zeros_200().ordinates;
  ASSERT_GE(ords.size(), oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) EXPECT_NEAR(ords[i], oracle[i], 1e-9) << i;
}

TEST(FindZeros, RootContract) {
  for (const double g : zeros_200().ordinates) {
    // |Z(gamma)| <= 1e-8 scaled by a local derivative estimate.
    const double h = 1e-5;
    const double slope = std::fabs(hardy_z(g + h, default_cfg()).value - hardy_z(g - h, default_cfg()).value) / (2 * h);
    EXPECT_LE(std::fabs(hardy_z(g, default_cfg()).value), 1e-8 * std::max(1.0, slope)) << g;
  }
}

TEST(FindZeros, ConstantSignBetweenOrdinates) {
  const auto& ords = zeros_200().ordinates;
  for (std::size_t i = 0; i + 1 < ords.size(); ++i) {
    const double a = ords[i], b = ords[i + 1];
    const double s1 = hardy_z(a + 0.25 * (b - a), default_cfg()).value;
    const double s2 = hardy_z(a + 0.5 * (b - a), default_cfg()).value;
    const double s3 = hardy_z(a + 0.75 * (b - a), default_cfg()).value;
    EXPECT_GT(s1 * s2, 0.0) << i;
    EXPECT_GT(s2 * s3, 0.0) << i;
  }
}

TEST(ZeroList, NearestAndCountBelow) {
  const ZeroList& list = zeros_200();
  EXPECT_EQ(list.count_below(14.0), 0u);
  EXPECT_EQ(list.count_below(kGamma1 + 1e-6), 1u);
  EXPECT_NEAR(list.nearest(15.0), kGamma1, 1e-9);
  EXPECT_TRUE(std::isnan(ZeroList{}.nearest(1.0)));
}

TEST(ImportZeros, FormatExamples) {
  std::istringstream two("14.134725141734\n21.022039638771\n");
  const ZeroList list = import_zeros(two);
  EXPECT_EQ(list.ordinates.size(), 2u);
  EXPECT_EQ(list.source, ZeroSource::Imported);
  EXPECT_FALSE(list.verified);

  std::istringstream commented("# comment\n14.1347\n");
  EXPECT_EQ(import_zeros(commented).ordinates.size(), 1u);
}

TEST(ImportZeros, CoveredHeightHeader) {
  std::istringstream in("# covered_height = 20\n14.134725141734693\n");
  EXPECT_EQ(import_zeros(in).covered_height, 20.0);
}

TEST(ImportZeros, Errors) {
  EXPECT_EQ(kind_of([] {
              std::istringstream in("21.0\n14.1\n");
              import_zeros(in);
            }),
            ErrorKind::NotAscending);
  try {
    std::istringstream in("14.1\n\n# c\n1,5\n");
    import_zeros(in);
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("4"), std::string::npos) << e.what();
  }
}

TEST(ImportZeros, RoundTripIsBitExact) {
  std::stringstream buf;
  export_zeros(zeros_200(), buf);
  const ZeroList back = import_zeros(buf);
  ASSERT_EQ(back.ordinates.size(), zeros_200().ordinates.size());
  for (std::size_t i = 0; i < back.ordinates.size(); ++i) EXPECT_EQ(back.ordinates[i], zeros_200().ordinates[i]);
  EXPECT_EQ(back.covered_height, zeros_200().covered_height);
}

TEST(VerifyZeroList, AcceptsComputedList) {
  std::stringstream buf;
  export_zeros(find_zeros_up_to(60.0, default_cfg()), buf);
  const ZeroList verified = verify_zero_list(import_zeros(buf), default_cfg());
  EXPECT_TRUE(verified.verified);
  EXPECT_EQ(static_cast<long long>(verified.ordinates.size()), count_zeros(60.0, default_cfg()));
}

TEST(VerifyZeroList, RejectsMissingOrWrongOrdinate) {
  ZeroList list = find_zeros_up_to(60.0, default_cfg());
  ZeroList missing = list;
  missing.ordinates.erase(missing.ordinates.begin() + 3);
  EXPECT_EQ(kind_of([&] { verify_zero_list(missing, default_cfg()); }), ErrorKind::Inconsistent);

  ZeroList shifted = list;
  shifted.ordinates[2] += 1e-3;
  try {
    verify_zero_list(shifted, default_cfg());
    FAIL() << "expected Inconsistent";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Inconsistent);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace bsy
