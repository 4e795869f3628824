#pragma once

#include "bsy/zeros.hpp"

namespace bsy::test {

inline const PrecisionConfig& default_cfg() {
  static const PrecisionConfig cfg;
  return cfg;
}

/// Verified zeros up to height 200, computed once per test binary.
inline const ZeroList& zeros_200() {
  static const ZeroList list = find_zeros_up_to(200.0, default_cfg());
  return list;
}

inline constexpr double kGamma1 = 14.134725141734693;

}  // namespace bsy::test
