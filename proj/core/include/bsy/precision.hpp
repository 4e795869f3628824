#pragma once

#include <cstddef>

namespace bsy {

/// Working precision for every numerical routine in the library.
///
/// All accumulations that are sensitive to cancellation (Euler-Maclaurin
/// sums, phase reduction of t*log(n)) run in `extended` (x87 80-bit on the
/// supported targets); bulk evaluation uses double.
struct PrecisionConfig {
  double target_abs_error = 1e-12;
  int euler_maclaurin_terms = 60;
  int rs_correction_terms = 2;
  double quad_tol = 1e-10;
  int max_subdivisions = 2000;

  static constexpr int kMaxEulerMaclaurinTerms = 80;
  static constexpr int kMaxRsCorrectionTerms = 4;
  static constexpr int kMaxSubdivisions = 1'000'000;

  /// Throws InvalidArgument when an invariant is violated.
  void validate() const;

  /// Same configuration with both tolerances divided by `factor`.
  PrecisionConfig refined(double factor = 10.0) const;
};

using extended = long double;

}  // namespace bsy
