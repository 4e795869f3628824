#include "bsy/precision.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bsy/error.hpp"

namespace bsy {

void PrecisionConfig::validate() const {
  require(std::isfinite(target_abs_error) && target_abs_error > 0, ErrorKind::InvalidArgument,
          "target_abs_error must be positive");
  require(std::isfinite(quad_tol) && quad_tol > 0, ErrorKind::InvalidArgument,
          "quad_tol must be positive");
  require(target_abs_error <= quad_tol, ErrorKind::InvalidArgument,
          "target_abs_error must not exceed quad_tol");
  require(euler_maclaurin_terms >= 1 && euler_maclaurin_terms <= kMaxEulerMaclaurinTerms,
          ErrorKind::InvalidArgument,
          "euler_maclaurin_terms must lie in [1, " + std::to_string(kMaxEulerMaclaurinTerms) + "]");
  require(rs_correction_terms >= 0 && rs_correction_terms <= kMaxRsCorrectionTerms,
          ErrorKind::InvalidArgument,
          "rs_correction_terms must lie in [0, " + std::to_string(kMaxRsCorrectionTerms) + "]");
  require(max_subdivisions >= 1 && max_subdivisions <= kMaxSubdivisions,
          ErrorKind::InvalidArgument, "max_subdivisions out of range");
}

PrecisionConfig PrecisionConfig::refined(double factor) const {
  PrecisionConfig out = *this;
  out.target_abs_error /= factor;
  out.quad_tol /= factor;
  out.max_subdivisions = std::min(kMaxSubdivisions, max_subdivisions * 4);
  return out;
}

}  // namespace bsy
