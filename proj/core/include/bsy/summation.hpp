#pragma once

#include <cmath>
#include <complex>

#include "bsy/precision.hpp"

namespace bsy {

/// Neumaier (improved Kahan) compensated accumulator.
template <typename Real = double>
class CompensatedSum {
 public:
  void add(Real x) noexcept {
    const Real t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(Real x) noexcept {
    add(x);
    return *this;
  }

  Real value() const noexcept { return sum_ + comp_; }

 private:
  Real sum_{0};
  Real comp_{0};
};

template <typename Real = double>
class CompensatedComplexSum {
 public:
  void add(std::complex<Real> z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }

  CompensatedComplexSum& operator+=(std::complex<Real> z) noexcept {
    add(z);
    return *this;
  }

  std::complex<Real> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<Real> re_;
  CompensatedSum<Real> im_;
};

/// Reduces t*log(n) (or any large phase) into [-pi, pi] in extended precision.
inline double reduce_phase(extended phase) noexcept {
  // Two-piece 2 pi (Cody-Waite): the high part has 37 fraction bits so
  // k * hi is exact for |k| < 2^24.
  constexpr extended two_pi = 6.283185307179586476925286766559005768L;
  constexpr extended hi = 0x1.921fb54442p+2L;
  constexpr extended lo = two_pi - hi;
  constexpr extended inv = 1 / two_pi;
  const extended k = std::nearbyint(phase * inv);
  if (std::fabs(k) >= 16777216.0L) {
    extended r = std::fmod(phase, two_pi);
    if (r > two_pi / 2) r -= two_pi;
    if (r < -two_pi / 2) r += two_pi;
    return static_cast<double>(r);
  }
  return static_cast<double>((phase - k * hi) - k * lo);
}

}  // namespace bsy
