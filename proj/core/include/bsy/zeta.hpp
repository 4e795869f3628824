#pragma once

#include <complex>
#include <cstddef>
#include <functional>

#include "bsy/precision.hpp"

namespace bsy {

/// s = sigma + i t.
struct ComplexPoint {
  double sigma = 0.0;
  double t = 0.0;

  std::complex<double> value() const { return {sigma, t}; }
};

/// A zeta value with a conservative bound on its absolute error.
struct ZetaValue {
  std::complex<double> value;
  double abs_error = 0.0;
};

enum class ZMethod { EulerMaclaurin, RiemannSiegel };

struct HardyValue {
  double value = 0.0;
  double abs_error = 0.0;
  /// Imaginary part of e^{i theta} zeta(1/2 + it) before it is discarded; only
  /// non-zero on the Euler-Maclaurin path.
  double imag_residue = 0.0;
  ZMethod method = ZMethod::EulerMaclaurin;
};

inline constexpr double kPoleThreshold = 1e-3;
inline constexpr double kThetaMinT = 10.0;
inline constexpr double kRiemannSiegelMinT = 30.0;

/// Euler-Maclaurin evaluation of zeta(s) for sigma >= -1.
ZetaValue zeta_em(ComplexPoint s, const PrecisionConfig& cfg);

/// Riemann-Siegel theta by its asymptotic expansion; |t| >= kThetaMinT.
double rs_theta(double t);

/// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi for any real t, through a
/// shifted Stirling series for the complex log-gamma.
double theta_loggamma(double t);

/// log Gamma(z) on the continuous branch for Re z > 0.
std::complex<double> log_gamma(std::complex<double> z);

/// Hardy's Z function; Riemann-Siegel when t >= kRiemannSiegelMinT and its
/// error bound meets the target, Euler-Maclaurin otherwise.
HardyValue hardy_z(double t, const PrecisionConfig& cfg);
HardyValue hardy_z_em(double t, const PrecisionConfig& cfg);
/// Riemann-Siegel with cfg.rs_correction_terms correction terms; t >= 2 pi.
HardyValue hardy_z_rs(double t, const PrecisionConfig& cfg);
/// Bound on the truncation error of the Riemann-Siegel formula with
/// `terms` correction terms (Gabcke's constants, inflated below t = 200).
double rs_error_bound(double t, int terms);

/// Riemann-Siegel correction function C_k(p), 0 <= k <= 4, 0 <= p <= 1.
double rs_correction(int k, double p);

/// log|zeta(1/2 + it)|.
double log_abs_zeta_half(double t, const PrecisionConfig& cfg);

struct LogValue {
  double value = 0.0;
  double abs_error = 0.0;
};
LogValue log_abs_zeta_half_checked(double t, const PrecisionConfig& cfg);

/// log zeta(sigma + it) on the branch obtained by continuous variation along
/// 2 -> 2 + it -> sigma + it, starting from arg zeta(2) = 0.
std::complex<double> log_zeta_branch(double sigma, double t, const PrecisionConfig& cfg);

/// Evaluates zeta(sigma + i (t0 + j * step)) for j in [0, count) and passes each
/// value to `sink` in order. The n^{-s} terms are advanced by a multiplicative
/// recurrence between points and re-seeded periodically, so the cost per point
/// is one complex multiply-add per Euler-Maclaurin term. Returns a bound on the
/// absolute error of every value.
double zeta_vertical_grid(double sigma, double t0, double step, std::size_t count,
                          const PrecisionConfig& cfg,
                          const std::function<void(std::size_t, std::complex<double>)>& sink);

}  // namespace bsy
