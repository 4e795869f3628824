#pragma once

#include <span>
#include <vector>

#include "bsy/precision.hpp"
#include "bsy/scan.hpp"
#include "bsy/zeros.hpp"

namespace bsy {

struct ArgSample {
  double t = 0.0;
  double S = 0.0;
  double S1_direct = 0.0;
  double S1_littlewood = 0.0;
};

/// (1/pi) Im log zeta(1/2 + it) on the branch continuous along 2 -> 2 + it
/// -> 1/2 + it. Throws ZeroOnPath at an ordinate. Below t = 0.01 the path
/// grazes the pole, and the value comes from S(t) = -1 - theta(t)/pi, exact
/// there because N(t) = 0 below the first ordinate.
double S_branch(double t, const PrecisionConfig& cfg);

/// S(t) with the midpoint convention at ordinates and S(0) = 0.
double S_of_t(double t, const PrecisionConfig& cfg);

/// (1/pi) int_{1/2}^{2} log|zeta(sigma + it)| d sigma.
double S1_littlewood(double t, const PrecisionConfig& cfg);

/// int_0^t S(u) du. Between consecutive ordinates of `zeros` the integrand is
/// S = N - 1 - theta/pi with N constant, integrated by adaptive quadrature.
double S1_direct(double t, const ZeroList& zeros, const PrecisionConfig& cfg);

/// S1_direct at every point of an ascending grid from one running integral.
std::vector<double> S1_direct_grid(std::span<const double> ts, const ZeroList& zeros,
                                   const PrecisionConfig& cfg);

/// int_{1/2}^{2} |log zeta(sigma + it)| d sigma, the horizontal integral
/// bounded by C log t.
double horizontal_log_integral(double t, const PrecisionConfig& cfg);

/// Running integral int_T^t log|zeta(1/2 + iu)| du over an ascending grid
/// with min >= T >= 3. `normalized` is value * (log log t)^2 / log t.
ScanReport lemma2_scan(double T, std::span<const double> t_grid, const ZeroList& zeros,
                       const PrecisionConfig& cfg);

/// Windowed integral int_{t-h}^{t+h} log|zeta(1/2 + iu)| du for t on a grid of
/// spacing h/4 over [T, 2T]; `normalized` divides by h sqrt(log t / log log t).
ScanReport omega_scan(double T, double h, const ZeroList& zeros, const PrecisionConfig& cfg);

}  // namespace bsy
