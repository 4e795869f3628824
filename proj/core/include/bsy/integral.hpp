#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "bsy/precision.hpp"
#include "bsy/quadrature.hpp"
#include "bsy/scan.hpp"
#include "bsy/zeros.hpp"

namespace bsy {

/// log|zeta(1/2 + it)| / (1/4 + t^2).
double bsy_integrand(double t, const PrecisionConfig& cfg);

/// Integrals of log|zeta(1/2 + it)| * weight(t) over [cuts[i], cuts[i + 1]]
/// for every consecutive pair of `cuts` (ascending, >= 0).
///
/// Each interval is partitioned at midpoints between ordinates so that a
/// panel holds at most one ordinate gamma. There the integrand is split into
/// log|t - gamma| * weight (graded-mesh quadrature) and the smooth remainder
/// log|Z(t) / (t - gamma)| * weight (adaptive Gauss-Kronrod). Panels are
/// independent and evaluated in parallel; results are returned per interval.
std::vector<IntegralResult> integrate_log_zeta_pieces(std::span<const double> cuts,
                                                      const ZeroList& zeros,
                                                      const std::function<double(double)>& weight,
                                                      const PrecisionConfig& cfg);

/// I(T) = 2 * int_0^T log|zeta(1/2 + it)| / (1/4 + t^2) dt.
IntegralResult compute_I(double T, const ZeroList& zeros, const PrecisionConfig& cfg);

/// I(T) for every T in an ascending ladder, from one pass over [0, max T].
std::vector<IntegralResult> compute_I_ladder(std::span<const double> heights, const ZeroList& zeros,
                                             const PrecisionConfig& cfg);

/// -2 * int_T^{T_max} log|zeta(1/2 + it)| / (1/4 + t^2) dt.
IntegralResult tail_I(double T, double T_max, const ZeroList& zeros, const PrecisionConfig& cfg);

/// log|rho / (1 - rho)| for rho = beta + i gamma, computed without
/// cancellation as beta -> 1/2.
double zero_sum_term(const ZeroCandidate& rho);

struct Theorem2Residual {
  double T = 0.0;
  double integral = 0.0;
  /// 2 pi times the sum of zero_sum_term over hypotheticals with |gamma| <= T.
  double zero_sum = 0.0;
  double residual = 0.0;
  /// residual * T^2 / log T.
  double normalized = 0.0;
};

/// I(T) minus 2 pi * sum of zero_sum_term over the in-window hypotheticals.
Theorem2Residual theorem2_residual(double T, double integral,
                                   std::span<const ZeroCandidate> hypotheticals);
Theorem2Residual theorem2_residual(double T, const ZeroList& zeros,
                                   std::span<const ZeroCandidate> hypotheticals,
                                   const PrecisionConfig& cfg);

/// Least-squares fit of log|stat| against `model`. PurePower fits
/// (log c, alpha); the other models fit log c only. Samples whose `flagged`
/// bit is set are reported but excluded from the fit.
ScanReport fit_decay(std::span<const ScanSample> samples, DecayModel model);

/// Marks samples lying in a sign-change window of the statistic: a sample is
/// flagged when a neighbour on the grid has the opposite sign and |stat| is
/// below `relative_floor` times the largest neighbouring |stat|.
void flag_sign_changes(std::vector<ScanSample>& samples, double relative_floor = 0.1);

/// int_{-X}^{X} log|-1/2 + it| / (1/4 + t^2) dt.
IntegralResult weight_identity_integral(double X, const PrecisionConfig& cfg, bool symmetric_half = true);
double weight_identity_check(double X, const PrecisionConfig& cfg);
/// Majorant 4 (1 + log X) / X of the tail of the weight identity.
double weight_identity_majorant(double X);

}  // namespace bsy
