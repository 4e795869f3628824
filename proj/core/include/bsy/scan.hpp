#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bsy {

/// Models for the decay of |I(T)|: c T^-alpha, c log T / T^2, c sqrt(log T) / T^2.
enum class DecayModel { None, PurePower, LogTOverT2, SqrtLogT2 };

std::string to_string(DecayModel model);
/// Accepts pure_power, logT_over_T2, sqrtlog_T2; throws InvalidArgument otherwise.
DecayModel parse_decay_model(std::string_view name);

struct ScanSample {
  double T = 0.0;
  double stat = 0.0;
  /// stat divided by the scan's normalizing function of T.
  double normalized = 0.0;
  /// Set when the sample is excluded from fits (e.g. near a sign change).
  bool flagged = false;
};

/// A grid of (T, statistic) pairs with fitted model parameters and extremes.
struct ScanReport {
  std::vector<ScanSample> samples;
  DecayModel model = DecayModel::None;
  std::vector<double> fitted_params;
  double residual_rms = 0.0;

  double max_normalized = 0.0;
  double min_normalized = 0.0;
  double argmax = 0.0;
  double argmin = 0.0;

  /// Recomputes the four extremes from samples.
  void update_extremes();
};

}  // namespace bsy
