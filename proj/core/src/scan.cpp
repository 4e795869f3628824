#include "bsy/scan.hpp"

#include <algorithm>

#include "bsy/error.hpp"

namespace bsy {

std::string to_string(DecayModel model) {
  switch (model) {
    case DecayModel::None: return "none";
    case DecayModel::PurePower: return "pure_power";
    case DecayModel::LogTOverT2: return "logT_over_T2";
    case DecayModel::SqrtLogT2: return "sqrtlog_T2";
  }
  return "none";
}

DecayModel parse_decay_model(std::string_view name) {
  if (name == "pure_power") return DecayModel::PurePower;
  if (name == "logT_over_T2") return DecayModel::LogTOverT2;
  if (name == "sqrtlog_T2") return DecayModel::SqrtLogT2;
  raise(ErrorKind::InvalidArgument, "unknown model '" + std::string(name) + "'");
}

void ScanReport::update_extremes() {
  if (samples.empty()) return;
  const auto [lo, hi] = std::minmax_element(
      samples.begin(), samples.end(),
      [](const ScanSample& a, const ScanSample& b) { return a.normalized < b.normalized; });
  min_normalized = lo->normalized;
  argmin = lo->T;
  max_normalized = hi->normalized;
  argmax = hi->T;
}

}  // namespace bsy
