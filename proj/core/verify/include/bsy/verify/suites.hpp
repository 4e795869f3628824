#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bsy/integral.hpp"
#include "bsy/precision.hpp"
#include "bsy/zeros.hpp"

namespace bsy::verify {

/// One measured quantity against its threshold.
struct Check {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
  /// Reported for context only; does not affect the suite verdict.
  bool informational = false;
};

struct SuiteResult {
  std::string criterion_id;
  /// Headline check (the first entry of `checks`).
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::vector<Check> checks;
  /// Set when the suite stopped on a library error.
  std::string error_kind;
  std::string error;
};

/// State shared between suites: the zero list and the I(T) ladder are the
/// expensive inputs, computed once and reused.
class SuiteContext {
 public:
  explicit SuiteContext(PrecisionConfig cfg = {});

  const PrecisionConfig& precision() const { return cfg_; }

  /// Verified zeros covering at least height T (computed or taken from an
  /// imported list that covers T).
  const ZeroList& zeros(double T);
  /// Uses `list` for every later request it covers.
  void provide_zeros(ZeroList list);

  /// I(T) over {10 * 2^k <= 10^4} at the base precision and refined 10x.
  const std::vector<double>& ladder_heights();
  const std::vector<IntegralResult>& ladder(bool refined);

 private:
  PrecisionConfig cfg_;
  ZeroList zeros_;
  std::vector<double> heights_;
  std::map<bool, std::vector<IntegralResult>> ladders_;
};

/// Suite ids in acceptance order.
const std::vector<std::string>& suite_ids();

/// Runs one suite. Library errors are caught and reported in `error` with
/// pass = false. Throws InvalidArgument for an unknown id.
SuiteResult run_suite(const std::string& id, SuiteContext& ctx);

}  // namespace bsy::verify
