#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bsy/precision.hpp"

namespace bsy {

enum class ZeroSource { Computed, Imported };

/// Ascending ordinates of zeros 1/2 + i gamma with 0 < gamma <= covered_height.
struct ZeroList {
  std::vector<double> ordinates;
  double covered_height = 0.0;
  ZeroSource source = ZeroSource::Computed;
  bool verified = false;

  /// Number of ordinates <= t.
  std::size_t count_below(double t) const;
  /// Ordinate closest to t, or NaN for an empty list.
  double nearest(double t) const;
};

/// A hypothetical zero off the critical line, beta in (1/2, 1).
struct ZeroCandidate {
  double beta = 0.75;
  double gamma = 0.0;
};

struct ZeroSearchOptions {
  /// Absolute accuracy of each returned ordinate.
  double ordinate_tol = 1e-9;
  /// Step halvings allowed per window before giving up.
  int max_refinements = 6;
};

/// N(t), the number of zeros with 0 < gamma <= t, from theta(t)/pi + 1 + S(t),
/// cross-checked against the number of sign changes of Z on [0, t].
/// Throws OnOrdinate when t is (numerically) an ordinate and Inconsistent when
/// the two counts cannot be reconciled.
long long count_zeros(double t, const PrecisionConfig& cfg);

/// theta(t)/pi + 1 + S(t) rounded, without the sign-change cross-check.
long long count_zeros_formula(double t, const PrecisionConfig& cfg);

/// Number of sign changes of Z on (0, t] on a grid of the given step.
long long count_sign_changes(double t, double step, const PrecisionConfig& cfg);

/// Every ordinate in (0, T], found window by window: Z is scanned for sign
/// changes, the step is halved until each window holds as many sign changes as
/// its zero count predicts, and each bracket is refined to `ordinate_tol`.
ZeroList find_zeros_up_to(double T, const PrecisionConfig& cfg,
                          const ZeroSearchOptions& options = {});

/// Parses the zero file format: '#' comments, one ordinate per line, strictly
/// ascending. A `# covered_height = X` comment sets the covered height;
/// otherwise it is the last ordinate.
ZeroList import_zeros(std::istream& in);
ZeroList import_zeros_file(const std::string& path);

/// Writes the list in the format read by import_zeros, 17 significant digits.
void export_zeros(const ZeroList& list, std::ostream& out);
void export_zeros_file(const ZeroList& list, const std::string& path);

/// Checks the length against count_zeros(covered_height) and that Z vanishes
/// to within the ordinate tolerance at every entry. Returns a copy with
/// verified = true; throws Inconsistent naming the first failing index.
ZeroList verify_zero_list(const ZeroList& list, const PrecisionConfig& cfg,
                          double ordinate_tol = 1e-8);

}  // namespace bsy
