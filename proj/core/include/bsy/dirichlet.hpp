#pragma once

#include <complex>

#include "bsy/precision.hpp"
#include "bsy/resonator.hpp"

namespace bsy {

/// R(t) = sum_n r(n) n^{-it}.
std::complex<double> eval_R(const ResonatorTable& table, double t);

/// int_T^{2T} |R(t)|^2 dt in closed form:
/// T sum r(n)^2 + 2 sum_{m < n} r(m) r(n) (sin(2T l) - sin(T l)) / l, l = log(n/m).
double mean_square_exact(const ResonatorTable& table, double T);

/// Triangle-inequality bound on |mean_square_exact / (T sum r^2) - 1|.
double mean_square_offdiagonal_delta(const ResonatorTable& table, double T);

struct Lemma3Request {
  double alpha = 0.6;
  double h = 0.0;
  double T = 1000.0;
  const ResonatorTable* table = nullptr;
  /// Minimum distance of alpha from 1/2 for the numerical left-hand side.
  double eps_margin = 0.05;
};

struct ComplexEstimate {
  std::complex<double> value;
  double abs_error = 0.0;
};

/// int_T^{2T} log zeta(alpha + i(t + h)) |R(t)|^2 dt.
///
/// The bulk uses the trapezoid rule on a uniform grid with an erf window that
/// vanishes to rounding at both ends (the windowed integrand is smooth, so the
/// rule converges geometrically; the error estimate compares steps d and 2d).
/// The two ends use adaptive Gauss-Kronrod. log zeta is anchored on the
/// standard branch once and continued along t by phase unwrapping.
ComplexEstimate lemma3_lhs(const Lemma3Request& req, const PrecisionConfig& cfg);

/// T sum_{mn <= N} Lambda(n) r(m) r(mn) / (n^{alpha + ih} log n).
std::complex<double> lemma3_rhs(const Lemma3Request& req);

struct Lemma3Comparison {
  ComplexEstimate lhs;
  std::complex<double> rhs;
  double gap = 0.0;
  /// gap / (N (log TN)^{3/2} sum r^2).
  double normalized_gap = 0.0;
};

Lemma3Comparison lemma3_compare(const Lemma3Request& req, const PrecisionConfig& cfg);

struct ResonanceStatistic {
  /// (2/pi) sum Lambda(n) r(m) r(mn) sin^2((h/2) log n) / (sqrt(n) (log n)^2) / sum r^2.
  double sin2_ratio = 0.0;
  /// 2 sum Lambda(n) r(m) r(mn) sin(h log n) / (sqrt(n) (log n)^2) / sum r^2.
  double sin_ratio = 0.0;
  /// The sin numerator times 2T over the exact mean square on [T, 2T].
  double sin_ratio_exact_mv = 0.0;
};

ResonanceStatistic s1_resonance_statistic(const ResonatorTable& table, double h, double T,
                                          const PrecisionConfig& cfg);

/// Visits every (m, n, r(m), r(mn)) with Lambda(n) > 0 and m, mn in the table.
template <typename F>
void for_each_prime_power_pair(const ResonatorTable& table, F&& visit);

}  // namespace bsy

#include "bsy/detail/dirichlet_pairs.hpp"
