#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bsy/precision.hpp"
#include "bsy/resonator.hpp"

// Reference computations used to check the library. Each one takes a
// different route from the production code (plain loops, brute force,
// different series) and trades speed for simplicity.
namespace bsy::verify {

/// zeta(s) from Borwein's accelerated alternating series for eta(s) with `n`
/// terms, evaluated in extended precision. Accurate for |t| up to about 40.
std::complex<double> zeta_borwein(std::complex<double> s, int n = 120);

/// Z(t) = Re(e^{i theta(t)} zeta(1/2 + it)) through zeta_em and theta_loggamma.
double hardy_z_reference(double t, const PrecisionConfig& cfg);

/// Every sign change of Z on (0, T], scanned at a fixed step, each bracket
/// bisected down to `tol`.
std::vector<double> sign_change_zeros(double T, const PrecisionConfig& cfg, double step = 0.01,
                                      double tol = 1e-12);

/// 2 * int_0^T log|zeta(1/2 + it)| / (1/4 + t^2) by the composite trapezoid
/// rule on `points` nodes. Only sensible below the first ordinate.
double trapezoid_I(double T, std::size_t points, const PrecisionConfig& cfg);

/// Lambda(n) by trial division.
double von_mangoldt_naive(std::uint64_t n);

/// Squarefree n <= N with every prime factor in (A, B), by trial division of
/// each candidate, with r(n) = prod L (log p)^nu / sqrt(p), sign mu(n) for Minus.
std::vector<ResonatorEntry> resonator_brute_force(const ResonatorParams& params,
                                                  SignVariant variant);

/// Numerator of the resonance ratio by the double loop over table entries
/// m <= k with m | k and Lambda(k / m) > 0.
double numerator_pair_loop(const ResonatorTable& table, int mu, int nu, double h);

/// int_T^{2T} |R(t)|^2 dt by 20-point Gauss-Legendre on unit panels, with R
/// summed in extended precision.
double mean_square_quadrature(const ResonatorTable& table, double T);

struct SeriesValue {
  std::complex<double> value;
  /// Bound on the omitted terms n > n_max.
  double tail_bound = 0.0;
};

/// int_T^{2T} log zeta(alpha + i(t + h)) |R(t)|^2 dt from the Dirichlet series
/// of log zeta, integrated term by term in closed form over n <= n_max.
/// Requires alpha > 1 and n_max above the largest table entry.
SeriesValue lemma3_series(const ResonatorTable& table, double alpha, double h, double T,
                          std::uint64_t n_max);

/// log zeta(s) = sum Lambda(n) / (n^s log n) for Re s >= 2, n <= n_max.
std::complex<double> log_zeta_dirichlet(std::complex<double> s, std::uint64_t n_max);

/// (1/pi) int_2^inf log|zeta(sigma + it)| d sigma, the part of Littlewood's
/// integral beyond sigma = 2, as sum Lambda(n) cos(t log n) / (pi n^2 log^2 n)
/// over n <= n_max (omitted terms below 1 / (n_max log n_max)).
double littlewood_tail(double t, std::uint64_t n_max = 1'000'000);

}  // namespace bsy::verify
