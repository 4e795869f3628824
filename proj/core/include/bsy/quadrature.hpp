#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <span>
#include <vector>

namespace bsy {

/// Value plus diagnostics of a (possibly singular) quadrature.
struct IntegralResult {
  double value = 0.0;
  double abs_error_est = 0.0;
  int subintervals = 0;
  int singularities_handled = 0;
  bool converged = true;
  /// Part of abs_error_est due to errors in the integrand values rather than
  /// the quadrature rule.
  double evaluation_error = 0.0;

  IntegralResult& operator+=(const IntegralResult& other) {
    value += other.value;
    abs_error_est += other.abs_error_est;
    subintervals += other.subintervals;
    singularities_handled += other.singularities_handled;
    evaluation_error += other.evaluation_error;
    converged = converged && other.converged;
    return *this;
  }
};

namespace gk21 {

// QUADPACK qk21 abscissae; odd entries are the 10-point Gauss nodes.
inline constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525725235, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Estimate {
  double a, b, value, error;
  /// Rounding floor of `error`: 50 eps times the integral of |f|.
  double floor;
  bool operator<(const Estimate& other) const { return error < other.error; }
};

template <typename F>
Estimate rule(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[10];
  double gauss = 0.0;
  double abs_sum = std::fabs(kronrod);
  std::array<double, 21> values{};
  values[10] = fc;
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kNodes[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    values[j] = f1;
    values[20 - j] = f2;
    kronrod += kKronrodWeights[j] * (f1 + f2);
    abs_sum += kKronrodWeights[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1 + f2);
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[10] * std::fabs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    asc += kKronrodWeights[j] * (std::fabs(values[j] - mean) + std::fabs(values[20 - j] - mean));
  }
  const double result = kronrod * half;
  const double resabs = abs_sum * std::fabs(half);
  const double resasc = asc * std::fabs(half);
  double err = std::fabs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double floor = 50 * eps * resabs;
  if (resabs > std::numeric_limits<double>::min() / (50 * eps)) err = std::max(floor, err);
  return {a, b, result, err, floor};
}

}  // namespace gk21

/// Globally adaptive 21-point Gauss-Kronrod quadrature with an absolute
/// tolerance. Subdivides the interval with the largest error estimate until
/// the summed estimate is below `abs_tol`, or below twice the summed rounding
/// floor (a tolerance under the rounding level cannot be met by subdividing),
/// or below twice `noise()`, the caller's bound on the integral of the errors
/// in the values of f, or `max_subdivisions` is reached (then `converged` is
/// false).
template <typename F, typename Noise>
IntegralResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                  int max_subdivisions, Noise&& noise) {
  IntegralResult out;
  if (a == b) return out;
  std::priority_queue<gk21::Estimate> heap;
  heap.push(gk21::rule(f, a, b));
  double total_err = heap.top().error;
  double total_floor = heap.top().floor;
  int count = 1;
  auto met = [&] { return total_err <= std::max({abs_tol, 2 * total_floor, 2 * noise()}); };
  while (!met() && count < max_subdivisions) {
    const gk21::Estimate worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) break;
    heap.pop();
    const auto left = gk21::rule(f, worst.a, mid);
    const auto right = gk21::rule(f, mid, worst.b);
    total_err += left.error + right.error - worst.error;
    total_floor += left.floor + right.floor - worst.floor;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // Deterministic reduction: sort the pieces by left endpoint before summing.
  std::vector<gk21::Estimate> pieces;
  pieces.reserve(heap.size());
  while (!heap.empty()) {
    pieces.push_back(heap.top());
    heap.pop();
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& x, const auto& y) { return x.a < y.a; });
  double value = 0.0, comp = 0.0, err = 0.0;
  for (const auto& p : pieces) {
    const double y = p.value - comp;
    const double t = value + y;
    comp = (t - value) - y;
    value = t;
    err += p.error;
  }
  out.value = value;
  out.abs_error_est = err;
  out.subintervals = count;
  out.converged = met();
  return out;
}

template <typename F>
IntegralResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                  int max_subdivisions) {
  return integrate_adaptive(std::forward<F>(f), a, b, abs_tol, max_subdivisions,
                            [] { return 0.0; });
}

/// Gauss-Legendre nodes and weights on [-1, 1]; cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

/// Integral of log|t - singularity| * weight(t) over [a, b].
///
/// The interval is cut at the singularity (when inside) and each side is
/// meshed geometrically toward it with ratio 1/2. Pieces whose distance to the
/// singularity is at least their own width are integrated by adaptive
/// Gauss-Kronrod with a share of `abs_tol` proportional to their width; the
/// innermost piece, of width at most `min_width`, uses the leading-order
/// closed form weight(c) * w * (log w - 1) with a derivative-based bound.
IntegralResult integrate_log_singular(const std::function<double(double)>& weight, double a,
                                      double b, double singularity, double min_width,
                                      double abs_tol, int max_subdivisions);

}  // namespace bsy
