#include "bsy/quadrature.hpp"

#include <map>
#include <mutex>
#include <numbers>

#include "bsy/error.hpp"

namespace bsy {

namespace {

GaussRule build_gauss_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    long double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    const long double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = static_cast<double>(-x);
    rule.nodes[n - 1 - i] = static_cast<double>(x);
    rule.weights[i] = rule.weights[n - 1 - i] = static_cast<double>(w);
  }
  return rule;
}

// Integral over u in [0, length] of log(u + offset) * weight(origin + dir * u).
IntegralResult one_sided(const std::function<double(double)>& weight, double origin, double dir,
                         double length, double offset, double min_width, double abs_tol,
                         int max_subdivisions) {
  IntegralResult out;
  auto f = [&](double u) { return std::log(u + offset) * weight(origin + dir * u); };
  auto regular = [&](double lo, double hi) {
    const double tol = abs_tol * (hi - lo) / length;
    out += integrate_adaptive(f, lo, hi, tol, max_subdivisions);
  };
  double hi = length;
  const double floor_width = std::max(min_width, 0.0);
  while (hi > 0) {
    if (offset > 0 && hi <= offset) {
      regular(0.0, hi);
      break;
    }
    if (hi <= floor_width) {
      const double w = hi;
      const double g0 = weight(origin);
      const double g1 = weight(origin + dir * w);
      const double slope = std::fabs(g1 - g0) / w;
      const double x = w + offset;
      double log_part = x * std::log(x) - x;
      if (offset > 0) log_part -= offset * std::log(offset) - offset;
      out.value += g0 * log_part;
      const double big_log = std::fabs(std::log(std::max(offset, w * 1e-3))) + std::fabs(std::log(x));
      out.abs_error_est += 2.0 * slope * w * w * (big_log + 1.0);
      ++out.subintervals;
      break;
    }
    regular(0.5 * hi, hi);
    hi *= 0.5;
  }
  return out;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  require(n >= 1 && n <= 512, ErrorKind::InvalidArgument, "Gauss-Legendre order out of range");
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_rule(n)).first;
  return it->second;
}

IntegralResult integrate_log_singular(const std::function<double(double)>& weight, double a,
                                      double b, double singularity, double min_width,
                                      double abs_tol, int max_subdivisions) {
  if (a == b) return {};
  if (a > b) {
    IntegralResult r = integrate_log_singular(weight, b, a, singularity, min_width, abs_tol,
                                              max_subdivisions);
    r.value = -r.value;
    return r;
  }
  IntegralResult out;
  if (singularity <= a) {
    out += one_sided(weight, a, +1.0, b - a, a - singularity, min_width, abs_tol, max_subdivisions);
  } else if (singularity >= b) {
    out += one_sided(weight, b, -1.0, b - a, singularity - b, min_width, abs_tol, max_subdivisions);
  } else {
    const double left = abs_tol * (singularity - a) / (b - a);
    out += one_sided(weight, singularity, -1.0, singularity - a, 0.0, min_width, left,
                     max_subdivisions);
    out += one_sided(weight, singularity, +1.0, b - singularity, 0.0, min_width, abs_tol - left,
                     max_subdivisions);
  }
  out.singularities_handled = 1;
  return out;
}

}  // namespace bsy
