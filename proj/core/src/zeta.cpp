#include "bsy/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "bsy/error.hpp"
#include "bsy/summation.hpp"

namespace bsy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kLogTableSize = std::size_t{1} << 18;
constexpr long long kMaxEulerMaclaurinN = 200'000'000;

// b_k = B_{2k} / (2k)! for k = 1..kMaxEulerMaclaurinTerms + 1, via
// B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}.
const std::array<double, PrecisionConfig::kMaxEulerMaclaurinTerms + 2>& bernoulli_ratios() {
  static const auto table = [] {
    std::array<double, PrecisionConfig::kMaxEulerMaclaurinTerms + 2> b{};
    constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (int k = 1; k < static_cast<int>(b.size()); ++k) {
      long double zeta2k;
      if (k == 1) {
        zeta2k = std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6;
      } else {
        constexpr int cut = 1000;
        const int e = 2 * k;
        long double s = 0;
        for (int n = cut - 1; n >= 1; --n) s += std::pow(static_cast<long double>(n), -e);
        const long double K = cut;
        s += std::pow(K, 1.0L - e) / (e - 1) + std::pow(K, -e) / 2 + e * std::pow(K, -e - 1.0L) / 12;
        zeta2k = s;
      }
      const long double mag = 2 * zeta2k / std::pow(two_pi, 2 * k);
      b[k] = static_cast<double>((k % 2 == 1) ? mag : -mag);
    }
    return b;
  }();
  return table;
}

const std::vector<extended>& log_table() {
  static std::once_flag once;
  static std::vector<extended> table;
  std::call_once(once, [] {
    table.resize(kLogTableSize);
    table[0] = 0;
    for (std::size_t n = 1; n < kLogTableSize; ++n) table[n] = std::log(static_cast<extended>(n));
  });
  return table;
}

inline extended log_of(std::size_t n, const std::vector<extended>& table) {
  return n < table.size() ? table[n] : std::log(static_cast<extended>(n));
}

// n^{-s} with the phase t*log(n) reduced in extended precision.
inline std::complex<double> power_minus_s(double sigma, double t, extended log_n) {
  const double mag = std::exp(-sigma * static_cast<double>(log_n));
  const double phase = reduce_phase(-static_cast<extended>(t) * log_n);
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

struct EmPlan {
  long long n = 0;  // main sum runs over 1..n-1
  int terms = 0;    // Bernoulli correction terms
  double truncation_bound = 0.0;
};

// Smallest N (grown geometrically) for which some M <= cfg cap meets the
// truncation target. Works in log space to avoid overflow of the rising
// factorials for large |s|.
EmPlan plan_euler_maclaurin(std::complex<double> s, double target, int max_terms) {
  const auto& b = bernoulli_ratios();
  const double sigma = s.real();
  const double abs_s = std::abs(s);
  long long n = std::max<long long>(10, static_cast<long long>(std::ceil(abs_s / kTwoPi)) + 2);
  std::vector<double> log_rising(2 * max_terms + 2);
  double acc = 0.0;
  for (int j = 0; j <= 2 * max_terms; ++j) {
    acc += std::log(std::abs(s + static_cast<double>(j)));
    log_rising[j] = acc;  // log |s (s+1) ... (s+j)|
  }
  while (n <= kMaxEulerMaclaurinN) {
    const double log_n = std::log(static_cast<double>(n));
    for (int m = 1; m <= max_terms; ++m) {
      // |T_{m+1}| = |b_{m+1}| |s...(s+2m)| N^{-sigma-2m-1}
      const double log_next = std::log(std::fabs(b[m + 1])) + log_rising[2 * m] -
                              (sigma + 2 * m + 1) * log_n;
      const double factor = std::abs(s + static_cast<double>(2 * m + 1)) / (sigma + 2 * m + 1);
      const double bound = std::exp(log_next) * factor;
      if (bound <= 0.5 * target) return {n, m, bound};
    }
    n = static_cast<long long>(std::ceil(n * 1.25)) + 1;
  }
  raise(ErrorKind::PrecisionUnreachable,
        "Euler-Maclaurin cannot meet target " + std::to_string(target) + " at |s| = " +
            std::to_string(abs_s));
}

// Everything after the main sum: N^{1-s}/(s-1) + N^{-s}/2 + sum_k T_k.
std::complex<double> em_tail(std::complex<double> s, long long n, int terms,
                             std::complex<double> n_pow_minus_s) {
  const auto& b = bernoulli_ratios();
  const double dn = static_cast<double>(n);
  std::complex<double> tail = n_pow_minus_s * dn / (s - 1.0) + 0.5 * n_pow_minus_s;
  // T_1 = b_1 s N^{-s-1}; T_{k+1} = T_k (b_{k+1}/b_k) (s+2k-1)(s+2k) / N^2.
  std::complex<double> term = b[1] * s * n_pow_minus_s / dn;
  tail += term;
  for (int k = 1; k < terms; ++k) {
    term *= (b[k + 1] / b[k]) * (s + static_cast<double>(2 * k - 1)) *
            (s + static_cast<double>(2 * k)) / (dn * dn);
    tail += term;
  }
  return tail;
}

extended theta_asymptotic(double t) {
  const extended x = t;
  const extended pi = std::numbers::pi_v<extended>;
  const extended main = x / 2 * std::log(x / (2 * pi)) - x / 2 - pi / 8;
  const extended inv = 1 / x;
  const extended inv2 = inv * inv;
  const extended series =
      inv * (1.0L / 48 + inv2 * (7.0L / 5760 + inv2 * (31.0L / 80640 +
                                                       inv2 * (127.0L / 430080 + inv2 * 511.0L / 1216512))));
  return main + series;
}

#include "rs_coefficients.inc"

}  // namespace

ZetaValue zeta_em(ComplexPoint point, const PrecisionConfig& cfg) {
  cfg.validate();
  const std::complex<double> s = point.value();
  require(std::isfinite(point.sigma) && std::isfinite(point.t), ErrorKind::InvalidArgument,
          "s must be finite");
  require(point.sigma >= -1.0, ErrorKind::InvalidArgument, "zeta_em requires sigma >= -1");
  if (std::abs(s - 1.0) < kPoleThreshold) {
    raise(ErrorKind::PoleAt1, "|s - 1| below " + std::to_string(kPoleThreshold));
  }
  const EmPlan plan = plan_euler_maclaurin(s, cfg.target_abs_error, cfg.euler_maclaurin_terms);
  const auto& logs = log_table();

  CompensatedSum<extended> re, im;
  double magnitude_sq_sum = 0;
  for (long long n = 1; n < plan.n; ++n) {
    const extended ln = log_of(static_cast<std::size_t>(n), logs);
    const double mag = std::exp(-point.sigma * static_cast<double>(ln));
    const double phase = reduce_phase(-static_cast<extended>(point.t) * ln);
    re.add(mag * std::cos(phase));
    im.add(mag * std::sin(phase));
    magnitude_sq_sum += mag * mag;
  }
  const auto n_pow = power_minus_s(point.sigma, point.t, log_of(static_cast<std::size_t>(plan.n), logs));
  const std::complex<double> tail = em_tail(s, plan.n, plan.terms, n_pow);
  const std::complex<double> value{static_cast<double>(re.value()) + tail.real(),
                                   static_cast<double>(im.value()) + tail.imag()};
  // Per-term rounding (exp, sincos, product) is independent across n.
  const double rounding =
      4 * kEps * (std::sqrt(magnitude_sq_sum) + std::abs(tail)) + kEps * std::abs(value);
  const double bound = plan.truncation_bound + rounding;
  if (bound > cfg.target_abs_error) {
    raise(ErrorKind::PrecisionUnreachable, "rounding floor " + std::to_string(rounding) +
                                               " exceeds target at t = " + std::to_string(point.t));
  }
  return {value, bound};
}

double rs_theta(double t) {
  if (std::fabs(t) < kThetaMinT) {
    raise(ErrorKind::DomainTooSmall, "rs_theta requires |t| >= " + std::to_string(kThetaMinT));
  }
  const double v = static_cast<double>(theta_asymptotic(std::fabs(t)));
  return t >= 0 ? v : -v;
}

std::complex<double> log_gamma(std::complex<double> z_in) {
  require(z_in.real() > 0, ErrorKind::InvalidArgument, "log_gamma requires Re z > 0");
  using cx = std::complex<extended>;
  cx z{z_in.real(), z_in.imag()};
  cx shift_sum{0, 0};
  while (std::abs(z) < 20) {
    shift_sum += std::log(z);
    z += 1;
  }
  // Stirling series with B_{2k} / (2k (2k-1) z^{2k-1}), k = 1..8.
  static constexpr extended coeff[] = {1.0L / 12,         -1.0L / 360,       1.0L / 1260,
                                       -1.0L / 1680,      1.0L / 1188,       -691.0L / 360360,
                                       1.0L / 156,        -3617.0L / 122400};
  const cx inv = extended{1} / z;
  const cx inv2 = inv * inv;
  cx series{0, 0};
  for (int k = 7; k >= 0; --k) series = series * inv2 + coeff[k];
  series *= inv;
  const extended half_log_two_pi = 0.91893853320467274178032973640561764L;
  const cx result = (z - extended{0.5}) * std::log(z) - z + half_log_two_pi + series - shift_sum;
  return {static_cast<double>(result.real()), static_cast<double>(result.imag())};
}

double theta_loggamma(double t) {
  const double sign = t < 0 ? -1.0 : 1.0;
  const double at = std::fabs(t);
  const double im = log_gamma({0.25, 0.5 * at}).imag();
  return sign * (im - 0.5 * at * std::log(kPi));
}

double rs_correction(int k, double p) {
  require(k >= 0 && k <= PrecisionConfig::kMaxRsCorrectionTerms, ErrorKind::InvalidArgument,
          "Riemann-Siegel correction index out of range");
  const double x = 2 * p - 1;
  double b1 = 0, b2 = 0;
  for (int j = kRsChebDegree; j >= 1; --j) {
    const double b0 = 2 * x * b1 - b2 + kRsCheb[k][j];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + kRsCheb[k][0];
}

double rs_error_bound(double t, int terms) {
  // Gabcke (1979), valid for t >= 200. Below that the constants are scaled by
  // a factor checked against Euler-Maclaurin down to t = 10.
  static constexpr double d[] = {0.127, 0.053, 0.011, 0.031, 0.017};
  const double a = std::sqrt(t / kTwoPi);
  double bound = d[terms] * std::pow(a, -(2.0 * terms + 3.0) / 2.0);
  if (t < 200) bound *= 10.0;
  return bound;
}

HardyValue hardy_z_em(double t, const PrecisionConfig& cfg) {
  require(t >= 0 && std::isfinite(t), ErrorKind::InvalidArgument, "hardy_z requires t >= 0");
  const ZetaValue z = zeta_em({0.5, t}, cfg);
  // The asymptotic series loses about 2e-14 at t = 10; below 40 the
  // log-gamma route is the more accurate one.
  const extended theta = t >= 40 ? theta_asymptotic(t) : static_cast<extended>(theta_loggamma(t));
  const std::complex<double> rotated = std::polar(1.0, reduce_phase(theta)) * z.value;
  const double theta_err = 2e-15 + 4 * kEps * std::fabs(static_cast<double>(theta)) * kEps;
  return {rotated.real(), z.abs_error + theta_err * std::abs(z.value), rotated.imag(),
          ZMethod::EulerMaclaurin};
}

HardyValue hardy_z_rs(double t, const PrecisionConfig& cfg) {
  cfg.validate();
  require(t >= kTwoPi, ErrorKind::DomainTooSmall, "Riemann-Siegel requires t >= 2 pi");
  const int terms = cfg.rs_correction_terms;
  const extended a = std::sqrt(static_cast<extended>(t) / (2 * std::numbers::pi_v<extended>));
  const long long m = static_cast<long long>(std::floor(a));
  const double p = static_cast<double>(a - m);
  const extended theta = theta_asymptotic(t);
  const auto& logs = log_table();
  CompensatedSum<extended> sum;
  for (long long n = 1; n <= m; ++n) {
    const extended ln = log_of(static_cast<std::size_t>(n), logs);
    const double phase = reduce_phase(theta - static_cast<extended>(t) * ln);
    sum.add(std::cos(phase) / std::sqrt(static_cast<double>(n)));
  }
  double correction = 0.0;
  const double inv_a = 1.0 / static_cast<double>(a);
  double power = 1.0;
  for (int k = 0; k <= terms; ++k) {
    correction += rs_correction(k, p) * power;
    power *= inv_a;
  }
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m-1}
  const double value = 2 * static_cast<double>(sum.value()) + sign * std::sqrt(inv_a) * correction;
  const double rounding = 8 * kEps * std::sqrt(static_cast<double>(m)) * 2 + 1e-14 * static_cast<double>(a);
  return {value, rs_error_bound(t, terms) + rounding, 0.0, ZMethod::RiemannSiegel};
}

HardyValue hardy_z(double t, const PrecisionConfig& cfg) {
  require(t >= 0 && std::isfinite(t), ErrorKind::InvalidArgument, "hardy_z requires t >= 0");
  if (t >= kRiemannSiegelMinT &&
      rs_error_bound(t, cfg.rs_correction_terms) <= 0.5 * cfg.target_abs_error) {
    return hardy_z_rs(t, cfg);
  }
  return hardy_z_em(t, cfg);
}

LogValue log_abs_zeta_half_checked(double t, const PrecisionConfig& cfg) {
  HardyValue z = hardy_z(t, cfg);
  const double threshold = 10 * cfg.target_abs_error;
  if (std::fabs(z.value) < threshold) {
    raise(ErrorKind::NearZeroOrdinate,
          "|Z(t)| = " + std::to_string(std::fabs(z.value)) + " below " + std::to_string(threshold) +
              " at t = " + std::to_string(t));
  }
  double rel = z.abs_error / std::fabs(z.value);
  if (rel > cfg.target_abs_error) {
    // Tighten the evaluation so the error in log|Z| meets the target where the
    // rounding floor allows it.
    PrecisionConfig tight = cfg;
    tight.target_abs_error = std::max(cfg.target_abs_error * std::fabs(z.value), 1e-15);
    tight.quad_tol = std::max(tight.quad_tol, tight.target_abs_error);
    tight.euler_maclaurin_terms = PrecisionConfig::kMaxEulerMaclaurinTerms;
    try {
      z = hardy_z_em(t, tight);
      rel = z.abs_error / std::fabs(z.value);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionUnreachable) throw;
    }
  }
  return {std::log(std::fabs(z.value)), rel};
}

double log_abs_zeta_half(double t, const PrecisionConfig& cfg) {
  return log_abs_zeta_half_checked(t, cfg).value;
}

std::complex<double> log_zeta_branch(double sigma, double t, const PrecisionConfig& cfg) {
  require(sigma >= 0.5, ErrorKind::InvalidArgument, "log_zeta_branch requires sigma >= 1/2");
  require(t >= 0, ErrorKind::InvalidArgument, "log_zeta_branch requires t >= 0");
  if (sigma >= 2.0) {
    // |zeta(s) - 1| <= zeta(2) - 1 < 1 here, so the principal logarithm is the
    // continuous branch.
    return std::log(zeta_em({sigma, t}, cfg).value);
  }
  const double small = 10 * cfg.target_abs_error;
  std::complex<double> previous = zeta_em({2.0, t}, cfg).value;
  double arg = std::arg(previous);
  double x = 2.0;
  double step = 0.0625;
  while (x > sigma) {
    step = std::min(step, x - sigma);
    int halvings = 0;
    std::complex<double> next;
    double delta = 0.0;
    for (;;) {
      const double target_x = (x - step <= sigma + 1e-15) ? sigma : x - step;
      next = zeta_em({target_x, t}, cfg).value;
      if (std::abs(next) < small) {
        raise(ErrorKind::ZeroOnPath, "|zeta| below " + std::to_string(small) + " at sigma = " +
                                         std::to_string(target_x) + ", t = " + std::to_string(t));
      }
      const std::complex<double> ratio = next / previous;
      delta = std::arg(ratio);
      if (std::fabs(delta) <= kPi / 4 && std::fabs(std::log(std::abs(ratio))) <= 1.0) {
        step = x - target_x;
        break;
      }
      step *= 0.5;
      if (++halvings > 48) {
        raise(ErrorKind::BranchAmbiguous,
              "step control failed near sigma = " + std::to_string(x) + ", t = " + std::to_string(t));
      }
    }
    x -= step;
    if (x < sigma) x = sigma;
    arg += delta;
    previous = next;
    if (halvings == 0) step = std::min(2 * step, 0.25);
  }
  return {std::log(std::abs(previous)), arg};
}

double zeta_vertical_grid(double sigma, double t0, double step, std::size_t count,
                          const PrecisionConfig& cfg,
                          const std::function<void(std::size_t, std::complex<double>)>& sink) {
  cfg.validate();
  require(sigma >= -1.0 && std::isfinite(t0) && std::isfinite(step) && step > 0,
          ErrorKind::InvalidArgument, "invalid vertical grid");
  if (count == 0) return 0.0;
  const auto& logs = log_table();
  const double t_last = t0 + step * static_cast<double>(count - 1);
  require(std::abs(std::complex<double>(sigma, t0) - 1.0) >= kPoleThreshold &&
              std::abs(std::complex<double>(sigma, t_last) - 1.0) >= kPoleThreshold,
          ErrorKind::PoleAt1, "vertical grid too close to s = 1");

  std::vector<double> zr, zi, wr, wi;
  double max_bound = 0.0;
  std::size_t j = 0;
  while (j < count) {
    // Plan for a block ending at most 4096 points later; re-seeding length is
    // chosen so recurrence drift stays below a quarter of the target.
    const std::size_t block_end = std::min(count, j + 4096);
    const double t_hi = t0 + step * static_cast<double>(block_end - 1);
    const double abs_s = std::max(std::abs(std::complex<double>(sigma, t_hi)),
                                  std::abs(std::complex<double>(sigma, t0 + step * j)));
    const EmPlan plan = plan_euler_maclaurin({sigma, std::copysign(abs_s, 1.0)},
                                             cfg.target_abs_error, cfg.euler_maclaurin_terms);
    const std::size_t n_terms = static_cast<std::size_t>(plan.n - 1);
    double magnitude_sum = 0.0;
    double magnitude_sq_sum = 0.0;
    zr.assign(n_terms, 0.0);
    zi.assign(n_terms, 0.0);
    wr.resize(n_terms);
    wi.resize(n_terms);
    for (std::size_t n = 1; n <= n_terms; ++n) {
      const extended ln = log_of(n, logs);
      const double phase = reduce_phase(-static_cast<extended>(step) * ln);
      wr[n - 1] = std::cos(phase);
      wi[n - 1] = std::sin(phase);
      const double mag = std::exp(-sigma * static_cast<double>(ln));
      magnitude_sum += mag;
      magnitude_sq_sum += mag * mag;
    }
    // Rounding in the recurrence is independent across n, so the drift of the
    // sum grows like sqrt(sum |n^{-s}|^2) per step rather than sum |n^{-s}|.
    const double drift_per_step = 4 * kEps * std::sqrt(magnitude_sq_sum);
    const std::size_t reseed = std::clamp<std::size_t>(
        static_cast<std::size_t>(0.25 * cfg.target_abs_error / drift_per_step), 8, 1024);
    const double rounding = 4 * kEps * std::sqrt(magnitude_sq_sum) +
                            kEps * std::sqrt(static_cast<double>(n_terms)) * magnitude_sum;

    while (j < block_end) {
      const std::size_t seg_end = std::min(block_end, j + reseed);
      const double ts = t0 + step * static_cast<double>(j);
      for (std::size_t n = 1; n <= n_terms; ++n) {
        const auto z = power_minus_s(sigma, ts, log_of(n, logs));
        zr[n - 1] = z.real();
        zi[n - 1] = z.imag();
      }
      for (std::size_t k = j; k < seg_end; ++k) {
        const double t = t0 + step * static_cast<double>(k);
        double sr = 0.0, si = 0.0;
        double* __restrict pr = zr.data();
        double* __restrict pi = zi.data();
        const double* __restrict qr = wr.data();
        const double* __restrict qi = wi.data();
#pragma omp simd reduction(+ : sr, si)
        for (std::size_t n = 0; n < n_terms; ++n) {
          const double a = pr[n], b = pi[n];
          sr += a;
          si += b;
          pr[n] = a * qr[n] - b * qi[n];
          pi[n] = a * qi[n] + b * qr[n];
        }
        const std::complex<double> s{sigma, t};
        const auto n_pow = power_minus_s(sigma, t, log_of(static_cast<std::size_t>(plan.n), logs));
        const std::complex<double> value =
            std::complex<double>{sr, si} + em_tail(s, plan.n, plan.terms, n_pow);
        sink(k, value);
      }
      j = seg_end;
    }
    max_bound = std::max(max_bound, plan.truncation_bound + rounding +
                                        drift_per_step * static_cast<double>(reseed));
  }
  return max_bound;
}

}  // namespace bsy
