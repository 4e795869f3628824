#include "bsy/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "bsy/error.hpp"
#include "bsy/quadrature.hpp"
#include "bsy/summation.hpp"
#include "bsy/zeta.hpp"

namespace bsy::verify {

namespace {

using cext = std::complex<extended>;

struct PrimePower {
  std::uint64_t n;
  double lambda;
};

// Prime powers up to n_max with Lambda(n), from a smallest-factor sieve.
std::shared_ptr<const std::vector<PrimePower>> prime_powers(std::uint64_t n_max) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::shared_ptr<const std::vector<PrimePower>>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n_max); it != cache.end()) return it->second;
  std::vector<std::uint32_t> spf(n_max + 1, 0);
  auto out = std::make_shared<std::vector<PrimePower>>();
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    if (spf[i] == 0) {
      for (std::uint64_t j = i; j <= n_max; j += i) {
        if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
      }
    }
    std::uint64_t m = i;
    const std::uint64_t p = spf[i];
    while (m % p == 0) m /= p;
    if (m == 1) out->push_back({i, std::log(static_cast<double>(p))});
  }
  cache.emplace(n_max, out);
  return out;
}

double theta_of(double t) { return theta_loggamma(t); }

}  // namespace

std::complex<double> zeta_borwein(std::complex<double> s, int n) {
  require(n >= 10 && n <= 400, ErrorKind::InvalidArgument, "Borwein order out of range");
  // d_k = n sum_{i <= k} (n + i - 1)! 4^i / ((n - i)! (2i)!)
  std::vector<extended> d(n + 1);
  extended term = 1.0L / n;
  extended acc = term;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0L * (n + i - 1) * (n - i + 1) / (static_cast<extended>(2 * i) * (2 * i - 1));
    acc += term;
    d[i] = n * acc;
  }
  const cext se(s.real(), s.imag());
  cext eta = 0;
  for (int k = 0; k < n; ++k) {
    const extended lk = std::log(static_cast<extended>(k + 1));
    const extended mag = std::exp(-se.real() * lk);
    const extended ph = -se.imag() * lk;
    const cext power(mag * std::cos(ph), mag * std::sin(ph));
    const extended c = (d[k] - d[n]) / d[n];
    eta += (k % 2 == 0 ? c : -c) * power;
  }
  eta = -eta;
  const cext two_power = std::exp((1.0L - se) * std::log(2.0L));
  const cext z = eta / (1.0L - two_power);
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

double hardy_z_reference(double t, const PrecisionConfig& cfg) {
  const std::complex<double> z = zeta_em({0.5, t}, cfg).value;
  const double th = theta_of(t);
  return std::cos(th) * z.real() - std::sin(th) * z.imag();
}

std::vector<double> sign_change_zeros(double T, const PrecisionConfig& cfg, double step, double tol) {
  require(T > 0 && step > 0, ErrorKind::InvalidArgument, "sign_change_zeros needs T, step > 0");
  std::vector<double> out;
  double a = step;
  double fa = hardy_z_reference(a, cfg);
  while (a < T) {
    const double b = std::min(a + step, T);
    const double fb = hardy_z_reference(b, cfg);
    if ((fa < 0) != (fb < 0)) {
      double lo = a, hi = b, flo = fa;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = hardy_z_reference(mid, cfg);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  return out;
}

double trapezoid_I(double T, std::size_t points, const PrecisionConfig& cfg) {
  require(points >= 2, ErrorKind::InvalidArgument, "trapezoid needs two points");
  const double h = T / static_cast<double>(points - 1);
  auto f = [&](double t) {
    return std::log(std::abs(zeta_em({0.5, t}, cfg).value)) / (0.25 + t * t);
  };
  CompensatedSum<double> sum;
  for (std::size_t i = 0; i < points; ++i) {
    const double w = (i == 0 || i + 1 == points) ? 0.5 : 1.0;
    sum.add(w * f(h * static_cast<double>(i)));
  }
  return 2 * h * sum.value();
}

double von_mangoldt_naive(std::uint64_t n) {
  if (n < 2) return 0.0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
    }
  }
  return std::log(static_cast<double>(n));
}

std::vector<ResonatorEntry> resonator_brute_force(const ResonatorParams& params,
                                                  SignVariant variant) {
  std::vector<ResonatorEntry> out;
  for (std::uint64_t n = 1; n <= params.N; ++n) {
    std::uint64_t m = n;
    bool ok = true;
    double r = 1.0;
    int factors = 0;
    for (std::uint64_t p = 2; p * p <= m && ok; ++p) {
      if (m % p != 0) continue;
      m /= p;
      if (m % p == 0) ok = false;
      const double pd = static_cast<double>(p);
      if (!(pd > params.A && pd < params.B)) ok = false;
      r *= params.L * std::pow(std::log(pd), params.nu) / std::sqrt(pd);
      ++factors;
    }
    if (ok && m > 1) {
      const double pd = static_cast<double>(m);
      if (!(pd > params.A && pd < params.B)) ok = false;
      r *= params.L * std::pow(std::log(pd), params.nu) / std::sqrt(pd);
      ++factors;
    }
    if (!ok) continue;
    if (variant == SignVariant::Minus && factors % 2 == 1) r = -r;
    out.push_back({n, r});
  }
  return out;
}

double numerator_pair_loop(const ResonatorTable& table, int mu, int nu, double h) {
  CompensatedSum<extended> sum;
  const auto& e = table.entries;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[j].n % e[i].n != 0) continue;
      const std::uint64_t n = e[j].n / e[i].n;
      const double lambda = von_mangoldt_naive(n);
      if (lambda == 0.0) continue;
      const extended ln = std::log(static_cast<extended>(n));
      const extended s = std::pow(std::sin(h * ln), mu);
      sum.add(lambda * s * e[i].r * e[j].r / (std::sqrt(static_cast<extended>(n)) * std::pow(ln, nu)));
    }
  }
  return static_cast<double>(sum.value());
}

double mean_square_quadrature(const ResonatorTable& table, double T) {
  const GaussRule& rule = gauss_legendre(20);
  std::vector<extended> logs;
  for (const auto& e : table.entries) logs.push_back(std::log(static_cast<extended>(e.n)));
  auto abs_r2 = [&](extended t) {
    extended re = 0, im = 0;
    for (std::size_t k = 0; k < logs.size(); ++k) {
      const extended ph = t * logs[k];
      re += table.entries[k].r * std::cos(ph);
      im -= table.entries[k].r * std::sin(ph);
    }
    return re * re + im * im;
  };
  const auto panels = static_cast<std::size_t>(std::ceil(T));
  const extended width = static_cast<extended>(T) / panels;
  CompensatedSum<extended> sum;
  for (std::size_t p = 0; p < panels; ++p) {
    const extended a = T + width * p;
    extended panel = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * abs_r2(a + 0.5L * width * (1 + static_cast<extended>(rule.nodes[i])));
    }
    sum.add(0.5L * width * panel);
  }
  return static_cast<double>(sum.value());
}

SeriesValue lemma3_series(const ResonatorTable& table, double alpha, double h, double T,
                          std::uint64_t n_max) {
  require(alpha > 1, ErrorKind::InvalidArgument, "series oracle needs alpha > 1");
  require(n_max > table.max_n(), ErrorKind::InvalidArgument, "n_max must exceed the table");
  const auto pp = prime_powers(n_max);
  const auto& e = table.entries;
  // e^{i x T log n} for x = 1, 2, with the phase reduced in extended precision.
  auto unit = [](extended phase) {
    const double r = reduce_phase(phase);
    return std::complex<double>(std::cos(r), std::sin(r));
  };
  std::vector<std::complex<double>> k1(e.size()), k2(e.size());
  std::vector<double> lk(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const extended l = std::log(static_cast<extended>(e[i].n));
    lk[i] = static_cast<double>(l);
    k1[i] = unit(T * l);
    k2[i] = unit(2 * static_cast<extended>(T) * l);
  }
  // sum_{m, k} r(m) r(k) int_T^{2T} (k / (n m))^{it} dt for one n.
  auto pair_integral = [&](std::uint64_t n, double ln, std::complex<double> n1,
                           std::complex<double> n2) {
    std::complex<double> acc = 0;
    for (std::size_t m = 0; m < e.size(); ++m) {
      const std::complex<double> a1 = std::conj(n1 * k1[m]);
      const std::complex<double> a2 = std::conj(n2 * k2[m]);
      for (std::size_t k = 0; k < e.size(); ++k) {
        const double rr = e[m].r * e[k].r;
        if (n * e[m].n == e[k].n) {
          acc += rr * T;
          continue;
        }
        const double w = lk[k] - ln - lk[m];
        acc += rr * (k2[k] * a2 - k1[k] * a1) / std::complex<double>(0.0, w);
      }
    }
    return acc;
  };
  CompensatedComplexSum<double> sum;
  for (const auto& [n, lambda] : *pp) {
    const extended l = std::log(static_cast<extended>(n));
    const double ln = static_cast<double>(l);
    const std::complex<double> coeff =
        lambda / ln * std::exp(-alpha * ln) * unit(-static_cast<extended>(h) * l);
    sum.add(coeff * pair_integral(n, ln, unit(T * l), unit(2 * static_cast<extended>(T) * l)));
  }
  double abs_sum = 0;
  for (const auto& x : e) abs_sum += std::fabs(x.r);
  const double nm = static_cast<double>(n_max);
  const double tail = abs_sum * abs_sum * 2 / std::log(nm / static_cast<double>(table.max_n())) *
                      std::pow(nm, 1 - alpha) / (alpha - 1);
  return {sum.value(), tail};
}

std::complex<double> log_zeta_dirichlet(std::complex<double> s, std::uint64_t n_max) {
  require(s.real() >= 2, ErrorKind::InvalidArgument, "Dirichlet series oracle needs Re s >= 2");
  const auto pp = prime_powers(n_max);
  CompensatedComplexSum<double> sum;
  for (auto it = pp->rbegin(); it != pp->rend(); ++it) {
    const extended l = std::log(static_cast<extended>(it->n));
    const double mag = std::exp(-s.real() * static_cast<double>(l));
    const double ph = reduce_phase(-static_cast<extended>(s.imag()) * l);
    sum.add(it->lambda / static_cast<double>(l) * std::polar(mag, ph));
  }
  return sum.value();
}

double littlewood_tail(double t, std::uint64_t n_max) {
  const auto pp = prime_powers(n_max);
  CompensatedSum<double> sum;
  for (auto it = pp->rbegin(); it != pp->rend(); ++it) {
    const extended l = std::log(static_cast<extended>(it->n));
    const double ld = static_cast<double>(l);
    const double n = static_cast<double>(it->n);
    sum.add(it->lambda * std::cos(reduce_phase(static_cast<extended>(t) * l)) / (n * n * ld * ld));
  }
  return sum.value() / std::numbers::pi;
}

}  // namespace bsy::verify
