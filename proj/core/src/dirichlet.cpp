#include "bsy/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bsy/error.hpp"
#include "bsy/parallel.hpp"
#include "bsy/quadrature.hpp"
#include "bsy/summation.hpp"
#include "bsy/zeta.hpp"

namespace bsy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Accuracy floor of the vertical-grid sampler at heights around 10^5.
constexpr double kGridTargetFloor = 1e-10;

double abs_R2(const ResonatorTable& table, double t) { return std::norm(eval_R(table, t)); }

double normalizing_N(const ResonatorTable& table) {
  return static_cast<double>(std::max<std::uint64_t>(table.params.N, std::max<std::uint64_t>(table.max_n(), 1)));
}

void check_request(const Lemma3Request& req) {
  require(req.table != nullptr, ErrorKind::InvalidArgument, "moment request needs a table");
  require(req.alpha >= 0.5 && req.alpha <= 2.0, ErrorKind::InvalidArgument, "alpha must lie in [1/2, 2]");
  require(req.T >= 3, ErrorKind::InvalidArgument, "T must be at least 3");
  require(req.eps_margin > 0, ErrorKind::InvalidArgument, "eps_margin must be positive");
  require(req.alpha >= 0.5 + req.eps_margin, ErrorKind::InvalidArgument,
          "alpha must be at least 1/2 + eps_margin for the numerical left-hand side");
  require(req.h >= 0 && std::isfinite(req.h), ErrorKind::InvalidArgument, "h must be >= 0");
}

// Complex adaptive integral as two real ones.
ComplexEstimate integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                                  double b, double tol, int max_subdivisions) {
  auto re = integrate_adaptive([&](double t) { return f(t).real(); }, a, b, 0.5 * tol, max_subdivisions);
  auto im = integrate_adaptive([&](double t) { return f(t).imag(); }, a, b, 0.5 * tol, max_subdivisions);
  if (!re.converged || !im.converged) {
    raise(ErrorKind::ToleranceNotMet, "moment end-piece quadrature on [" + std::to_string(a) + ", " +
                                          std::to_string(b) + "]");
  }
  return {{re.value, im.value}, re.abs_error_est + im.abs_error_est};
}

}  // namespace

std::complex<double> eval_R(const ResonatorTable& table, double t) {
  CompensatedComplexSum<double> sum;
  for (const auto& e : table.entries) {
    const double phase =
        reduce_phase(-static_cast<extended>(t) * std::log(static_cast<extended>(e.n)));
    sum.add(std::polar(e.r, phase));
  }
  return sum.value();
}

double mean_square_exact(const ResonatorTable& table, double T) {
  require(T > 0, ErrorKind::InvalidArgument, "mean_square_exact requires T > 0");
  const auto& e = table.entries;
  const auto rows = parallel_map(e.size(), [&](std::size_t i) {
    CompensatedSum<double> row;
    const extended lm = std::log(static_cast<extended>(e[i].n));
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const extended l = std::log(static_cast<extended>(e[j].n)) - lm;
      const double s2 = std::sin(reduce_phase(2 * static_cast<extended>(T) * l));
      const double s1 = std::sin(reduce_phase(static_cast<extended>(T) * l));
      row.add(2 * e[i].r * e[j].r * (s2 - s1) / static_cast<double>(l));
    }
    return row.value();
  });
  CompensatedSum<double> total;
  total.add(T * table.sum_squares());
  for (const double r : rows) total.add(r);
  return total.value();
}

double mean_square_offdiagonal_delta(const ResonatorTable& table, double T) {
  const auto& e = table.entries;
  CompensatedSum<double> s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const double l = std::log(static_cast<double>(e[j].n) / static_cast<double>(e[i].n));
      s.add(2 * 2 * std::fabs(e[i].r * e[j].r) / l);  // ordered pairs (i, j) and (j, i)
    }
  }
  return s.value() / (T * table.sum_squares());
}

ComplexEstimate lemma3_lhs(const Lemma3Request& req, const PrecisionConfig& cfg) {
  cfg.validate();
  check_request(req);
  const ResonatorTable& table = *req.table;
  const double alpha = req.alpha, h = req.h, T = req.T;
  auto f_branch = [&](double t) {
    return log_zeta_branch(alpha, t + h, cfg) * abs_R2(table, t);
  };

  const double delta = std::min((alpha - 0.5) / 3, 0.1);
  const double s = std::max(4 * delta, 0.2);
  const double W = 12 * s;
  if (T < 4 * W) {
    return integrate_complex(f_branch, T, 2 * T, cfg.quad_tol, cfg.max_subdivisions);
  }

  const auto M = static_cast<std::size_t>(2 * std::ceil(T / (2 * delta)));
  const double step = T / static_cast<double>(M);
  const double left_mid = T + W / 2, right_mid = 2 * T - W / 2;
  auto psi = [&](double t) {
    return 0.5 * (std::erf((t - left_mid) / s) - std::erf((t - right_mid) / s));
  };

  // Grid values of log zeta near both ends are kept to continue the branch
  // into the end-piece quadrature.
  const auto edge = static_cast<std::size_t>(std::ceil(W / step)) + 2;
  std::vector<std::complex<double>> head_zeta, head_log, tail_zeta, tail_log;
  const std::complex<double> anchor = log_zeta_branch(alpha, T + h, cfg);

  PrecisionConfig grid_cfg = cfg;
  grid_cfg.target_abs_error = std::max(cfg.target_abs_error, kGridTargetFloor);
  grid_cfg.quad_tol = std::max(grid_cfg.quad_tol, grid_cfg.target_abs_error);

  CompensatedComplexSum<double> fine, coarse;
  CompensatedSum<double> magnitude, value_error;
  std::complex<double> previous;
  double arg = 0.0;
  double grid_bound = 0.0;
  grid_bound = zeta_vertical_grid(
      alpha, T + h, step, M + 1, grid_cfg, [&](std::size_t j, std::complex<double> z) {
        if (j == 0) {
          arg = anchor.imag();
          const double principal = std::arg(z);
          arg = principal + 2 * kPi * std::round((anchor.imag() - principal) / (2 * kPi));
        } else {
          const double d = std::arg(z / previous);
          if (std::fabs(d) > kPi / 2) {
            raise(ErrorKind::BranchAmbiguous, "phase step " + std::to_string(d) + " at t = " +
                                                  std::to_string(T + step * static_cast<double>(j)));
          }
          arg += d;
        }
        previous = z;
        const double t = T + step * static_cast<double>(j);
        const std::complex<double> logz{std::log(std::abs(z)), arg};
        if (j < edge) {
          head_zeta.push_back(z);
          head_log.push_back(logz);
        }
        if (j + edge > M) {
          tail_zeta.push_back(z);
          tail_log.push_back(logz);
        }
        const double w = psi(t);
        if (w == 0.0) return;
        const double r2 = abs_R2(table, t);
        const double end_weight = (j == 0 || j == M) ? 0.5 : 1.0;
        const std::complex<double> term = end_weight * w * r2 * logz;
        fine.add(term);
        if (j % 2 == 0) coarse.add(term);
        magnitude.add(std::abs(term));
        value_error.add(end_weight * w * r2 / std::abs(z));
      });
  const std::complex<double> bulk_fine = fine.value() * step;
  const std::complex<double> bulk_coarse = coarse.value() * (2 * step);
  const double scale = magnitude.value() * step;
  const double diff = std::abs(bulk_fine - bulk_coarse);
  // Geometric convergence: E(d) ~ E(2d)^2 / scale.
  const double trapezoid_error =
      std::max(diff * diff / std::max(scale, 1e-300), 16 * kEps * scale);
  const double sampling_error = 2 * grid_bound * value_error.value() * step;

  const std::size_t tail_first = M + 1 - tail_zeta.size();
  auto continued_log = [&](double t) {
    const double x = (t - T) / step;
    auto j = static_cast<std::size_t>(std::clamp(std::round(x), 0.0, static_cast<double>(M)));
    const bool head = j < head_zeta.size();
    if (!head && j < tail_first) j = tail_first;
    const std::complex<double> zj = head ? head_zeta[j] : tail_zeta[j - tail_first];
    const std::complex<double> lj = head ? head_log[j] : tail_log[j - tail_first];
    const std::complex<double> z = zeta_em({alpha, t + h}, cfg).value;
    return std::complex<double>{std::log(std::abs(z)), lj.imag() + std::arg(z / zj)};
  };
  auto end_piece = [&](double t) { return continued_log(t) * abs_R2(table, t) * (1.0 - psi(t)); };
  const ComplexEstimate left = integrate_complex(end_piece, T, T + W, cfg.quad_tol, cfg.max_subdivisions);
  const ComplexEstimate right =
      integrate_complex(end_piece, 2 * T - W, 2 * T, cfg.quad_tol, cfg.max_subdivisions);

  ComplexEstimate out;
  out.value = bulk_fine + left.value + right.value;
  out.abs_error = trapezoid_error + sampling_error + left.abs_error + right.abs_error;
  return out;
}

std::complex<double> lemma3_rhs(const Lemma3Request& req) {
  require(req.table != nullptr, ErrorKind::InvalidArgument, "moment request needs a table");
  CompensatedComplexSum<double> sum;
  for_each_prime_power_pair(*req.table, [&](std::uint64_t, std::uint64_t q, std::uint64_t p,
                                            double rm, double rk) {
    const double lq = std::log(static_cast<double>(q));
    const double weight = std::log(static_cast<double>(p)) / lq;  // Lambda(q) / log q
    const double phase = reduce_phase(-static_cast<extended>(req.h) * std::log(static_cast<extended>(q)));
    sum.add(std::polar(rm * rk * weight * std::pow(static_cast<double>(q), -req.alpha), phase));
  });
  return req.T * sum.value();
}

Lemma3Comparison lemma3_compare(const Lemma3Request& req, const PrecisionConfig& cfg) {
  Lemma3Comparison out;
  out.lhs = lemma3_lhs(req, cfg);
  out.rhs = lemma3_rhs(req);
  out.gap = std::abs(out.lhs.value - out.rhs);
  const double N = normalizing_N(*req.table);
  const double norm = N * std::pow(std::log(req.T * N), 1.5) * req.table->sum_squares();
  out.normalized_gap = out.gap / norm;
  return out;
}

ResonanceStatistic s1_resonance_statistic(const ResonatorTable& table, double h, double T,
                                          const PrecisionConfig& cfg) {
  cfg.validate();
  require(h >= 0 && h <= 1, ErrorKind::InvalidArgument, "h must lie in [0, 1]");
  require(T > 0, ErrorKind::InvalidArgument, "T must be positive");
  CompensatedSum<double> sin2, sin1;
  for_each_prime_power_pair(table, [&](std::uint64_t, std::uint64_t q, std::uint64_t p, double rm,
                                       double rk) {
    const double lq = std::log(static_cast<double>(q));
    const double base = std::log(static_cast<double>(p)) * rm * rk /
                        (std::sqrt(static_cast<double>(q)) * lq * lq);
    const double half = std::sin(0.5 * h * lq);
    sin2.add(base * half * half);
    sin1.add(base * std::sin(h * lq));
  });
  const double denom = table.sum_squares();
  ResonanceStatistic out;
  out.sin2_ratio = (2 / kPi) * sin2.value() / denom;
  out.sin_ratio = 2 * sin1.value() / denom;
  out.sin_ratio_exact_mv = 2 * T * sin1.value() / mean_square_exact(table, T);
  return out;
}

}  // namespace bsy
