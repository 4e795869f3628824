#include "bsy/argument.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "bsy/error.hpp"
#include "bsy/integral.hpp"
#include "bsy/parallel.hpp"
#include "bsy/quadrature.hpp"
#include "bsy/summation.hpp"
#include "bsy/zeta.hpp"

namespace bsy {

namespace {

constexpr double kPoleGraze = 0.01;
constexpr double kMidpointOffset = 1e-6;

}  // namespace

double S_branch(double t, const PrecisionConfig& cfg) {
  require(t >= 0 && std::isfinite(t), ErrorKind::InvalidArgument, "S(t) requires t >= 0");
  if (t < kPoleGraze) return -1.0 - theta_loggamma(t) / std::numbers::pi;
  return log_zeta_branch(0.5, t, cfg).imag() / std::numbers::pi;
}

double S_of_t(double t, const PrecisionConfig& cfg) {
  if (t == 0.0) return 0.0;
  try {
    return S_branch(t, cfg);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroOnPath) throw;
  }
  const double lo = S_branch(std::max(t - kMidpointOffset, 0.0), cfg);
  const double hi = S_branch(t + kMidpointOffset, cfg);
  return 0.5 * (lo + hi);
}

double S1_littlewood(double t, const PrecisionConfig& cfg) {
  cfg.validate();
  require(t >= kThetaMinT, ErrorKind::DomainTooSmall, "S1_littlewood requires t >= 10");
  const double edge = std::abs(zeta_em({0.5, t}, cfg).value);
  if (edge < 10 * cfg.target_abs_error) {
    raise(ErrorKind::OnOrdinate, "t = " + std::to_string(t) + " is at an ordinate");
  }
  auto f = [&](double sigma) { return std::log(std::abs(zeta_em({sigma, t}, cfg).value)); };
  const IntegralResult r = integrate_adaptive(f, 0.5, 2.0, cfg.quad_tol, cfg.max_subdivisions);
  if (!r.converged) raise(ErrorKind::ToleranceNotMet, "S1_littlewood quadrature at t = " + std::to_string(t));
  return r.value / std::numbers::pi;
}

std::vector<double> S1_direct_grid(std::span<const double> ts, const ZeroList& zeros,
                                   const PrecisionConfig& cfg) {
  cfg.validate();
  if (ts.empty()) return {};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    require(ts[i] >= 0 && (i == 0 || ts[i] >= ts[i - 1]), ErrorKind::InvalidArgument,
            "S1 grid must be ascending and non-negative");
  }
  const double top = ts.back();
  if (zeros.covered_height < top) {
    raise(ErrorKind::ZeroListInsufficient, "zero list covers " + std::to_string(zeros.covered_height) +
                                               ", S1 needs " + std::to_string(top));
  }
  // Breakpoints: ordinates (where S jumps) and grid points.
  std::vector<double> cuts{0.0};
  for (const double g : zeros.ordinates) {
    if (g < top) cuts.push_back(g);
  }
  cuts.insert(cuts.end(), ts.begin(), ts.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const auto pieces = parallel_map(cuts.size() - 1, [&](std::size_t i) {
    const double a = cuts[i], b = cuts[i + 1];
    // Between ordinates N is constant and S = N - 1 - theta/pi exactly; the
    // branch march would lose accuracy next to each ordinate.
    const auto below = static_cast<double>(zeros.count_below(0.5 * (a + b)));
    auto f = [&](double u) {
      if (u < kPoleGraze) return -1.0 - theta_loggamma(u) / std::numbers::pi;
      return below - 1.0 - theta_loggamma(u) / std::numbers::pi;
    };
    const double tol = top > 0 ? cfg.quad_tol * (b - a) / top : cfg.quad_tol;
    const IntegralResult r = integrate_adaptive(f, a, b, tol, cfg.max_subdivisions);
    if (!r.converged) raise(ErrorKind::ToleranceNotMet, "S1 piece [" + std::to_string(a) + ", " +
                                                            std::to_string(b) + "]");
    return r.value;
  });
  std::vector<double> out;
  out.reserve(ts.size());
  CompensatedSum<double> running;
  std::size_t next = 0;
  for (std::size_t i = 0; i < cuts.size() && next < ts.size(); ++i) {
    if (i > 0) running.add(pieces[i - 1]);
    while (next < ts.size() && ts[next] == cuts[i]) {
      out.push_back(running.value());
      ++next;
    }
  }
  return out;
}

double S1_direct(double t, const ZeroList& zeros, const PrecisionConfig& cfg) {
  const double grid[] = {t};
  return S1_direct_grid(grid, zeros, cfg).front();
}

double horizontal_log_integral(double t, const PrecisionConfig& cfg) {
  cfg.validate();
  require(t >= 3, ErrorKind::DomainTooSmall, "horizontal_log_integral requires t >= 3");
  auto f = [&](double sigma) { return std::abs(log_zeta_branch(sigma, t, cfg)); };
  const IntegralResult r = integrate_adaptive(f, 0.5, 2.0, cfg.quad_tol, cfg.max_subdivisions);
  return r.value;
}

ScanReport lemma2_scan(double T, std::span<const double> t_grid, const ZeroList& zeros,
                       const PrecisionConfig& cfg) {
  require(T >= 3, ErrorKind::DomainTooSmall, "lemma2_scan requires T >= 3");
  require(!t_grid.empty() && t_grid.front() >= T, ErrorKind::InvalidArgument,
          "lemma2 grid must start at or above T");
  std::vector<double> cuts{T};
  cuts.insert(cuts.end(), t_grid.begin(), t_grid.end());
  const auto pieces = integrate_log_zeta_pieces(cuts, zeros, [](double) { return 1.0; }, cfg);
  ScanReport report;
  CompensatedSum<double> running;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    running.add(pieces[i].value);
    const double t = t_grid[i];
    const double ll = std::log(std::log(t));
    ScanSample s;
    s.T = t;
    s.stat = running.value();
    s.normalized = s.stat * ll * ll / std::log(t);
    report.samples.push_back(s);
  }
  report.update_extremes();
  return report;
}

ScanReport omega_scan(double T, double h, const ZeroList& zeros, const PrecisionConfig& cfg) {
  require(h > 0 && h <= 1, ErrorKind::InvalidArgument, "omega_scan requires 0 < h <= 1");
  require(T >= 10, ErrorKind::DomainTooSmall, "omega_scan requires T >= 10");
  // Cells of width h/4 from T - h to 2T + h; each window is four cells either
  // side of its centre.
  const double step = h / 4;
  const auto centres = static_cast<std::size_t>(std::floor(T / step)) + 1;
  const std::size_t cells = centres - 1 + 8;
  std::vector<double> cuts(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) cuts[i] = T - h + step * static_cast<double>(i);
  const auto pieces = integrate_log_zeta_pieces(cuts, zeros, [](double) { return 1.0; }, cfg);
  std::vector<double> prefix(cells + 1, 0.0);
  CompensatedSum<double> running;
  for (std::size_t i = 0; i < cells; ++i) {
    running.add(pieces[i].value);
    prefix[i + 1] = running.value();
  }
  ScanReport report;
  report.samples.reserve(centres);
  for (std::size_t j = 0; j < centres; ++j) {
    const double t = T + step * static_cast<double>(j);
    ScanSample s;
    s.T = t;
    s.stat = prefix[j + 8] - prefix[j];
    s.normalized = s.stat / (h * std::sqrt(std::log(t) / std::log(std::log(t))));
    report.samples.push_back(s);
  }
  report.update_extremes();
  return report;
}

}  // namespace bsy
