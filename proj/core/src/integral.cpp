#include "bsy/integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "bsy/error.hpp"
#include "bsy/parallel.hpp"
#include "bsy/summation.hpp"
#include "bsy/zeta.hpp"

namespace bsy {

namespace {

constexpr double kGuardRadius = 1e-6;
constexpr double kStencilStep = 1e-3;
constexpr double kAnchorReach = 1.0;

struct Panel {
  double a = 0.0;
  double b = 0.0;
  std::size_t piece = 0;
  bool anchored = false;
  double gamma = 0.0;
};

// log|Z(t)| or log|Z(t) / (t - gamma)|, recording weight * |dZ / Z| at each
// evaluation so the effect of errors in Z can be added to the estimate. Near
// gamma the quotient comes from a Taylor expansion of Z with derivatives from
// 5-point stencils.
class LogZ {
 public:
  LogZ(const PrecisionConfig& cfg, const std::function<double(double)>& weight, bool anchored,
       double gamma)
      : cfg_(&cfg), weight_(&weight), anchored_(anchored), gamma_(gamma) {}

  double operator()(double t) {
    const double w = (*weight_)(t);
    const double d = t - gamma_;
    if (anchored_ && std::fabs(d) < kGuardRadius) {
      if (!have_taylor_) taylor();
      return (log_slope_ + curvature_ratio_ * d) * w;
    }
    const HardyValue z = hardy_z(std::fabs(t), *cfg_);
    const double mag = std::fabs(z.value);
    samples_.push_back({t, std::fabs(w) * z.abs_error / mag});
    noise_sum_ += samples_.back().second;
    double v = std::log(mag);
    if (anchored_) v -= std::log(std::fabs(d));
    return v * w;
  }

  /// Mean recorded weight * |dZ / Z| times the width: the evaluation error
  /// level below which refining the quadrature is pointless.
  double noise(double width) const {
    return samples_.empty() ? 0.0 : width * noise_sum_ / static_cast<double>(samples_.size());
  }

  /// Trapezoid of the recorded weight * |dZ / Z| over the evaluation points.
  double evaluation_error() {
    if (samples_.size() < 2) return samples_.empty() ? 0.0 : samples_.front().second;
    std::sort(samples_.begin(), samples_.end());
    double total = 0.0;
    for (std::size_t i = 1; i < samples_.size(); ++i) {
      total += 0.5 * (samples_[i].second + samples_[i - 1].second) *
               (samples_[i].first - samples_[i - 1].first);
    }
    return total;
  }

 private:
  void taylor() {
    const double h = kStencilStep;
    auto z = [&](double x) { return hardy_z(std::fabs(x), *cfg_).value; };
    const double p2 = z(gamma_ + 2 * h), p1 = z(gamma_ + h), z0 = z(gamma_);
    const double m1 = z(gamma_ - h), m2 = z(gamma_ - 2 * h);
    const double d1 = (-p2 + 8 * p1 - 8 * m1 + m2) / (12 * h);
    const double d2 = (-p2 + 16 * p1 - 30 * z0 + 16 * m1 - m2) / (12 * h * h);
    log_slope_ = std::log(std::fabs(d1));
    curvature_ratio_ = d2 / (2 * d1);
    have_taylor_ = true;
  }

  const PrecisionConfig* cfg_;
  const std::function<double(double)>* weight_;
  bool anchored_;
  double gamma_;
  bool have_taylor_ = false;
  double log_slope_ = 0.0;
  double curvature_ratio_ = 0.0;
  std::vector<std::pair<double, double>> samples_;
  double noise_sum_ = 0.0;
};

std::vector<Panel> partition(std::span<const double> cuts, const ZeroList& zeros) {
  const auto& g = zeros.ordinates;
  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    if (hi <= lo) continue;
    std::vector<double> edges{lo};
    auto first = std::upper_bound(g.begin(), g.end(), lo);
    if (first != g.begin()) --first;
    for (auto it = first; it + 1 < g.end() && *it < hi; ++it) {
      const double mid = 0.5 * (*it + *(it + 1));
      if (mid > lo && mid < hi) edges.push_back(mid);
    }
    edges.push_back(hi);
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
      Panel p{edges[k], edges[k + 1], i, false, 0.0};
      const double c = 0.5 * (p.a + p.b);
      const double gamma = zeros.nearest(c);
      if (!std::isnan(gamma)) {
        const double distance = std::max({0.0, p.a - gamma, gamma - p.b});
        // Ordinates just outside the panel still need the log split: the
        // integrand is nearly singular at that end.
        if (distance < std::min(p.b - p.a, kAnchorReach)) {
          p.anchored = true;
          p.gamma = gamma;
        }
      }
      panels.push_back(p);
    }
  }
  return panels;
}

IntegralResult integrate_panel(const Panel& p, const std::function<double(double)>& weight,
                               const PrecisionConfig& cfg, double tol) {
  IntegralResult out;
  double smooth_tol = tol;
  if (p.anchored) {
    out = integrate_log_singular(weight, p.a, p.b, p.gamma, cfg.target_abs_error, 0.5 * tol,
                                 cfg.max_subdivisions);
    smooth_tol = 0.5 * tol;
    if (p.gamma < p.a || p.gamma > p.b) out.singularities_handled = 0;
  }
  LogZ f(cfg, weight, p.anchored, p.gamma);
  const IntegralResult smooth = integrate_adaptive(f, p.a, p.b, smooth_tol, cfg.max_subdivisions,
                                                   [&] { return f.noise(p.b - p.a); });
  out.value += smooth.value;
  out.abs_error_est += smooth.abs_error_est;
  out.subintervals += smooth.subintervals;
  out.converged = out.converged && smooth.converged;
  out.evaluation_error = f.evaluation_error();
  out.abs_error_est += out.evaluation_error;
  return out;
}

double inverse_weight(double t) { return 1.0 / (0.25 + t * t); }

double quadrature_error(const IntegralResult& r) { return r.abs_error_est - r.evaluation_error; }

}  // namespace

double bsy_integrand(double t, const PrecisionConfig& cfg) {
  return log_abs_zeta_half(std::fabs(t), cfg) * inverse_weight(t);
}

std::vector<IntegralResult> integrate_log_zeta_pieces(std::span<const double> cuts,
                                                      const ZeroList& zeros,
                                                      const std::function<double(double)>& weight,
                                                      const PrecisionConfig& cfg) {
  cfg.validate();
  require(cuts.size() >= 2, ErrorKind::InvalidArgument, "need at least two cut points");
  require(cuts.front() >= 0, ErrorKind::InvalidArgument, "cut points must be >= 0");
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    require(cuts[i] >= cuts[i - 1], ErrorKind::InvalidArgument, "cut points must ascend");
  }
  const double top = cuts.back();
  if (!zeros.verified || zeros.covered_height < top) {
    raise(ErrorKind::ZeroListInsufficient,
          "zero list (verified = " + std::string(zeros.verified ? "true" : "false") +
              ", covered height " + std::to_string(zeros.covered_height) + ") does not cover " +
              std::to_string(top));
  }
  const std::vector<Panel> panels = partition(cuts, zeros);
  const double total = top - cuts.front();
  const auto results = parallel_map(panels.size(), [&](std::size_t k) {
    const Panel& p = panels[k];
    const double tol = cfg.quad_tol * (p.b - p.a) / total;
    return integrate_panel(p, weight, cfg, tol);
  });

  std::vector<IntegralResult> out(cuts.size() - 1);
  std::vector<CompensatedSum<double>> sums(out.size());
  for (std::size_t k = 0; k < panels.size(); ++k) {
    IntegralResult r = results[k];
    sums[panels[k].piece].add(r.value);
    r.value = 0.0;
    out[panels[k].piece] += r;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].value = sums[i].value();
  return out;
}

std::vector<IntegralResult> compute_I_ladder(std::span<const double> heights, const ZeroList& zeros,
                                             const PrecisionConfig& cfg) {
  std::vector<double> cuts{0.0};
  for (const double T : heights) {
    require(T > 0 && T >= cuts.back(), ErrorKind::InvalidArgument, "heights must be positive and ascending");
    cuts.push_back(T);
  }
  const auto pieces =
      integrate_log_zeta_pieces(cuts, zeros, [](double t) { return inverse_weight(t); }, cfg);
  std::vector<IntegralResult> out;
  IntegralResult running;
  CompensatedSum<double> value;
  for (const auto& p : pieces) {
    value.add(2 * p.value);
    IntegralResult scaled = p;
    scaled.value = 0.0;
    scaled.abs_error_est *= 2;
    scaled.evaluation_error *= 2;
    running += scaled;
    running.value = value.value();
    if (!running.converged || quadrature_error(running) > 2 * cfg.quad_tol) {
      raise(ErrorKind::ToleranceNotMet, "I(T) quadrature error " +
                                            std::to_string(quadrature_error(running)) +
                                            " exceeds 2 * quad_tol");
    }
    out.push_back(running);
  }
  return out;
}

IntegralResult compute_I(double T, const ZeroList& zeros, const PrecisionConfig& cfg) {
  const double heights[] = {T};
  return compute_I_ladder(heights, zeros, cfg).front();
}

IntegralResult tail_I(double T, double T_max, const ZeroList& zeros, const PrecisionConfig& cfg) {
  require(T >= 0 && T <= T_max, ErrorKind::InvalidArgument, "tail_I requires 0 <= T <= T_max");
  if (T == T_max) return {};
  const double cuts[] = {T, T_max};
  IntegralResult r =
      integrate_log_zeta_pieces(cuts, zeros, [](double t) { return inverse_weight(t); }, cfg).front();
  r.value *= -2;
  r.abs_error_est *= 2;
  r.evaluation_error *= 2;
  if (!r.converged || quadrature_error(r) > 2 * cfg.quad_tol) {
    raise(ErrorKind::ToleranceNotMet, "tail quadrature error " + std::to_string(quadrature_error(r)));
  }
  return r;
}

double zero_sum_term(const ZeroCandidate& rho) {
  require(rho.beta > 0.5 && rho.beta < 1.0, ErrorKind::BetaOutOfRange,
          "beta must lie in (1/2, 1), got " + std::to_string(rho.beta));
  const double one_minus = 1.0 - rho.beta;
  // (beta^2 + g^2) / ((1 - beta)^2 + g^2) = 1 + (2 beta - 1) / ((1 - beta)^2 + g^2).
  return 0.5 * std::log1p((2 * rho.beta - 1) / (one_minus * one_minus + rho.gamma * rho.gamma));
}

Theorem2Residual theorem2_residual(double T, double integral,
                                   std::span<const ZeroCandidate> hypotheticals) {
  require(T >= 3, ErrorKind::InvalidArgument, "theorem2_residual requires T >= 3");
  CompensatedSum<double> sum;
  for (const auto& rho : hypotheticals) {
    if (std::fabs(rho.gamma) <= T) sum.add(zero_sum_term(rho));
  }
  Theorem2Residual r;
  r.T = T;
  r.integral = integral;
  r.zero_sum = 2 * std::numbers::pi * sum.value();
  r.residual = integral - r.zero_sum;
  r.normalized = r.residual * T * T / std::log(T);
  return r;
}

Theorem2Residual theorem2_residual(double T, const ZeroList& zeros,
                                   std::span<const ZeroCandidate> hypotheticals,
                                   const PrecisionConfig& cfg) {
  return theorem2_residual(T, compute_I(T, zeros, cfg).value, hypotheticals);
}

void flag_sign_changes(std::vector<ScanSample>& samples, double relative_floor) {
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double s = samples[i].stat;
    bool flip = false;
    std::vector<double> neighbours;
    for (std::size_t j : {i - 1, i + 1}) {
      if (j >= n) continue;  // i - 1 wraps for i = 0
      neighbours.push_back(std::fabs(samples[j].stat));
      if ((samples[j].stat < 0) != (s < 0)) flip = true;
    }
    double reference = 0.0;
    if (!neighbours.empty()) {
      reference = *std::max_element(neighbours.begin(), neighbours.end());
    }
    samples[i].flagged = flip && std::fabs(s) < relative_floor * reference;
    if (s == 0.0) samples[i].flagged = true;
  }
}

ScanReport fit_decay(std::span<const ScanSample> samples, DecayModel model) {
  require(model != DecayModel::None, ErrorKind::InvalidArgument, "fit_decay needs a model");
  require(samples.size() >= 8, ErrorKind::InvalidArgument, "fit_decay needs at least 8 samples");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    require(samples[i].T > samples[i - 1].T, ErrorKind::InvalidArgument, "samples must ascend in T");
  }
  require(samples.front().T > 1, ErrorKind::InvalidArgument, "fit_decay needs T > 1");
  require(std::log10(samples.back().T / samples.front().T) >= 1.5, ErrorKind::InvalidArgument,
          "samples must span at least 1.5 decades");

  std::vector<double> x, y;
  for (const auto& s : samples) {
    if (s.flagged || s.stat == 0.0) continue;
    const double lt = std::log(s.T);
    double shape = 0.0;
    switch (model) {
      case DecayModel::PurePower: shape = 0.0; break;
      case DecayModel::LogTOverT2: shape = std::log(lt) - 2 * lt; break;
      case DecayModel::SqrtLogT2: shape = 0.5 * std::log(lt) - 2 * lt; break;
      case DecayModel::None: break;
    }
    x.push_back(lt);
    y.push_back(std::log(std::fabs(s.stat)) - shape);
  }
  ScanReport report;
  report.model = model;
  report.samples.assign(samples.begin(), samples.end());
  const auto m = static_cast<double>(x.size());
  if (model == DecayModel::PurePower) {
    if (x.size() < 2) raise(ErrorKind::DegenerateFit, "fewer than two unflagged samples");
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / m;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / m;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sxx += (x[i] - mx) * (x[i] - mx);
      sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0)) raise(ErrorKind::DegenerateFit, "all sample heights coincide");
    const double alpha = -sxy / sxx;
    const double c = my + alpha * mx;
    report.fitted_params = {c, alpha};
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - (c - alpha * x[i]);
      ss += r * r;
    }
    report.residual_rms = std::sqrt(ss / m);
  } else {
    if (x.empty()) raise(ErrorKind::DegenerateFit, "no unflagged samples");
    const double c = std::accumulate(y.begin(), y.end(), 0.0) / m;
    report.fitted_params = {c};
    double ss = 0.0;
    for (const double v : y) ss += (v - c) * (v - c);
    report.residual_rms = std::sqrt(ss / m);
  }
  for (auto& s : report.samples) {
    const double lt = std::log(s.T);
    double model_value = 0.0;
    switch (model) {
      case DecayModel::PurePower:
        model_value = std::exp(report.fitted_params[0] - report.fitted_params[1] * lt);
        break;
      case DecayModel::LogTOverT2: model_value = std::exp(report.fitted_params[0]) * lt / (s.T * s.T); break;
      case DecayModel::SqrtLogT2:
        model_value = std::exp(report.fitted_params[0]) * std::sqrt(lt) / (s.T * s.T);
        break;
      case DecayModel::None: break;
    }
    s.normalized = s.stat / model_value;
  }
  report.update_extremes();
  return report;
}

IntegralResult weight_identity_integral(double X, const PrecisionConfig& cfg, bool symmetric_half) {
  cfg.validate();
  require(X >= 10, ErrorKind::DomainTooSmall, "weight identity needs X >= 10");
  auto f = [](double t) {
    const double q = 0.25 + t * t;
    return 0.5 * std::log(q) / q;
  };
  if (symmetric_half) {
    IntegralResult r = integrate_adaptive(f, 0.0, X, 0.5 * cfg.quad_tol, cfg.max_subdivisions);
    r.value *= 2;
    r.abs_error_est *= 2;
    return r;
  }
  return integrate_adaptive(f, -X, X, cfg.quad_tol, cfg.max_subdivisions);
}

double weight_identity_check(double X, const PrecisionConfig& cfg) {
  const IntegralResult r = weight_identity_integral(X, cfg);
  if (!r.converged) raise(ErrorKind::ToleranceNotMet, "weight identity quadrature did not converge");
  return r.value;
}

double weight_identity_majorant(double X) { return 4 * (1 + std::log(X)) / X; }

}  // namespace bsy
