#include "bsy/verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <tuple>

#include "bsy/argument.hpp"
#include "bsy/arith.hpp"
#include "bsy/dirichlet.hpp"
#include "bsy/error.hpp"
#include "bsy/resonator.hpp"
#include "bsy/verify/oracles.hpp"
#include "bsy/zeta.hpp"

namespace bsy::verify {

namespace {

constexpr double kFinite = std::numeric_limits<double>::max();

Check at_most(std::string name, double measured, double threshold) {
  return {std::move(name), measured, threshold, measured <= threshold};
}

Check below(std::string name, double measured, double threshold) {
  return {std::move(name), measured, threshold, measured < threshold};
}

Check above(std::string name, double measured, double threshold) {
  return {std::move(name), measured, threshold, measured > threshold};
}

Check finite(std::string name, double measured) {
  return {std::move(name), measured, kFinite, std::isfinite(measured)};
}

Check info(std::string name, double measured, double threshold) {
  Check c = at_most(std::move(name), measured, threshold);
  c.informational = true;
  return c;
}

double relative_gap(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); }

// Scans use coarser tolerances: their statistics are O(1) and the integrals
// run over thousands of units, so quad_tol = 1e-10 absolute would cost
// minutes with no visible effect.
PrecisionConfig scan_config(const PrecisionConfig& base) {
  PrecisionConfig c = base;
  c.quad_tol = std::max(base.quad_tol, 1e-8);
  c.target_abs_error = std::max(base.target_abs_error, 1e-10);
  return c;
}

ResonatorParams toy_params(int mu, int nu, std::uint64_t N, double h) {
  ResonatorParams p;
  p.mu = mu;
  p.nu = nu;
  p.N = N;
  p.h = h;
  p.L = 1.0;
  p.A = 2.0;
  p.B = 30.0;
  p.override = true;
  return p;
}

std::vector<Check> zeta_engine(SuiteContext& ctx) {
  const auto& cfg = ctx.precision();
  const double z2 = std::abs(zeta_em({2.0, 0.0}, cfg).value - std::numbers::pi * std::numbers::pi / 6);
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> dist(10.0, 1e4);
  std::vector<double> ts(1000);
  for (auto& t : ts) t = dist(rng);
  double worst = 0.0;
  for (const double t : ts) {
    const ZetaValue em = zeta_em({0.5, t}, cfg);
    const HardyValue rs = hardy_z_rs(t, cfg);
    const double diff = std::fabs(std::abs(em.value) - std::fabs(rs.value));
    worst = std::max(worst, diff / (em.abs_error + rs.abs_error));
  }
  return {at_most("|zeta(2) - pi^2/6|", z2, 1e-10),
          at_most("max |EM - RS| / combined bound, 1000 points", worst, 1.0)};
}

std::vector<Check> zeros_suite(SuiteContext& ctx) {
  const auto& cfg = ctx.precision();
  const ZeroList list = find_zeros_up_to(100, cfg);
  const std::vector<double> oracle = sign_change_zeros(100, cfg);
  const double count_gap = std::fabs(static_cast<double>(list.ordinates.size()) -
                                     static_cast<double>(oracle.size()));
  const double first = list.ordinates.empty() || oracle.empty()
                           ? std::numeric_limits<double>::infinity()
                           : std::fabs(list.ordinates.front() - oracle.front());
  return {at_most("|count - sign-change count|", count_gap, 0.0),
          at_most("|first ordinate - bisection oracle|", first, 1e-8),
          at_most("unverified", list.verified ? 0.0 : 1.0, 0.0),
          info("sign-change count", static_cast<double>(oracle.size()), 29)};
}

double ladder_sup(const std::vector<double>& heights, const std::vector<IntegralResult>& values) {
  double sup = 0.0;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    const double T = heights[i];
    sup = std::max(sup, std::fabs(values[i].value) * T * T / std::log(T));
  }
  return sup;
}

std::vector<Check> theorem2_bounded(SuiteContext& ctx) {
  const auto& heights = ctx.ladder_heights();
  const double base = ladder_sup(heights, ctx.ladder(false));
  const double fine = ladder_sup(heights, ctx.ladder(true));
  double worst_err = 0.0;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    const double T = heights[i];
    worst_err = std::max(worst_err, ctx.ladder(false)[i].abs_error_est * T * T / std::log(T));
  }
  return {below("relative change of sup under 10x refinement", std::fabs(base - fine) / base, 0.01),
          finite("sup |I(T)| T^2 / log T", base),
          info("max error estimate * T^2 / log T", worst_err, 0.01 * base)};
}

std::vector<Check> bbc_exponent(SuiteContext& ctx) {
  const auto& heights = ctx.ladder_heights();
  const auto& values = ctx.ladder(false);
  std::vector<ScanSample> samples;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    const double T = heights[i];
    samples.push_back({T, values[i].value, values[i].value * T * T / std::log(T), false});
  }
  flag_sign_changes(samples);
  const ScanReport pure = fit_decay(samples, DecayModel::PurePower);
  const ScanReport logt = fit_decay(samples, DecayModel::LogTOverT2);
  const double alpha = pure.fitted_params[1];
  const auto flagged = std::count_if(samples.begin(), samples.end(), [](auto& s) { return s.flagged; });
  Check range{"pure-power alpha (in [1.8, 2.2])", alpha, 2.2, alpha >= 1.8 && alpha <= 2.2};
  return {range, at_most("logT_over_T2 RMS vs pure-power RMS", logt.residual_rms, pure.residual_rms),
          info("flagged sign-change samples", static_cast<double>(flagged),
               static_cast<double>(samples.size()))};
}

std::vector<Check> weight_identity(SuiteContext& ctx) {
  const double X = 1e4;
  return {at_most("|weight identity at 1e4|", std::fabs(weight_identity_check(X, ctx.precision())),
                  weight_identity_majorant(X))};
}

std::vector<Check> zero_sum(SuiteContext& ctx) {
  double worst = 0.0;
  for (const double gamma : {14.134725141734693, 30.0, 100.0, 1000.0}) {
    worst = std::max(worst, zero_sum_term({0.5 + 1e-9, gamma}));
  }
  const double T = 50.0;
  const ZeroList& zeros = ctx.zeros(T);
  const ZeroCandidate inside{0.6, 30.0};
  const ZeroCandidate outside{0.6, 60.0};
  const auto none = theorem2_residual(T, zeros, {}, ctx.precision());
  const auto one = theorem2_residual(T, zeros, std::span(&inside, 1), ctx.precision());
  const auto far = theorem2_residual(T, zeros, std::span(&outside, 1), ctx.precision());
  const double expected = -2 * std::numbers::pi * zero_sum_term(inside);
  const double shift = one.residual - none.residual;
  return {at_most("max zero_sum_term at beta = 1/2 + 1e-9", worst, 1e-8),
          at_most("relative error of residual shift", std::fabs(shift - expected) / std::fabs(expected),
                  1e-12),
          at_most("shift from hypothetical above T", std::fabs(far.residual - none.residual), 0.0)};
}

std::vector<Check> argument(SuiteContext& ctx) {
  const auto& cfg = ctx.precision();
  const std::vector<double> oracle = sign_change_zeros(500, cfg);
  std::mt19937_64 rng(7007);
  std::uniform_real_distribution<double> dist(15.0, 500.0);
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const double t = dist(rng);
    const auto sign_changes = std::upper_bound(oracle.begin(), oracle.end(), t) - oracle.begin();
    if (count_zeros_formula(t, cfg) != sign_changes) ++mismatches;
  }

  std::vector<double> grid;
  for (int t = 20; t <= 500; ++t) grid.push_back(t);
  const std::vector<double> direct = S1_direct_grid(grid, ctx.zeros(500), cfg);
  double lo = INFINITY, hi = -INFINITY, full_lo = INFINITY, full_hi = -INFINITY;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = direct[i] - S1_littlewood(grid[i], cfg);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
    const double full = d - littlewood_tail(grid[i]);
    full_lo = std::min(full_lo, full);
    full_hi = std::max(full_hi, full);
  }
  return {at_most("reconstruction mismatches at 200 points", mismatches, 0),
          at_most("S1_direct - S1_littlewood drift (max - min)", hi - lo, 0.2),
          info("drift with the sigma > 2 tail restored", full_hi - full_lo, 1e-6)};
}

std::vector<Check> lemma2_omega(SuiteContext& ctx) {
  const PrecisionConfig cfg = scan_config(ctx.precision());
  const double top = 1e4;
  std::vector<double> grid;
  for (double t = 20; t <= top; t += 5) grid.push_back(t);
  const ScanReport lemma2 = lemma2_scan(10, grid, ctx.zeros(top), cfg);
  double sup = 0.0, sup_before = 0.0, sup_last = 0.0;
  for (const auto& s : lemma2.samples) {
    const double v = std::fabs(s.normalized);
    sup = std::max(sup, v);
    if (s.T > top / 2) {
      sup_last = std::max(sup_last, v);
    } else {
      sup_before = std::max(sup_before, v);
    }
  }
  const ScanReport omega = omega_scan(1000, 0.3, ctx.zeros(top), cfg);
  return {finite("lemma2 sup normalized", sup),
          at_most("last-octave sup / earlier sup", sup_last / sup_before, 1.0),
          above("omega max normalized", omega.max_normalized, 0.0),
          below("omega min normalized", omega.min_normalized, 0.0)};
}

ResonatorTable random_table(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> size(2000, 16000);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  ResonatorTable table;
  const std::uint64_t N = size(rng);
  for (std::uint64_t n = 1; n <= N; ++n) {
    if (is_squarefree(n) && coin(rng) < 0.6) table.entries.push_back({n, coeff(rng)});
  }
  table.params.N = N;
  table.params.override = true;
  return table;
}

std::vector<Check> resonator_exactness(SuiteContext&) {
  double entry_gap = 0.0;
  double numerator_gap = 0.0;
  for (const SignVariant v : {SignVariant::Plus, SignVariant::Minus}) {
    const ResonatorParams p = toy_params(1, 1, 100, 0.1);
    const ResonatorTable table = build_resonator(p, v);
    const auto brute = resonator_brute_force(p, v);
    if (brute.size() != table.entries.size()) {
      entry_gap = INFINITY;
    } else {
      for (std::size_t i = 0; i < brute.size(); ++i) {
        if (brute[i].n != table.entries[i].n) entry_gap = INFINITY;
        entry_gap = std::max(entry_gap, std::fabs(brute[i].r - table.entries[i].r));
      }
    }
    constexpr std::tuple<int, int, double> kCases[] = {{0, 0, 0.1}, {1, 1, 0.1}, {2, 1, 0.05}, {1, 0, 0.3}};
    for (const auto& [mu, nu, h] : kCases) {
      numerator_gap = std::max(numerator_gap, relative_gap(resonator_numerator(table, mu, nu, h),
                                                           numerator_pair_loop(table, mu, nu, h)));
    }
  }
  std::size_t largest = 0;
  std::mt19937_64 rng(4242);
  for (std::uint64_t k = 0; k < 5; ++k) {
    const ResonatorTable table = random_table(9000 + k);
    largest = std::max(largest, table.entries.size());
    const int mu = static_cast<int>(rng() % 3);
    const int nu = static_cast<int>(rng() % 3);
    const double h = 0.01 + 0.49 * std::uniform_real_distribution<double>(0, 1)(rng);
    numerator_gap = std::max(numerator_gap, relative_gap(resonator_numerator(table, mu, nu, h),
                                                         numerator_pair_loop(table, mu, nu, h)));
  }
  double min_plus = INFINITY, max_minus = -INFINITY;
  for (const double h : {0.05, 0.1}) {
    const Lemma4Result r = lemma4_check(toy_params(1, 1, 100, h));
    min_plus = std::min(min_plus, r.ratio_plus);
    max_minus = std::max(max_minus, r.ratio_minus);
  }
  return {at_most("numerator vs pair loop (relative, floor 1)", numerator_gap, 1e-12),
          at_most("toy table vs brute-force enumeration", entry_gap, 1e-15),
          above("min plus-variant ratio", min_plus, 0.0),
          below("max minus-variant ratio", max_minus, 0.0),
          info("largest random table", static_cast<double>(largest), 1e4)};
}

ResonatorTable table_with_entries(std::size_t count) {
  for (std::uint64_t N = 2;; ++N) {
    ResonatorTable t = build_resonator(toy_params(0, 0, N, 0.1), SignVariant::Plus);
    if (t.entries.size() == count) return t;
    require(t.entries.size() < count, ErrorKind::Inconsistent, "no toy table of the requested size");
  }
}

std::vector<Check> lemma3_mv(SuiteContext& ctx) {
  const auto& cfg = ctx.precision();
  const ResonatorTable t20 = table_with_entries(20);
  const double exact_gap = std::fabs(mean_square_exact(t20, 1e3) - mean_square_quadrature(t20, 1e3));

  const ResonatorTable t50 = table_with_entries(50);
  const std::vector<double> ladder{1e3, 1e4, 1e5};
  std::vector<double> dev;
  for (const double T : ladder) {
    dev.push_back(std::fabs(mean_square_exact(t50, T) / (T * t50.sum_squares()) - 1));
  }
  double dev_growth = 0.0;
  for (std::size_t i = 1; i < dev.size(); ++i) dev_growth = std::max(dev_growth, dev[i] / dev[i - 1]);

  const ResonatorTable toy = build_resonator(toy_params(0, 0, 100, 0.1), SignVariant::Plus);
  const double h = 0.1;
  std::vector<double> gaps;
  double series_gap = 0.0;
  for (const double T : ladder) {
    gaps.push_back(lemma3_compare({0.6, h, T, &toy}, cfg).normalized_gap);
    const ComplexEstimate lhs = lemma3_lhs({2.0, h, T, &toy}, cfg);
    const SeriesValue series = lemma3_series(toy, 2.0, h, T, 1'000'000);
    const double N = static_cast<double>(toy.params.N);
    const double scale = N * std::pow(std::log(T * N), 1.5) * toy.sum_squares();
    series_gap = std::max(series_gap, (std::abs(lhs.value - series.value) + series.tail_bound) / scale);
  }
  double gap_growth = 0.0;
  for (std::size_t i = 1; i < gaps.size(); ++i) gap_growth = std::max(gap_growth, gaps[i] / gaps[i - 1]);

  return {at_most("|mean_square_exact - quadrature|, 20 entries, T = 1e3", exact_gap, cfg.quad_tol),
          at_most("|ratio - 1| at T = 1e3, 50 entries", dev.front(), 0.1),
          below("max |ratio - 1| growth factor over the ladder", dev_growth, 1.0),
          at_most("max lemma3 normalized gap growth at alpha = 0.6", gap_growth, 1.0),
          at_most("alpha = 2 normalized gap vs series oracle", series_gap, 1e-6)};
}

struct Suite {
  std::string id;
  double runtime_limit;
  std::function<std::vector<Check>(SuiteContext&)> run;
};

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {"zeta-engine", 60, zeta_engine},
      {"zeros", 60, zeros_suite},
      {"theorem2-bounded", 600, theorem2_bounded},
      {"bbc-exponent", 600, bbc_exponent},
      {"weight-identity", 60, weight_identity},
      {"zero-sum", 60, zero_sum},
      {"argument", 300, argument},
      {"lemma2-omega", 600, lemma2_omega},
      {"resonator-exactness", 60, resonator_exactness},
      {"lemma3-mv", 900, lemma3_mv},
  };
  return suites;
}

}  // namespace

SuiteContext::SuiteContext(PrecisionConfig cfg) : cfg_(cfg) { cfg_.validate(); }

const ZeroList& SuiteContext::zeros(double T) {
  if (!zeros_.verified || zeros_.covered_height < T) zeros_ = find_zeros_up_to(T, cfg_);
  return zeros_;
}

void SuiteContext::provide_zeros(ZeroList list) {
  require(list.verified, ErrorKind::InvalidArgument, "suite zero lists must be verified");
  zeros_ = std::move(list);
}

const std::vector<double>& SuiteContext::ladder_heights() {
  if (heights_.empty()) {
    for (double T = 10; T <= 1e4; T *= 2) heights_.push_back(T);
  }
  return heights_;
}

const std::vector<IntegralResult>& SuiteContext::ladder(bool refined) {
  auto it = ladders_.find(refined);
  if (it == ladders_.end()) {
    const auto& h = ladder_heights();
    const ZeroList& z = zeros(h.back());
    it = ladders_.emplace(refined, compute_I_ladder(h, z, refined ? cfg_.refined(10) : cfg_)).first;
  }
  return it->second;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

SuiteResult run_suite(const std::string& id, SuiteContext& ctx) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const Suite& s) { return s.id == id; });
  require(it != reg.end(), ErrorKind::InvalidArgument, "unknown suite '" + id + "'");
  SuiteResult out;
  out.criterion_id = id;
  const auto start = std::chrono::steady_clock::now();
  try {
    out.checks = it->run(ctx);
  } catch (const Error& e) {
    out.error_kind = std::string(to_string(e.kind()));
    out.error = e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.error.empty()) return out;
  out.checks.push_back(at_most("runtime seconds", out.seconds, it->runtime_limit));
  out.measured = out.checks.front().measured;
  out.threshold = out.checks.front().threshold;
  out.pass = std::all_of(out.checks.begin(), out.checks.end(),
                         [](const Check& c) { return c.pass || c.informational; });
  return out;
}

}  // namespace bsy::verify
