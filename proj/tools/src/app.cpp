#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "bsy/argument.hpp"
#include "bsy/config.hpp"
#include "bsy/dirichlet.hpp"
#include "bsy/error.hpp"
#include "bsy/integral.hpp"
#include "bsy/parallel.hpp"
#include "bsy/resonator.hpp"
#include "bsy/verify/suites.hpp"
#include "bsy/zeros.hpp"
#include "bsy/zeta.hpp"
#include "output.hpp"

namespace bsy::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for problems the user must fix in the invocation or config file.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  std::string config_path;
  std::optional<std::string> format;
  std::optional<double> target_abs_error;
  std::optional<double> quad_tol;
  std::optional<int> em_terms;
  std::optional<int> rs_terms;
  std::optional<int> max_subdivisions;
  std::optional<std::size_t> parallelism;
  std::optional<std::string> zero_cache;
};

RunConfig resolve_config(const GlobalFlags& g) {
  RunConfig rc;
  try {
    if (!g.config_path.empty()) {
      RunConfig base;
      base.parallelism = default_run_config().parallelism;
      rc = load_config_file(g.config_path, base);
    } else {
      rc = default_run_config();
    }
  } catch (const Error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  if (g.format) rc.output_format = *g.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (g.target_abs_error) rc.precision.target_abs_error = *g.target_abs_error;
  if (g.quad_tol) rc.precision.quad_tol = *g.quad_tol;
  if (g.em_terms) rc.precision.euler_maclaurin_terms = *g.em_terms;
  if (g.rs_terms) rc.precision.rs_correction_terms = *g.rs_terms;
  if (g.max_subdivisions) rc.precision.max_subdivisions = *g.max_subdivisions;
  if (g.parallelism) rc.parallelism = *g.parallelism;
  if (g.zero_cache) rc.zero_cache_path = *g.zero_cache;
  try {
    rc.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return rc;
}

// Zeros covering `needed`: from `path` when given, else from the configured
// cache when it covers, else computed (and then written to the cache).
ZeroList obtain_zeros(const std::string& path, double needed, const RunConfig& rc) {
  const PrecisionConfig& cfg = rc.precision;
  if (!path.empty()) {
    const ZeroList list = import_zeros_file(path);
    if (list.covered_height < needed) {
      raise(ErrorKind::ZeroListInsufficient, path + " covers " + std::to_string(list.covered_height) +
                                                 ", need " + std::to_string(needed));
    }
    return verify_zero_list(list, cfg);
  }
  const std::string& cache = rc.zero_cache_path;
  if (!cache.empty() && std::filesystem::exists(cache)) {
    const ZeroList list = import_zeros_file(cache);
    if (list.covered_height >= needed) return verify_zero_list(list, cfg);
  }
  ZeroList list = find_zeros_up_to(needed, cfg);
  if (!cache.empty()) export_zeros_file(list, cache);
  return list;
}

void emit(const Table& table, const RunConfig& rc, std::ostream& out, bool single = false) {
  if (rc.output_format == OutputFormat::Csv) {
    table.write_csv(out);
    return;
  }
  const json arr = table.to_json();
  out << dump17(single && arr.size() == 1 ? arr[0] : arr) << '\n';
}

void emit(const json& doc, std::ostream& out) { out << dump17(doc) << '\n'; }

Table integral_table() { return Table({"T", "I", "abs_err", "subintervals", "singularities"}); }

void add_integral_row(Table& t, double T, const IntegralResult& r) {
  t.add({T, r.value, r.abs_error_est, r.subintervals, r.singularities_handled});
}

Table scan_table(const ScanReport& report) {
  Table t({"t", "stat", "normalized"});
  for (const auto& s : report.samples) t.add({s.T, s.stat, s.normalized});
  return t;
}

json suite_json(const verify::SuiteResult& r) {
  json doc;
  doc["criterion_id"] = r.criterion_id;
  doc["measured"] = r.measured;
  doc["threshold"] = r.threshold;
  doc["pass"] = r.pass;
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"measured", c.measured},
                      {"threshold", c.threshold},
                      {"pass", c.pass},
                      {"informational", c.informational}});
  }
  doc["checks"] = checks;
  // Wall-clock content kept apart from the data fields.
  doc["metadata"] = {{"seconds", r.seconds}};
  return doc;
}

struct ResonatorFlags {
  int mu = 1;
  int nu = 1;
  std::uint64_t N = 0;
  double h = 0.0;
  bool override = false;
  double A = 0.0;
  double B = 0.0;
  double L = 0.0;

  ResonatorParams params() const {
    if (!override) return make_params(mu, nu, N, h);
    ResonatorParams p;
    p.mu = mu;
    p.nu = nu;
    p.N = N;
    p.h = h;
    p.A = A;
    p.B = B;
    p.L = L;
    p.override = true;
    return p;
  }
};

void add_resonator_flags(CLI::App* cmd, ResonatorFlags& f) {
  cmd->add_option("--mu", f.mu, "power of sin(h log n)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--nu", f.nu, "power of log n")->check(CLI::NonNegativeNumber);
  cmd->add_option("--N", f.N, "length of the resonator")->required();
  cmd->add_option("--h", f.h, "shift h");
  auto* ov = cmd->add_flag("--override", f.override, "take A, B, L as given");
  cmd->add_option("--A", f.A, "lower prime bound")->needs(ov);
  cmd->add_option("--B", f.B, "upper prime bound")->needs(ov);
  cmd->add_option("--L", f.L, "scale L")->needs(ov);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bsy: numerical laboratory for the Balazard-Saias-Yor criterion"};
  // Subcommands take --h (a window or shift), so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_option("--config", g.config_path, "config file (overrides BSY_CONFIG)")
      ->check(CLI::ExistingFile);
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--target-abs-error", g.target_abs_error, "absolute error target for zeta");
  app.add_option("--quad-tol", g.quad_tol, "absolute quadrature tolerance");
  app.add_option("--em-terms", g.em_terms, "Euler-Maclaurin correction terms");
  app.add_option("--rs-terms", g.rs_terms, "Riemann-Siegel correction terms");
  app.add_option("--max-subdivisions", g.max_subdivisions, "adaptive quadrature budget");
  app.add_option("--parallelism", g.parallelism, "worker threads");
  app.add_option("--zero-cache", g.zero_cache, "zero list cache file");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "evaluate zeta(sigma + it) or Hardy's Z(t)");
  double z_sigma = 0.5, z_t = 0.0;
  bool z_hardy = false;
  zeta->add_option("--sigma", z_sigma, "real part");
  zeta->add_option("--t", z_t, "imaginary part")->required();
  zeta->add_flag("--hardy", z_hardy, "print Z(t) instead");

  // zeros
  auto* zeros = app.add_subcommand("zeros", "find or verify zero ordinates");
  zeros->require_subcommand(1);
  auto* zfind = zeros->add_subcommand("find", "compute every ordinate up to a height");
  double zf_max = 0.0, zf_tol = 1e-9;
  std::string zf_out;
  zfind->add_option("--max-t", zf_max, "height")->required()->check(CLI::PositiveNumber);
  zfind->add_option("--out", zf_out, "output file")->required();
  zfind->add_option("--tol", zf_tol, "ordinate accuracy")->check(CLI::PositiveNumber);
  auto* zverify = zeros->add_subcommand("verify", "check a zero file");
  std::string zv_in;
  zverify->add_option("--in", zv_in, "zero file")->required()->check(CLI::ExistingFile);

  // integral
  auto* integral = app.add_subcommand("integral", "I(T) or a ladder scan of it");
  integral->require_subcommand(0, 1);
  double i_T = 0.0;
  std::optional<double> i_tmax;
  std::string i_zeros;
  integral->add_option("--T", i_T, "height");
  integral->add_option("--tmax", i_tmax, "upper limit: prints the tail -2 int_T^tmax");
  integral->add_option("--zeros", i_zeros, "zero file")->check(CLI::ExistingFile);
  auto* iscan = integral->add_subcommand("scan", "I(T) on a geometric ladder with a decay fit");
  double is_min = 10, is_max = 0;
  std::size_t is_points = 10;
  std::string is_model = "logT_over_T2", is_out, is_zeros;
  iscan->add_option("--tmin", is_min, "first height")->check(CLI::PositiveNumber);
  iscan->add_option("--tmax", is_max, "last height")->required();
  iscan->add_option("--points", is_points, "ladder size (the fit needs 8)")->check(CLI::Range(8, 100000));
  iscan->add_option("--model", is_model, "decay model")
      ->check(CLI::IsMember({"pure_power", "logT_over_T2", "sqrtlog_T2"}));
  iscan->add_option("--out", is_out, "CSV output file")->required();
  iscan->add_option("--zeros", is_zeros, "zero file")->check(CLI::ExistingFile);

  // arg
  auto* arg = app.add_subcommand("arg", "S(t), S1(t) and the argument scans");
  arg->require_subcommand(1);
  auto* as = arg->add_subcommand("s", "S(t)");
  double as_t = 0;
  as->add_option("--t", as_t, "height")->required()->check(CLI::NonNegativeNumber);
  auto* as1 = arg->add_subcommand("s1", "S1(t)");
  double as1_t = 0;
  std::string as1_method = "direct", as1_zeros;
  as1->add_option("--t", as1_t, "height")->required()->check(CLI::NonNegativeNumber);
  as1->add_option("--method", as1_method, "direct or littlewood")
      ->check(CLI::IsMember({"direct", "littlewood"}));
  as1->add_option("--zeros", as1_zeros, "zero file")->check(CLI::ExistingFile);
  auto* al2 = arg->add_subcommand("lemma2", "running integral of log|zeta| from T");
  double al2_T = 10, al2_max = 0;
  std::size_t al2_points = 100;
  std::string al2_zeros;
  al2->add_option("--T", al2_T, "start")->required();
  al2->add_option("--tmax", al2_max, "end")->required();
  al2->add_option("--points", al2_points, "grid size")->check(CLI::Range(1, 10000000));
  al2->add_option("--zeros", al2_zeros, "zero file")->check(CLI::ExistingFile);
  auto* aom = arg->add_subcommand("omega", "windowed integrals over [T, 2T]");
  double aom_T = 1000, aom_h = 0.3;
  std::string aom_zeros;
  aom->add_option("--T", aom_T, "start")->required();
  aom->add_option("--h", aom_h, "half window")->required();
  aom->add_option("--zeros", aom_zeros, "zero file")->check(CLI::ExistingFile);

  // resonator
  auto* res = app.add_subcommand("resonator", "build resonator tables and check the resonance ratios");
  res->require_subcommand(1);
  auto* rbuild = res->add_subcommand("build", "write a resonator table");
  ResonatorFlags rb;
  std::string rb_sign = "plus", rb_out;
  std::size_t rb_cap = kDefaultEntryCap;
  add_resonator_flags(rbuild, rb);
  rbuild->add_option("--sign", rb_sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  rbuild->add_option("--out", rb_out, "table file")->required();
  rbuild->add_option("--cap", rb_cap, "maximum number of entries");
  auto* rcheck = res->add_subcommand("check", "ratios of both sign variants");
  ResonatorFlags rc_flags;
  add_resonator_flags(rcheck, rc_flags);

  // mv
  auto* mv = app.add_subcommand("mv", "mean values of Dirichlet polynomials");
  mv->require_subcommand(1);
  auto* mexact = mv->add_subcommand("exact", "int_T^2T |R|^2 in closed form");
  std::string me_table;
  double me_T = 0;
  mexact->add_option("--table", me_table, "table file")->required()->check(CLI::ExistingFile);
  mexact->add_option("--T", me_T, "height")->required()->check(CLI::PositiveNumber);
  auto* ml3 = mv->add_subcommand("lemma3", "both sides of the log zeta mean value");
  std::string ml_table;
  Lemma3Request ml;
  ml3->add_option("--table", ml_table, "table file")->required()->check(CLI::ExistingFile);
  ml3->add_option("--alpha", ml.alpha, "real part alpha")->required();
  ml3->add_option("--h", ml.h, "shift h")->required();
  ml3->add_option("--T", ml.T, "height")->required()->check(CLI::PositiveNumber);
  ml3->add_option("--eps-margin", ml.eps_margin, "minimum alpha - 1/2");

  // report
  auto* report = app.add_subcommand("report", "run one acceptance suite");
  std::string suite;
  std::vector<std::string> choices = verify::suite_ids();
  choices.push_back("all");
  report->add_option("suite", suite, "suite id or all")->required()->check(CLI::IsMember(choices));
  std::string report_zeros;
  report->add_option("--zeros", report_zeros, "verified zero file to reuse")->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const RunConfig rc = resolve_config(g);
    set_worker_count(rc.parallelism);
    const PrecisionConfig& cfg = rc.precision;

    if (*zeta) {
      if (z_hardy) {
        const HardyValue z = hardy_z(z_t, cfg);
        Table t({"t", "Z", "abs_error", "method"});
        t.add({z_t, z.value, z.abs_error,
               z.method == ZMethod::RiemannSiegel ? "riemann_siegel" : "euler_maclaurin"});
        emit(t, rc, out, true);
      } else {
        const ZetaValue z = zeta_em({z_sigma, z_t}, cfg);
        Table t({"sigma", "t", "re", "im", "abs_error"});
        t.add({z_sigma, z_t, z.value.real(), z.value.imag(), z.abs_error});
        emit(t, rc, out, true);
      }
    } else if (*zfind) {
      ZeroSearchOptions opt;
      opt.ordinate_tol = zf_tol;
      const ZeroList list = find_zeros_up_to(zf_max, cfg, opt);
      export_zeros_file(list, zf_out);
      Table t({"count", "covered_height", "verified", "file"});
      t.add({list.ordinates.size(), list.covered_height, list.verified, zf_out});
      emit(t, rc, out, true);
    } else if (*zverify) {
      const ZeroList list = verify_zero_list(import_zeros_file(zv_in), cfg);
      Table t({"count", "covered_height", "verified"});
      t.add({list.ordinates.size(), list.covered_height, list.verified});
      emit(t, rc, out, true);
    } else if (*iscan) {
      if (!(is_max > is_min)) throw UsageError("--tmax must exceed --tmin");
      std::vector<double> heights(is_points);
      for (std::size_t i = 0; i < is_points; ++i) {
        const double f = is_points == 1 ? 1.0 : static_cast<double>(i) / (is_points - 1);
        heights[i] = is_min * std::pow(is_max / is_min, f);
      }
      heights.back() = is_max;
      const ZeroList z = obtain_zeros(is_zeros, is_max, rc);
      const auto values = compute_I_ladder(heights, z, cfg);
      Table t = integral_table();
      std::vector<ScanSample> samples;
      for (std::size_t i = 0; i < heights.size(); ++i) {
        add_integral_row(t, heights[i], values[i]);
        const double T = heights[i];
        samples.push_back({T, values[i].value, values[i].value * T * T / std::log(T), false});
      }
      std::ofstream file(is_out);
      if (!file) raise(ErrorKind::IoError, "cannot write " + is_out);
      t.write_csv(file);
      flag_sign_changes(samples);
      const ScanReport fit = fit_decay(samples, parse_decay_model(is_model));
      json doc;
      doc["model"] = is_model;
      doc["fitted_params"] = fit.fitted_params;
      doc["residual_rms"] = fit.residual_rms;
      doc["flagged"] = std::count_if(samples.begin(), samples.end(), [](auto& s) { return s.flagged; });
      double sup = 0;
      for (const auto& s : samples) sup = std::max(sup, std::fabs(s.normalized));
      doc["sup_normalized"] = sup;
      doc["out"] = is_out;
      emit(doc, out);
    } else if (*integral) {
      if (integral->count("--T") == 0) throw UsageError("integral requires --T (or the scan subcommand)");
      const double top = i_tmax ? *i_tmax : i_T;
      const ZeroList z = obtain_zeros(i_zeros, top, rc);
      const IntegralResult r = i_tmax ? tail_I(i_T, *i_tmax, z, cfg) : compute_I(i_T, z, cfg);
      Table t = integral_table();
      add_integral_row(t, i_T, r);
      emit(t, rc, out, true);
    } else if (*as) {
      const double S = S_of_t(as_t, cfg);
      Table t({"t", "stat", "normalized"});
      t.add({as_t, S, as_t > std::exp(1.0) ? S / std::log(as_t) : S});
      emit(t, rc, out, true);
    } else if (*as1) {
      double v = 0;
      if (as1_method == "littlewood") {
        v = S1_littlewood(as1_t, cfg);
      } else {
        v = S1_direct(as1_t, obtain_zeros(as1_zeros, as1_t, rc), cfg);
      }
      Table t({"t", "stat", "normalized"});
      t.add({as1_t, v, as1_t > std::exp(1.0) ? v / std::log(as1_t) : v});
      emit(t, rc, out, true);
    } else if (*al2) {
      if (!(al2_max > al2_T)) throw UsageError("--tmax must exceed --T");
      std::vector<double> grid(al2_points);
      for (std::size_t i = 0; i < al2_points; ++i) {
        grid[i] = al2_T + (al2_max - al2_T) * static_cast<double>(i + 1) / al2_points;
      }
      grid.back() = al2_max;
      const ScanReport r = lemma2_scan(al2_T, grid, obtain_zeros(al2_zeros, al2_max, rc), cfg);
      emit(scan_table(r), rc, out);
    } else if (*aom) {
      const ScanReport r = omega_scan(aom_T, aom_h, obtain_zeros(aom_zeros, 2 * aom_T + aom_h, rc), cfg);
      emit(scan_table(r), rc, out);
    } else if (*rbuild) {
      const ResonatorParams p = rb.params();
      const ResonatorTable table = build_resonator(p, parse_sign_variant(rb_sign), rb_cap);
      write_table_file(table, rb_out);
      Table t({"entries", "max_n", "sum_squares", "L", "A", "B", "file"});
      t.add({table.entries.size(), table.max_n(), table.sum_squares(), p.L, p.A, p.B, rb_out});
      emit(t, rc, out, true);
    } else if (*rcheck) {
      const Lemma4Result r = lemma4_check(rc_flags.params());
      emit(json{{"ratio_plus", r.ratio_plus},
                {"ratio_minus", r.ratio_minus},
                {"normalized_plus", r.normalized_plus},
                {"normalized_minus", r.normalized_minus}},
           out);
    } else if (*mexact) {
      const ResonatorTable table = read_table_file(me_table);
      const double ms = mean_square_exact(table, me_T);
      const double diag = me_T * table.sum_squares();
      emit(json{{"T", me_T},
                {"mean_square", ms},
                {"diagonal", diag},
                {"ratio", ms / diag},
                {"offdiagonal_bound", mean_square_offdiagonal_delta(table, me_T)}},
           out);
    } else if (*ml3) {
      const ResonatorTable table = read_table_file(ml_table);
      ml.table = &table;
      const Lemma3Comparison c = lemma3_compare(ml, cfg);
      emit(json{{"lhs_re", c.lhs.value.real()},
                {"lhs_im", c.lhs.value.imag()},
                {"rhs_re", c.rhs.real()},
                {"rhs_im", c.rhs.imag()},
                {"normalized_gap", c.normalized_gap},
                {"lhs_abs_error", c.lhs.abs_error},
                {"gap", c.gap}},
           out);
    } else if (*report) {
      verify::SuiteContext ctx(cfg);
      if (!report_zeros.empty()) ctx.provide_zeros(verify_zero_list(import_zeros_file(report_zeros), cfg));
      const std::vector<std::string> ids =
          suite == "all" ? verify::suite_ids() : std::vector<std::string>{suite};
      json docs = json::array();
      for (const auto& id : ids) {
        const verify::SuiteResult r = verify::run_suite(id, ctx);
        if (!r.error.empty()) {
          err << dump17(json{{"error", r.error_kind}, {"message", r.error}, {"criterion_id", id}}) << '\n';
          return kExitComputation;
        }
        docs.push_back(suite_json(r));
      }
      emit(ids.size() == 1 ? docs[0] : docs, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << dump17(json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}) << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    json doc{{"error", "Internal"}, {"message", e.what()}};
    err << dump17(doc) << '\n';
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace bsy::cli
