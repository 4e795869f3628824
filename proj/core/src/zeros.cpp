#include "bsy/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <boost/math/tools/toms748_solve.hpp>

#include "bsy/argument.hpp"
#include "bsy/error.hpp"
#include "bsy/parallel.hpp"
#include "bsy/zeta.hpp"

namespace bsy {

namespace {

constexpr double kFirstWindowEnd = 10.0;  // Z < 0 on [0, 10]

// Sign evaluation for scanning: a cheap low-accuracy Z, re-evaluated at root
// accuracy whenever the cheap value does not determine the sign.
class Probe {
 public:
  explicit Probe(double ordinate_tol) {
    loose_.target_abs_error = 1e-6;
    loose_.quad_tol = 1e-6;
    loose_.rs_correction_terms = 4;
    root_.target_abs_error = std::max(0.1 * ordinate_tol, 1e-13);
    root_.quad_tol = std::max(root_.quad_tol, root_.target_abs_error);
    root_.rs_correction_terms = 4;
  }

  double sign_value(double t) const {
    const HardyValue v = hardy_z(t, loose_);
    if (std::fabs(v.value) > 2 * v.abs_error) return v.value;
    return hardy_z(t, root_).value;
  }
  double precise(double t) const { return hardy_z(t, root_).value; }
  const PrecisionConfig& root_config() const { return root_; }

 private:
  PrecisionConfig loose_;
  PrecisionConfig root_;
};

double mean_spacing(double t) {
  const double x = t / (2 * std::numbers::pi);
  return x > std::numbers::e ? 2 * std::numbers::pi / std::log(x) : 2 * std::numbers::pi;
}

struct Bracket {
  double a, b, fa, fb;
};

std::vector<Bracket> scan(double a, double b, double step, const Probe& probe) {
  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / step)));
  const double h = (b - a) / static_cast<double>(n);
  std::vector<Bracket> out;
  double x0 = a;
  double f0 = probe.sign_value(a);
  for (std::size_t i = 1; i <= n; ++i) {
    const double x1 = (i == n) ? b : a + h * static_cast<double>(i);
    const double f1 = probe.sign_value(x1);
    if ((f0 < 0) != (f1 < 0)) out.push_back({x0, x1, f0, f1});
    x0 = x1;
    f0 = f1;
  }
  return out;
}

double refine(const Bracket& br, const Probe& probe, double tol) {
  double fa = probe.precise(br.a);
  double fb = probe.precise(br.b);
  if ((fa < 0) == (fb < 0)) {
    // The loose signs were decisive, so this only happens when the root is
    // within rounding of an endpoint.
    return std::fabs(fa) < std::fabs(fb) ? br.a : br.b;
  }
  std::uintmax_t iterations = 200;
  auto f = [&](double t) { return probe.precise(t); };
  auto done = [tol](double lo, double hi) { return std::fabs(hi - lo) <= tol; };
  const auto [lo, hi] = boost::math::tools::toms748_solve(f, br.a, br.b, fa, fb, done, iterations);
  return 0.5 * (lo + hi);
}

// Counts at a boundary; nudges the boundary forward when it sits on an ordinate.
std::pair<double, long long> counted_boundary(double t, const PrecisionConfig& cfg) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      return {t, count_zeros_formula(t, cfg)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OnOrdinate) throw;
      t += 1e-4;
    }
  }
  raise(ErrorKind::Inconsistent, "cannot place a window boundary near t = " + std::to_string(t));
}

std::vector<double> window_zeros(double a, double b, long long expected, const Probe& probe,
                                 const ZeroSearchOptions& options) {
  double step = mean_spacing(b) / 6;
  std::vector<Bracket> found;
  for (int level = 0; level <= options.max_refinements; ++level) {
    found = scan(a, b, step, probe);
    if (static_cast<long long>(found.size()) >= expected) break;
    step *= 0.5;
  }
  if (static_cast<long long>(found.size()) != expected) {
    raise(ErrorKind::Inconsistent, "window [" + std::to_string(a) + ", " + std::to_string(b) +
                                       "]: " + std::to_string(found.size()) +
                                       " sign changes, expected " + std::to_string(expected));
  }
  std::vector<double> roots;
  roots.reserve(found.size());
  const double tol = 0.01 * options.ordinate_tol;
  for (const auto& br : found) roots.push_back(refine(br, probe, tol));
  return roots;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty() || s.front() == '+') return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace

std::size_t ZeroList::count_below(double t) const {
  return static_cast<std::size_t>(std::upper_bound(ordinates.begin(), ordinates.end(), t) -
                                  ordinates.begin());
}

double ZeroList::nearest(double t) const {
  if (ordinates.empty()) return std::nan("");
  const auto it = std::lower_bound(ordinates.begin(), ordinates.end(), t);
  if (it == ordinates.end()) return ordinates.back();
  if (it == ordinates.begin()) return *it;
  return (*it - t) < (t - *(it - 1)) ? *it : *(it - 1);
}

long long count_zeros_formula(double t, const PrecisionConfig& cfg) {
  require(t >= kThetaMinT, ErrorKind::DomainTooSmall, "count_zeros requires t >= 10");
  double s = 0.0;
  try {
    s = S_branch(t, cfg);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ZeroOnPath) {
      raise(ErrorKind::OnOrdinate, "t = " + std::to_string(t) + " is at an ordinate");
    }
    throw;
  }
  const double x = rs_theta(t) / std::numbers::pi + 1 + s;
  const double r = std::round(x);
  if (std::fabs(x - r) > 0.25) {
    raise(ErrorKind::OnOrdinate,
          "theta/pi + 1 + S = " + std::to_string(x) + " is not near an integer at t = " +
              std::to_string(t));
  }
  return static_cast<long long>(r);
}

long long count_sign_changes(double t, double step, const PrecisionConfig& /*cfg*/) {
  require(t >= 0 && step > 0, ErrorKind::InvalidArgument, "count_sign_changes needs t >= 0, step > 0");
  if (t == 0) return 0;
  const Probe probe(ZeroSearchOptions{}.ordinate_tol);
  return static_cast<long long>(scan(0.0, t, step, probe).size());
}

long long count_zeros(double t, const PrecisionConfig& cfg) {
  const long long n = count_zeros_formula(t, cfg);
  const ZeroSearchOptions options;
  double step = mean_spacing(t) / 6;
  long long changes = 0;
  for (int level = 0; level <= options.max_refinements; ++level) {
    changes = count_sign_changes(t, step, cfg);
    if (changes >= n) break;
    step *= 0.5;
  }
  if (changes != n) {
    raise(ErrorKind::Inconsistent, "N(" + std::to_string(t) + "): formula gives " +
                                       std::to_string(n) + ", sign changes " +
                                       std::to_string(changes));
  }
  return n;
}

ZeroList find_zeros_up_to(double T, const PrecisionConfig& cfg, const ZeroSearchOptions& options) {
  cfg.validate();
  require(T >= 15, ErrorKind::DomainTooSmall, "find_zeros_up_to requires T >= 15");
  require(options.ordinate_tol > 0, ErrorKind::InvalidArgument, "ordinate_tol must be positive");

  std::vector<double> edges{0.0, kFirstWindowEnd};
  while (edges.back() < T) {
    const double next = edges.back() + std::max(10.0, 20 * mean_spacing(edges.back()));
    edges.push_back(std::min(next, T));
  }
  if (T - edges[edges.size() - 2] < 1.0 && edges.size() > 3) edges.erase(edges.end() - 2);

  const auto counted = parallel_map(edges.size() - 1, [&](std::size_t i) {
    return counted_boundary(edges[i + 1], cfg);
  });
  std::vector<double> at{0.0};
  std::vector<long long> n{0};
  for (const auto& [x, c] : counted) {
    at.push_back(x);
    n.push_back(c);
  }
  require(n[1] == 0, ErrorKind::Inconsistent, "zero count below 10 is not 0");

  const Probe probe(options.ordinate_tol);
  const auto pieces = parallel_map(at.size() - 1, [&](std::size_t i) {
    return window_zeros(at[i], at[i + 1], n[i + 1] - n[i], probe, options);
  });

  ZeroList list;
  list.source = ZeroSource::Computed;
  list.covered_height = T;
  for (const auto& p : pieces) list.ordinates.insert(list.ordinates.end(), p.begin(), p.end());
  // A boundary nudged past T may have picked up an ordinate just above it.
  while (!list.ordinates.empty() && list.ordinates.back() > T) list.ordinates.pop_back();
  for (std::size_t i = 1; i < list.ordinates.size(); ++i) {
    require(list.ordinates[i] > list.ordinates[i - 1], ErrorKind::Inconsistent,
            "ordinates not strictly ascending at index " + std::to_string(i));
  }
  list.verified = true;
  return list;
}

ZeroList import_zeros(std::istream& in) {
  ZeroList list;
  list.source = ZeroSource::Imported;
  list.verified = false;
  double covered = std::nan("");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      const std::string_view key = "covered_height";
      const auto pos = body.find(key);
      if (pos != std::string_view::npos) {
        auto rest = trim(body.substr(pos + key.size()));
        if (!rest.empty() && rest.front() == '=') rest = trim(rest.substr(1));
        if (!parse_double(rest, covered)) {
          raise(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad covered_height");
        }
      }
      continue;
    }
    double value = 0.0;
    if (!parse_double(body, value) || value <= 0) {
      raise(ErrorKind::ParseError,
            "line " + std::to_string(line_no) + ": not a positive ordinate: '" + std::string(body) + "'");
    }
    if (!list.ordinates.empty() && value <= list.ordinates.back()) {
      raise(ErrorKind::NotAscending, "line " + std::to_string(line_no) + ": " +
                                         std::string(body) + " does not exceed the previous ordinate");
    }
    list.ordinates.push_back(value);
  }
  const double last = list.ordinates.empty() ? 0.0 : list.ordinates.back();
  list.covered_height = std::isnan(covered) ? last : covered;
  require(list.covered_height >= last, ErrorKind::ParseError,
          "covered_height below the last ordinate");
  return list;
}

ZeroList import_zeros_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoError, "cannot open " + path);
  return import_zeros(in);
}

void export_zeros(const ZeroList& list, std::ostream& out) {
  out << "# zeros of zeta(1/2 + i t), one ordinate per line\n";
  out << "# covered_height = " << std::setprecision(17) << list.covered_height << '\n';
  out << "# source = " << (list.source == ZeroSource::Computed ? "computed" : "imported") << '\n';
  for (const double g : list.ordinates) out << std::setprecision(17) << g << '\n';
}

void export_zeros_file(const ZeroList& list, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorKind::IoError, "cannot write " + path);
  export_zeros(list, out);
  if (!out) raise(ErrorKind::IoError, "write failed for " + path);
}

ZeroList verify_zero_list(const ZeroList& list, const PrecisionConfig& cfg, double ordinate_tol) {
  const auto& g = list.ordinates;
  for (std::size_t i = 0; i < g.size(); ++i) {
    require(g[i] > 0 && (i == 0 || g[i] > g[i - 1]) && g[i] <= list.covered_height,
            ErrorKind::Inconsistent, "ordinate index " + std::to_string(i) + " out of order");
  }
  double h = list.covered_height;
  long long expected = 0;
  if (h >= kThetaMinT) {
    for (int attempt = 0;; ++attempt) {
      try {
        expected = count_zeros(h, cfg);
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::OnOrdinate || attempt > 4) throw;
        h += 1e-7;
      }
    }
  }
  if (expected != static_cast<long long>(list.count_below(h))) {
    raise(ErrorKind::Inconsistent, "list holds " + std::to_string(list.count_below(h)) +
                                       " ordinates below " + std::to_string(h) + ", N = " +
                                       std::to_string(expected) + " (index " +
                                       std::to_string(std::min<long long>(expected, list.count_below(h))) +
                                       ")");
  }
  const Probe probe(ordinate_tol);
  const auto ok = parallel_map(g.size(), [&](std::size_t i) {
    const HardyValue z = hardy_z(g[i], probe.root_config());
    constexpr double d = 1e-5;
    const double slope = (probe.precise(g[i] + d) - probe.precise(g[i] - d)) / (2 * d);
    return std::fabs(z.value) <= ordinate_tol * std::fabs(slope) + 2 * z.abs_error;
  });
  for (std::size_t i = 0; i < ok.size(); ++i) {
    if (!ok[i]) {
      raise(ErrorKind::Inconsistent, "Z does not vanish at index " + std::to_string(i) +
                                         " (t = " + std::to_string(g[i]) + ")");
    }
  }
  ZeroList out = list;
  out.verified = true;
  return out;
}

}  // namespace bsy
