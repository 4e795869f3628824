#include "bsy/resonator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <boost/math/tools/toms748_solve.hpp>

#include "bsy/arith.hpp"
#include "bsy/error.hpp"
#include "bsy/parallel.hpp"
#include "bsy/summation.hpp"

namespace bsy {

namespace {

constexpr double kMinLogL = 1.01;

double constraint(double L, double log_n, int nu) {
  const double k = 2.0 * nu + 1.0;
  return 2 * std::log(L) + k * std::log(3 * std::log(L)) - std::log(k * log_n);
}

void enumerate(const std::vector<std::uint64_t>& primes, std::size_t from, std::uint64_t n,
               double r, const ResonatorParams& params, std::vector<ResonatorEntry>& out,
               std::size_t cap) {
  for (std::size_t i = from; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (n > params.N / p) break;
    const double lp = std::log(static_cast<double>(p));
    const double rp = params.L * std::pow(lp, params.nu) / std::sqrt(static_cast<double>(p));
    if (out.size() >= cap) {
      raise(ErrorKind::TableTooLarge, "resonator table exceeds " + std::to_string(cap) + " entries");
    }
    out.push_back({n * p, r * rp});
    enumerate(primes, i + 1, n * p, r * rp, params, out, cap);
  }
}

}  // namespace

std::string to_string(SignVariant variant) { return variant == SignVariant::Plus ? "plus" : "minus"; }

SignVariant parse_sign_variant(const std::string& name) {
  if (name == "plus") return SignVariant::Plus;
  if (name == "minus") return SignVariant::Minus;
  raise(ErrorKind::InvalidArgument, "sign must be plus or minus, got '" + name + "'");
}

void ResonatorParams::validate() const {
  require(mu >= 0 && nu >= 0, ErrorKind::InvalidArgument, "mu and nu must be non-negative");
  require(N > 1, ErrorKind::InvalidArgument, "N must exceed 1");
  require(h >= 0 && h <= 1, ErrorKind::InvalidArgument, "h must lie in [0, 1]");
  require(L > 0 && A > 0 && B > 0 && A < B, ErrorKind::InvalidArgument,
          "need L, A, B > 0 and A < B");
  if (!override) {
    const double k = 2.0 * nu + 1.0;
    const auto rel = [](double x, double y) { return std::fabs(x - y) <= 1e-10 * std::fabs(y); };
    const bool ok = rel(A, L * L * std::pow(std::log(L), k)) && rel(B, L * L * L) &&
                    rel(L * L * std::pow(std::log(B), k), k * std::log(static_cast<double>(N)));
    require(ok, ErrorKind::InvalidArgument, "(L, A, B) do not satisfy the resonator equations");
  }
}

double ResonatorTable::r(std::uint64_t n) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), n,
                                   [](const ResonatorEntry& e, std::uint64_t v) { return e.n < v; });
  return (it != entries.end() && it->n == n) ? it->r : 0.0;
}

double ResonatorTable::sum_squares() const {
  CompensatedSum<double> s;
  for (const auto& e : entries) s.add(e.r * e.r);
  return s.value();
}

double solve_L(std::uint64_t N, int nu) {
  require(N > 1 && nu >= 0, ErrorKind::InvalidArgument, "solve_L needs N > 1, nu >= 0");
  const double log_n = std::log(static_cast<double>(N));
  // The constraint is increasing in L for log L > 0; a root above e^1.01
  // exists iff the constraint is negative there.
  double lo = std::exp(kMinLogL);
  if (constraint(lo, log_n, nu) >= 0) {
    raise(ErrorKind::Degenerate, "no root L > e^1.01 for N = " + std::to_string(N) +
                                     ", nu = " + std::to_string(nu) + "; use override mode");
  }
  double hi = 2 * lo;
  while (constraint(hi, log_n, nu) < 0) {
    lo = hi;
    hi *= 2;
  }
  std::uintmax_t iterations = 200;
  auto f = [&](double L) { return constraint(L, log_n, nu); };
  auto done = [](double a, double b) { return std::fabs(b - a) <= 1e-14 * std::fabs(b); };
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, done, iterations);
  return 0.5 * (a + b);
}

ResonatorParams make_params(int mu, int nu, std::uint64_t N, double h) {
  ResonatorParams p;
  p.mu = mu;
  p.nu = nu;
  p.N = N;
  p.h = h;
  p.L = solve_L(N, nu);
  p.A = p.L * p.L * std::pow(std::log(p.L), 2.0 * nu + 1.0);
  p.B = p.L * p.L * p.L;
  p.override = false;
  p.validate();
  return p;
}

ResonatorTable build_resonator(const ResonatorParams& params, SignVariant variant,
                               std::size_t entry_cap) {
  params.validate();
  // Primes strictly inside (A, B).
  const auto lo = static_cast<std::uint64_t>(std::floor(params.A)) + 1;
  const double top = std::min(params.B, static_cast<double>(params.N) + 1);
  auto hi = static_cast<std::uint64_t>(std::ceil(top)) - 1;
  std::vector<std::uint64_t> primes;
  if (hi >= lo) primes = primes_between(lo, hi);
  std::erase_if(primes, [&](std::uint64_t p) {
    const double x = static_cast<double>(p);
    return !(x > params.A && x < params.B);
  });

  ResonatorTable table;
  table.sign = variant;
  table.params = params;
  table.entries.push_back({1, 1.0});
  enumerate(primes, 0, 1, 1.0, params, table.entries, entry_cap);
  std::sort(table.entries.begin(), table.entries.end(),
            [](const ResonatorEntry& a, const ResonatorEntry& b) { return a.n < b.n; });
  if (variant == SignVariant::Minus) {
    for (auto& e : table.entries) {
      if (distinct_prime_factors(e.n) % 2 == 1) e.r = -e.r;
    }
  }
  return table;
}

double resonator_numerator(const ResonatorTable& table, int mu, int nu, double h) {
  // Primes dividing some entry; only those can appear as n = p with r(mp) != 0.
  std::vector<std::uint64_t> primes;
  for (const auto& e : table.entries) {
    std::uint64_t n = e.n;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
      if (n % p == 0) {
        primes.push_back(p);
        while (n % p == 0) n /= p;
      }
    }
    if (n > 1) primes.push_back(n);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  const auto terms = parallel_map(primes.size(), [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    const double lp = std::log(static_cast<double>(p));
    const double weight = lp * std::pow(std::sin(h * lp), mu) /
                          (std::sqrt(static_cast<double>(p)) * std::pow(lp, nu));
    CompensatedSum<double> inner;
    const std::uint64_t limit = table.params.N >= p ? table.params.N / p : 0;
    const std::uint64_t bound = std::max(limit, table.max_n() / p);
    for (const auto& e : table.entries) {
      if (e.n > bound) break;
      if (e.n % p == 0) continue;
      const double rmp = table.r(e.n * p);
      if (rmp != 0.0) inner.add(e.r * rmp);
    }
    return weight * inner.value();
  });
  CompensatedSum<double> total;
  for (const double t : terms) total.add(t);
  return total.value();
}

double resonator_denominator(const ResonatorTable& table) { return table.sum_squares(); }

Lemma4Result lemma4_check(const ResonatorParams& params) {
  params.validate();
  const double log_n = std::log(static_cast<double>(params.N));
  require(log_n > 1, ErrorKind::Degenerate, "log log N must be positive");
  const double loglog = std::log(log_n);
  require(params.h <= 1 / loglog, ErrorKind::InvalidArgument,
          "h must lie in [0, 1 / log log N]");
  Lemma4Result out;
  const ResonatorTable plus = build_resonator(params, SignVariant::Plus);
  const ResonatorTable minus = build_resonator(params, SignVariant::Minus);
  out.ratio_plus = resonator_numerator(plus, params.mu, params.nu, params.h) / resonator_denominator(plus);
  out.ratio_minus =
      resonator_numerator(minus, params.mu, params.nu, params.h) / resonator_denominator(minus);
  out.normalizer = std::pow(params.h, params.mu) * std::sqrt(log_n) *
                   std::pow(loglog, params.mu - params.nu + 0.5);
  if (out.normalizer > 0) {
    out.normalized_plus = out.ratio_plus / out.normalizer;
    out.normalized_minus = out.ratio_minus / out.normalizer;
  }
  return out;
}

void write_table(const ResonatorTable& table, std::ostream& out) {
  const auto& p = table.params;
  out << std::setprecision(17);
  out << "# resonator table: n r(n)\n";
  out << "# sign = " << to_string(table.sign) << '\n';
  out << "# mu = " << p.mu << "\n# nu = " << p.nu << "\n# N = " << p.N << "\n# h = " << p.h
      << "\n# L = " << p.L << "\n# A = " << p.A << "\n# B = " << p.B
      << "\n# override = " << (p.override ? "true" : "false") << '\n';
  for (const auto& e : table.entries) out << e.n << ' ' << e.r << '\n';
}

void write_table_file(const ResonatorTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorKind::IoError, "cannot write " + path);
  write_table(table, out);
}

ResonatorTable read_table(std::istream& in) {
  ResonatorTable table;
  std::map<std::string, std::string> header;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto eq = line.find('=');
      if (eq != std::string::npos) {
        std::istringstream k(line.substr(first + 1, eq - first - 1)), v(line.substr(eq + 1));
        std::string key, value;
        k >> key;
        v >> value;
        header[key] = value;
      }
      continue;
    }
    std::istringstream fields(line);
    ResonatorEntry e;
    std::string rest;
    if (!(fields >> e.n >> e.r) || (fields >> rest) || e.n == 0 || !std::isfinite(e.r)) {
      raise(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 'n r(n)'");
    }
    if (!table.entries.empty() && e.n <= table.entries.back().n) {
      raise(ErrorKind::NotAscending, "line " + std::to_string(line_no) + ": n not ascending");
    }
    table.entries.push_back(e);
  }
  auto get = [&](const char* key, auto& field) {
    const auto it = header.find(key);
    if (it == header.end()) return;
    std::istringstream v(it->second);
    if (!(v >> field)) raise(ErrorKind::ParseError, std::string("bad header value for ") + key);
  };
  auto& p = table.params;
  get("mu", p.mu);
  get("nu", p.nu);
  get("N", p.N);
  get("h", p.h);
  get("L", p.L);
  get("A", p.A);
  get("B", p.B);
  p.override = true;
  if (header.count("sign")) table.sign = parse_sign_variant(header["sign"]);
  if (!header.count("N")) p.N = std::max<std::uint64_t>(table.max_n(), 2);
  return table;
}

ResonatorTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoError, "cannot open " + path);
  return read_table(in);
}

}  // namespace bsy
