#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bsy {

enum class SignVariant { Plus, Minus };

std::string to_string(SignVariant variant);
SignVariant parse_sign_variant(const std::string& name);

struct ResonatorParams {
  int mu = 0;
  int nu = 0;
  std::uint64_t N = 2;
  double h = 0.0;
  double L = 1.0;
  double A = 1.0;
  double B = 1.0;
  /// When set, (L, A, B) are taken as given instead of solved from (N, nu).
  bool override = false;

  /// Throws InvalidArgument when the invariants fail.
  void validate() const;
};

struct ResonatorEntry {
  std::uint64_t n = 1;
  double r = 1.0;
};

/// Coefficients r(n) of a Dirichlet polynomial, ascending in n. Tables built
/// here are resonators; tables read from files may be arbitrary.
struct ResonatorTable {
  std::vector<ResonatorEntry> entries;
  SignVariant sign = SignVariant::Plus;
  ResonatorParams params;

  /// r(n), or 0 when n is not in the table.
  double r(std::uint64_t n) const;
  std::uint64_t max_n() const { return entries.empty() ? 0 : entries.back().n; }
  double sum_squares() const;
};

inline constexpr std::size_t kDefaultEntryCap = 10'000'000;

/// Root L > e^1.01 of L^2 (3 log L)^(2 nu + 1) = (2 nu + 1) log N.
/// Throws Degenerate when no such root exists.
double solve_L(std::uint64_t N, int nu);

/// Parameters with L solved from (N, nu), A = L^2 (log L)^(2 nu + 1), B = L^3.
ResonatorParams make_params(int mu, int nu, std::uint64_t N, double h);

/// Squarefree n <= N whose prime factors all lie in (A, B), with
/// r(n) = prod_{p | n} L (log p)^nu / sqrt(p), times mu(n) for Minus.
ResonatorTable build_resonator(const ResonatorParams& params, SignVariant variant,
                               std::size_t entry_cap = kDefaultEntryCap);

/// sum_{mn <= N} Lambda(n) sin^mu(h log n) r(m) r(mn) / (sqrt(n) (log n)^nu),
/// reduced to prime n = p (r(mn) != 0 forces mn squarefree, so n = p with
/// p not dividing m). Valid for tables supported on squarefree integers.
double resonator_numerator(const ResonatorTable& table, int mu, int nu, double h);

/// sum_n r(n)^2.
double resonator_denominator(const ResonatorTable& table);

struct Lemma4Result {
  double ratio_plus = 0.0;
  double ratio_minus = 0.0;
  double normalized_plus = 0.0;
  double normalized_minus = 0.0;
  double normalizer = 0.0;
};

/// Numerator / denominator for both sign variants, and the ratios divided by
/// h^mu (log N)^(1/2) (log log N)^(mu - nu + 1/2).
Lemma4Result lemma4_check(const ResonatorParams& params);

/// Text table: '#' header lines with the parameters, then "n r(n)" per line.
void write_table(const ResonatorTable& table, std::ostream& out);
void write_table_file(const ResonatorTable& table, const std::string& path);
ResonatorTable read_table(std::istream& in);
ResonatorTable read_table_file(const std::string& path);

}  // namespace bsy
