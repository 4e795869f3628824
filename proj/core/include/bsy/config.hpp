#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "bsy/precision.hpp"

namespace bsy {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  PrecisionConfig precision;
  std::string zero_cache_path;
  OutputFormat output_format = OutputFormat::Csv;
  std::size_t parallelism = 1;

  static constexpr std::size_t kMaxParallelism = 256;

  void validate() const;
};

/// Applies `key = value` lines ('#' comments) on top of `base`. Keys:
/// target_abs_error, euler_maclaurin_terms, rs_correction_terms, quad_tol,
/// max_subdivisions, zero_cache, format (csv|json), parallelism.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Defaults, overridden by the file named in BSY_CONFIG when set.
RunConfig default_run_config();

}  // namespace bsy
