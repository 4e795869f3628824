#include "bsy/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <string_view>
#include <thread>

#include "bsy/error.hpp"

namespace bsy {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    raise(ErrorKind::ParseError, "config line " + std::to_string(line) + ": bad number '" +
                                     std::string(text) + "'");
  }
  return value;
}

}  // namespace

void RunConfig::validate() const {
  precision.validate();
  require(parallelism >= 1 && parallelism <= kMaxParallelism, ErrorKind::InvalidArgument,
          "parallelism must lie in [1, " + std::to_string(kMaxParallelism) + "]");
}

RunConfig parse_config(std::istream& in, RunConfig cfg) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view body = raw;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      raise(ErrorKind::ParseError, "config line " + std::to_string(line) + ": expected key = value");
    }
    const std::string_view key = trim(body.substr(0, eq));
    const std::string_view value = trim(body.substr(eq + 1));
    auto& p = cfg.precision;
    if (key == "target_abs_error") {
      p.target_abs_error = parse_number<double>(value, line);
    } else if (key == "euler_maclaurin_terms") {
      p.euler_maclaurin_terms = parse_number<int>(value, line);
    } else if (key == "rs_correction_terms") {
      p.rs_correction_terms = parse_number<int>(value, line);
    } else if (key == "quad_tol") {
      p.quad_tol = parse_number<double>(value, line);
    } else if (key == "max_subdivisions") {
      p.max_subdivisions = parse_number<int>(value, line);
    } else if (key == "zero_cache") {
      cfg.zero_cache_path = std::string(value);
    } else if (key == "format") {
      if (value == "csv") {
        cfg.output_format = OutputFormat::Csv;
      } else if (value == "json") {
        cfg.output_format = OutputFormat::Json;
      } else {
        raise(ErrorKind::ParseError, "config line " + std::to_string(line) + ": format must be csv or json");
      }
    } else if (key == "parallelism") {
      cfg.parallelism = parse_number<std::size_t>(value, line);
    } else {
      raise(ErrorKind::ParseError,
            "config line " + std::to_string(line) + ": unknown key '" + std::string(key) + "'");
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoError, "cannot open config " + path);
  return parse_config(in, base);
}

RunConfig default_run_config() {
  RunConfig cfg;
  cfg.parallelism = std::max(1u, std::thread::hardware_concurrency());
  if (const char* path = std::getenv("BSY_CONFIG"); path != nullptr && *path != '\0') {
    cfg = load_config_file(path, cfg);
  }
  return cfg;
}

}  // namespace bsy
