#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace bsy::cli {

/// Serializes `doc` with every floating-point number at 17 significant digits
/// (nlohmann's own dump prints the shortest round-trip form). Non-finite
/// numbers become null.
std::string dump17(const nlohmann::ordered_json& doc);

/// A flat table written as CSV or as a JSON array of objects.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<nlohmann::ordered_json> row) { rows_.push_back(std::move(row)); }

  void write_csv(std::ostream& out) const;
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<nlohmann::ordered_json>> rows_;
};

}  // namespace bsy::cli
