#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace bsy::cli {

namespace {

std::string number17(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const nlohmann::ordered_json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ", ";
        first = false;
        out += nlohmann::json(key).dump();
        out += ": ";
        emit(value, out);
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ", ";
        emit(j[i], out);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::number_float:
      out += number17(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::string csv_cell(const nlohmann::ordered_json& j) {
  if (j.is_number_float()) return number17(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace

std::string dump17(const nlohmann::ordered_json& doc) {
  std::string out;
  emit(doc, out);
  return out;
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

nlohmann::ordered_json Table::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < columns_.size() && i < row.size(); ++i) obj[columns_[i]] = row[i];
    arr.push_back(obj);
  }
  return arr;
}

}  // namespace bsy::cli
