#include "rompoly/report.hpp"

#include <sstream>

namespace rompoly {

std::string csv_escape(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string OutputRecord::to_json() const {
  Json doc = Json::object();
  doc["kind"] = kind;
  doc["meta"] = meta;
  doc["columns"] = columns;
  Json jrows = Json::array();
  for (const auto& row : rows) {
    Json jr = Json::array();
    for (const auto& cell : row) jr.push_back(cell);
    jrows.push_back(std::move(jr));
  }
  doc["rows"] = std::move(jrows);
  return doc.dump(2) + "\n";
}

std::string OutputRecord::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(columns[i]);
  }
  os << "\r\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      const auto& cell = row[i];
      if (cell.is_string()) os << csv_escape(cell.get<std::string>());
      else os << cell.dump();
    }
    os << "\r\n";
  }
  return os.str();
}

} // namespace rompoly
