#ifndef ROMPOLY_REPORT_HPP
#define ROMPOLY_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace rompoly {

using Json = nlohmann::ordered_json;

// One emitted table: kind + meta + column headers + cell rows. Cells are
// JSON values so exact quantities stay strings ("3/2") while floats stay
// doubles; the CSV rendering and the JSON payload share the same cells.
struct OutputRecord {
  std::string kind; // polyTable | gram | spectrum | grid | checkReport
  Json meta = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  std::string to_json() const;
  std::string to_csv() const;
};

std::string csv_escape(const std::string& field);

} // namespace rompoly

#endif
