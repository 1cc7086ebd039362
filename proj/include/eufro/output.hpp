#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace eufro {

// Command result. nlohmann::json objects keep keys sorted, so dumps are stable.
struct OutputRecord {
  std::string schema_version = "1";
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<nlohmann::json> rows;
  nlohmann::json summary = nlohmann::json::object();
  // Column order for CSV and text output.
  std::vector<std::string> columns;

  nlohmann::json to_json() const;
  std::string to_json_string() const;
  // RFC 4180: header row, CRLF line ends, quoted fields where needed.
  std::string to_csv() const;
  std::string to_text() const;
};

std::string csv_escape(const std::string& field);
// Cell rendering shared by CSV and text: strings verbatim, numbers in shortest round-trip form.
std::string render_cell(const nlohmann::json& v);

}  // namespace eufro
