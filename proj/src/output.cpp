#include "eufro/output.hpp"

#include <algorithm>
#include <sstream>

namespace eufro {

nlohmann::json OutputRecord::to_json() const {
  nlohmann::json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["params"] = params;
  j["rows"] = rows;
  if (!summary.empty()) j["summary"] = summary;
  return j;
}

std::string OutputRecord::to_json_string() const { return to_json().dump(2) + "\n"; }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string s = "\"";
  for (char c : field) {
    if (c == '"') s += '"';
    s += c;
  }
  return s + "\"";
}

std::string render_cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string OutputRecord::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_escape(columns[i]);
  os << "\r\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      os << (i ? "," : "");
      auto it = row.find(columns[i]);
      if (it != row.end()) os << csv_escape(render_cell(*it));
    }
    os << "\r\n";
  }
  return os.str();
}

std::string OutputRecord::to_text() const {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(columns);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& c : columns) {
      auto it = row.find(c);
      line.push_back(it == row.end() ? "" : render_cell(*it));
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(columns.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream os;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += "  ";
      text += line[i];
      if (i + 1 < line.size()) text += std::string(width[i] - line[i].size(), ' ');
    }
    os << text << "\n";
  }
  for (const auto& [key, value] : summary.items()) os << key << ": " << render_cell(value) << "\n";
  return os.str();
}

}  // namespace eufro
