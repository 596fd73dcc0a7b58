#pragma once

// Result records emitted by the command-line tool. Every number is stored as a
// decimal string written with an explicit significant-digit count, so JSON
// consumers never re-round binary floats.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace mea {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchemaId = "mea.output_record/1";

// %.{digits}g, with inf/nan spelled out.
inline std::string format_real(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

struct OutputRecord {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::map<std::string, std::string> results;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  int precision = 17;  // significant digits used for reals
  std::string seed;    // empty when the command is deterministic without one
  std::string version = kVersion;

  std::string real(double value) const { return format_real(value, precision); }

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline nlohmann::ordered_json to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaId;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["results"] = r.results;
  j["table"] = {{"columns", r.columns}, {"rows", r.rows}};
  j["precision"] = r.precision;
  j["provenance"] = {{"seed", r.seed.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.seed)},
                     {"version", r.version}};
  return j;
}

inline OutputRecord from_json(const nlohmann::ordered_json& j) {
  if (j.value("schema", "") != kSchemaId) throw std::invalid_argument("OutputRecord: unknown schema");
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  r.results = j.at("results").get<std::map<std::string, std::string>>();
  r.columns = j.at("table").at("columns").get<std::vector<std::string>>();
  r.rows = j.at("table").at("rows").get<std::vector<std::vector<std::string>>>();
  r.precision = j.at("precision").get<int>();
  const auto& seed = j.at("provenance").at("seed");
  r.seed = seed.is_null() ? std::string() : seed.get<std::string>();
  r.version = j.at("provenance").at("version").get<std::string>();
  return r;
}

// Header row then data; records without a table print key,value pairs.
inline void write_csv(std::ostream& out, const OutputRecord& r) {
  if (!r.columns.empty()) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
    out << '\n';
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
    return;
  }
  out << "key,value\n";
  for (const auto& [k, v] : r.results) out << k << ',' << v << '\n';
}

inline void write_table(std::ostream& out, const OutputRecord& r) {
  std::size_t key_width = 0;
  for (const auto& [k, v] : r.results) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : r.results) out << k << std::string(key_width - k.size() + 2, ' ') << v << '\n';
  if (r.columns.empty()) return;
  std::vector<std::size_t> width(r.columns.size());
  for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      out << (i ? "  " : "") << cells[i] << std::string(width[i] - cells[i].size(), ' ');
    out << '\n';
  };
  line(r.columns);
  for (const auto& row : r.rows) line(row);
}

}  // namespace mea
