#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace spindiscord {

/// Null cells print as "nan" in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

Cell cell(std::optional<double> v);

/// Shortest round-trip decimal representation.
std::string format_double(double x);

struct CsvOptions {
  /// Comment line written first unless empty.
  std::string preamble;
  bool complete = true;
};

/// Header row, data rows, then "# INCOMPLETE" when !complete.
void write_csv(const Table& t, std::ostream& os, const CsvOptions& opt = {});

nlohmann::ordered_json to_json_rows(const Table& t);

}  // namespace spindiscord
