#include "spindiscord/table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace spindiscord {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::logic_error("table row width does not match the header");
  rows.push_back(std::move(row));
}

Cell cell(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return std::monostate{};
  return *v;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

struct CsvCell {
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(double d) const { return format_double(d); }
  std::string operator()(std::int64_t i) const { return std::to_string(i); }
  std::string operator()(const std::string& s) const { return s; }
};

struct JsonCell {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(double d) const {
    return std::isfinite(d) ? nlohmann::ordered_json(d) : nlohmann::ordered_json(nullptr);
  }
  nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
};

}  // namespace

void write_csv(const Table& t, std::ostream& os, const CsvOptions& opt) {
  if (!opt.preamble.empty()) os << "# " << opt.preamble << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
    os << '\n';
  }
  if (!opt.complete) os << "# INCOMPLETE\n";
  os.flush();
}

nlohmann::ordered_json to_json_rows(const Table& t) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(std::visit(JsonCell{}, c));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace spindiscord
