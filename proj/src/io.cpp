#include "gcircle/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "gcircle/error.hpp"

namespace gcircle {

void write_csv(std::ostream& os, const CsvTable& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  if (!std::getline(is, line) || line.empty()) throw ArgumentError("read_csv: missing header row");
  table.header = split(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != table.header.size())
      throw ArgumentError("read_csv: row has " + std::to_string(cells.size()) + " cells, header has " +
                          std::to_string(table.header.size()));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

std::string format_real(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double parse_real(const std::string& text) {
  // strtod rather than stod: subnormal values are valid input, not a range error.
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  const auto used = static_cast<std::size_t>(end - text.c_str());
  if (text.empty() || std::isspace(static_cast<unsigned char>(text[0])) || used != text.size()) throw ArgumentError("parse_real: malformed \"" + text + "\"");
  return v;
}

std::uint64_t parse_natural(const std::string& text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ArgumentError("parse_natural: malformed \"" + text + "\"");
  return v;
}

namespace {

void expect_header(const CsvTable& table, const std::vector<std::string>& header) {
  if (table.header != header) throw ArgumentError("unexpected CSV header");
}

}  // namespace

CsvTable correlation_table(std::span<const CorrelationRecord> records, int digits) {
  CsvTable t{{"N", "h", "raw", "main", "e_value"}, {}};
  for (const auto& r : records)
    t.rows.push_back({std::to_string(r.N), std::to_string(r.h), std::to_string(r.raw), r.main.to_string(),
                      format_real(r.e_value, digits)});
  return t;
}

std::vector<CorrelationRecord> correlation_records(const CsvTable& table) {
  expect_header(table, {"N", "h", "raw", "main", "e_value"});
  std::vector<CorrelationRecord> out;
  for (const auto& row : table.rows)
    out.push_back({parse_natural(row[0]), parse_natural(row[1]), parse_natural(row[2]),
                   Rational::parse(row[3]), parse_real(row[4])});
  return out;
}

CsvTable pointwise_table(const PointwiseReport& report, int digits) {
  CsvTable t{{"x", "value", "ratio_quarter", "ratio_huxley"}, {}};
  for (const auto& r : report.rows)
    t.rows.push_back({format_real(r.x, digits), format_real(r.value, digits),
                      format_real(r.ratio_quarter, digits), format_real(r.ratio_huxley, digits)});
  return t;
}

std::vector<PointwiseRow> pointwise_rows(const CsvTable& table) {
  expect_header(table, {"x", "value", "ratio_quarter", "ratio_huxley"});
  std::vector<PointwiseRow> out;
  for (const auto& row : table.rows)
    out.push_back({parse_real(row[0]), parse_real(row[1]), parse_real(row[2]), parse_real(row[3])});
  return out;
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  for (const auto& [key, value] : parameters) j["parameters." + key] = value;
  if (seed) j["seed"] = *seed;
  j["sieve_limit"] = sieve_limit;
  j["tool_version"] = tool_version;
  j["wall_time"] = wall_time;
  return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  for (const auto& [key, value] : j.items()) {
    constexpr std::string_view prefix = "parameters.";
    if (key.starts_with(prefix)) m.parameters[key.substr(prefix.size())] = value.get<std::string>();
  }
  if (j.contains("seed")) m.seed = j.at("seed").get<std::uint64_t>();
  m.sieve_limit = j.at("sieve_limit").get<std::uint64_t>();
  m.tool_version = j.at("tool_version").get<std::string>();
  m.wall_time = j.at("wall_time").get<double>();
  return m;
}

}  // namespace gcircle
