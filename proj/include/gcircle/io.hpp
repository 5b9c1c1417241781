// io.hpp
//
// CSV tables (comma separated, '\n' line endings, mandatory header) and the
// JSON run manifest written next to every CLI output.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcircle/correlate.hpp"
#include "gcircle/lattice.hpp"

namespace gcircle {

inline constexpr int kDefaultDigits = 17;
inline constexpr const char* kToolVersion = "1.0.0";

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const CsvTable& table);
// Throws ArgumentError on a missing header or ragged rows.
CsvTable read_csv(std::istream& is);

// %.{digits}g; 17 digits round-trip every double exactly.
std::string format_real(double v, int digits = kDefaultDigits);
double parse_real(const std::string& text);
std::uint64_t parse_natural(const std::string& text);

// Columns: N,h,raw,main,e_value (main is an exact "p/q").
CsvTable correlation_table(std::span<const CorrelationRecord> records, int digits = kDefaultDigits);
std::vector<CorrelationRecord> correlation_records(const CsvTable& table);

// Columns: x,value,ratio_quarter,ratio_huxley.
CsvTable pointwise_table(const PointwiseReport& report, int digits = kDefaultDigits);
std::vector<PointwiseRow> pointwise_rows(const CsvTable& table);

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::optional<std::uint64_t> seed;
  std::uint64_t sieve_limit = 0;
  std::string tool_version = kToolVersion;
  double wall_time = 0;

  // Flat JSON object; parameters appear as "parameters.<key>".
  std::string to_json() const;
  static RunManifest from_json(const std::string& text);
};

}  // namespace gcircle
