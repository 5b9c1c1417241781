#include <doctest.h>

#include <cstring>
#include <random>
#include <sstream>

#include "gcircle/error.hpp"
#include "gcircle/io.hpp"

using namespace gcircle;

TEST_CASE("reals round-trip at 17 digits") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10'000; ++i) {
    double v;
    do {
      const std::uint64_t bits = rng();
      std::memcpy(&v, &bits, sizeof v);
    } while (!std::isfinite(v));
    REQUIRE(parse_real(format_real(v)) == v);
  }
  CHECK(format_real(0.1, 3) == "0.1");
  CHECK_THROWS_AS(parse_real("1.5x"), ArgumentError);
  CHECK_THROWS_AS(parse_real(""), ArgumentError);
  CHECK(parse_natural("18446744073709551615") == UINT64_MAX);
  CHECK_THROWS_AS(parse_natural("-3"), ArgumentError);
  CHECK_THROWS_AS(parse_natural("12 "), ArgumentError);
}

TEST_CASE("csv reader and writer") {
  CsvTable t{{"a", "b", "c"}, {{"1", "2", "3"}, {"x", "", "z"}}};
  std::stringstream ss;
  write_csv(ss, t);
  CHECK(ss.str() == "a,b,c\n1,2,3\nx,,z\n");
  const auto back = read_csv(ss);
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);

  std::istringstream ragged("a,b\n1,2\n3\n");
  CHECK_THROWS_AS(read_csv(ragged), ArgumentError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), ArgumentError);
}

TEST_CASE("correlation records round-trip exactly") {
  std::mt19937_64 rng(5);
  std::vector<CorrelationRecord> records;
  for (int i = 0; i < 500; ++i) {
    CorrelationRecord r;
    r.N = rng() % 1'000'000'000;
    r.h = 1 + rng() % 100'000;
    r.raw = rng() % 100'000'000'000ull;
    r.main = Rational(static_cast<std::int64_t>(rng() % 1'000'000'000'000ull), 1 + rng() % 9999);
    r.e_value = (Rational(static_cast<std::int64_t>(r.raw)) - r.main).to_double();
    records.push_back(r);
  }
  std::stringstream ss;
  write_csv(ss, correlation_table(records));
  const auto back = correlation_records(read_csv(ss));
  CHECK(back == records);

  CsvTable wrong{{"N", "h"}, {}};
  CHECK_THROWS_AS(correlation_records(wrong), ArgumentError);
}

TEST_CASE("pointwise rows round-trip exactly") {
  PointwiseReport report;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int i = 0; i < 200; ++i) report.rows.push_back({1 + i * 3.7, u(rng), u(rng), u(rng)});
  std::stringstream ss;
  write_csv(ss, pointwise_table(report));
  const auto back = pointwise_rows(read_csv(ss));
  REQUIRE(back.size() == report.rows.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].x == report.rows[i].x);
    CHECK(back[i].value == report.rows[i].value);
    CHECK(back[i].ratio_quarter == report.rows[i].ratio_quarter);
    CHECK(back[i].ratio_huxley == report.rows[i].ratio_huxley);
  }
}

TEST_CASE("run manifest round-trip") {
  RunManifest m;
  m.command = "correlate";
  m.parameters = {{"N", "10000,100000"}, {"H", "316"}};
  m.seed = 42;
  m.sieve_limit = 1'000'317;
  m.wall_time = 1.25;
  const auto back = RunManifest::from_json(m.to_json());
  CHECK(back.command == m.command);
  CHECK(back.parameters == m.parameters);
  CHECK(back.seed == m.seed);
  CHECK(back.sieve_limit == m.sieve_limit);
  CHECK(back.tool_version == kToolVersion);
  CHECK(back.wall_time == m.wall_time);
  CHECK(m.to_json().find("\"parameters.H\"") != std::string::npos);

  RunManifest unseeded;
  unseeded.command = "sieve";
  CHECK_FALSE(RunManifest::from_json(unseeded.to_json()).seed.has_value());
}
