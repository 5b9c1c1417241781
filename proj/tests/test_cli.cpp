#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gcircle/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("gcircle_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result run(const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const std::string cmd = std::string(GCIRCLE_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

}  // namespace

TEST_CASE("sieve checksums") {
  const auto r = run("sieve --limit 10");
  CHECK(r.code == 0);
  CHECK(r.out.find("sum_r,36") != std::string::npos);
  CHECK(r.out.find("sum_d,27") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("sieve --limit abc").code == 2);
  CHECK(run("error-term circle --x-max 100 --samples 0").code == 2);
  CHECK(run("correlate --N 1000 --H 5 --limit 100").code == 3);
  CHECK(run("laplace circle --T 1000 --terms 100 --limit 1000").code == 3);
  CHECK(run("sieve --limit 100 --out /nonexistent-dir/x.csv").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("correlation CSV parses back") {
  const auto path = scratch() / "corr.csv";
  REQUIRE(run("correlate --N 10 --H 3 --out " + path.string()).code == 0);
  std::ifstream in(path);
  const auto records = gcircle::correlation_records(gcircle::read_csv(in));
  REQUIRE(records.size() == 3);
  CHECK(records[0].raw == 96);
  CHECK(records[0].e_value == 16.0);
  const auto manifest = gcircle::RunManifest::from_json(slurp(path.string() + ".json"));
  CHECK(manifest.command == "correlate");
  CHECK(manifest.parameters.at("H") == "3");
}

TEST_CASE("error-term CSV parses back") {
  const auto r = run("error-term circle --x-max 1000 --samples 8");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  CHECK(gcircle::pointwise_rows(gcircle::read_csv(in)).size() == 8);
}

TEST_CASE("seeded output is reproducible") {
  const auto a = scratch() / "w1.csv";
  const auto b = scratch() / "w2.csv";
  const std::string args = "correlate --report weighted --N 20000 --block 16 --trials 5 --seed 3 --out ";
  REQUIRE(run(args + a.string()).code == 0);
  REQUIRE(run(args + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
}

TEST_CASE("other subcommands run") {
  CHECK(run("gauss 60").code == 0);
  CHECK(run("constants r_squared 1000").code == 0);
  CHECK(run("voronoi --x 10.5 --N 1000").code == 0);
  CHECK(run("laplace circle --T 16,32,64 --terms 100000").code == 0);
}
