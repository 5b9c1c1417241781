// gcircle: command-line front end.
//
//   gcircle <subcommand> [--limit N] [--out PATH] [--seed S] [--rel-tol X] ...
//
// Data goes to --out as CSV with a JSON manifest at PATH.json; without --out
// the CSV goes to stdout and summaries/manifest to stderr.
// Exit codes: 0 ok, 2 usage, 3 capacity, 1 internal failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcircle/gcircle.hpp"

namespace {

using namespace gcircle;

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInternal = 1;

struct GlobalOptions {
  std::uint64_t limit = 0;  // 0: size the sieve to the command
  std::string out;
  std::uint64_t seed = 1;
  double rel_tol = kDefaultRelTol;
  int digits = kDefaultDigits;
};

// Parses "a,b,c" or "lo..hi" (doubling from lo while <= hi).
std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const double lo = parse_real(text.substr(0, dots));
    const double hi = parse_real(text.substr(dots + 2));
    if (!(lo > 0) || hi < lo) throw ArgumentError("range \"" + text + "\" must satisfy 0 < lo <= hi");
    for (double v = lo; v <= hi; v *= 2) out.push_back(v);
    return out;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw ArgumentError("empty list");
  return out;
}

std::vector<std::uint64_t> parse_natural_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_natural(item));
  if (out.empty()) throw ArgumentError("empty list");
  return out;
}

class Run {
 public:
  Run(const GlobalOptions& opts, std::string command)
      : opts_(opts), start_(std::chrono::steady_clock::now()) {
    manifest_.command = std::move(command);
  }

  void param(const std::string& key, const std::string& value) { manifest_.parameters[key] = value; }
  void param(const std::string& key, double value) { param(key, format_real(value, opts_.digits)); }
  void param(const std::string& key, std::uint64_t value) { param(key, std::to_string(value)); }
  void use_seed() { manifest_.seed = opts_.seed; }

  // Builds tables of the global limit, or of `required` when none was given.
  ArithTables tables(std::uint64_t required) {
    std::uint64_t limit = opts_.limit == 0 ? required : opts_.limit;
    if (limit < required)
      throw CapacityError("sieve limit " + std::to_string(limit) + " is below the required " +
                              std::to_string(required),
                          required);
    manifest_.sieve_limit = limit;
    return ArithTables(limit);
  }

  // Summary lines go to stdout when data goes to a file, else to stderr.
  std::ostream& summary() { return opts_.out.empty() ? std::cerr : std::cout; }

  void emit(const CsvTable& table) {
    manifest_.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (opts_.out.empty()) {
      write_csv(std::cout, table);
      std::cerr << manifest_.to_json();
      return;
    }
    std::ofstream csv(opts_.out, std::ios::binary);
    if (!csv) throw ArgumentError("cannot write output file " + opts_.out);
    write_csv(csv, table);
    std::ofstream json(opts_.out + ".json", std::ios::binary);
    if (!json) throw ArgumentError("cannot write manifest " + opts_.out + ".json");
    json << manifest_.to_json();
    if (!csv || !json) throw ArgumentError("write failed for " + opts_.out);
  }

  std::string real(double v) const { return format_real(v, opts_.digits); }

 private:
  const GlobalOptions& opts_;
  std::chrono::steady_clock::time_point start_;
  RunManifest manifest_;
};

ErrorKind parse_error_kind(const std::string& kind) {
  if (kind == "circle") return ErrorKind::circle;
  if (kind == "divisor") return ErrorKind::divisor;
  throw ArgumentError("kind must be circle or divisor, got \"" + kind + "\"");
}

SeriesKind parse_series_kind(const std::string& kind) {
  if (kind == "r_squared") return SeriesKind::r_squared;
  if (kind == "d_squared") return SeriesKind::d_squared;
  throw ArgumentError("kind must be r_squared or d_squared, got \"" + kind + "\"");
}

void cmd_sieve(const GlobalOptions& opts, std::uint64_t limit) {
  if (limit == 0) throw ArgumentError("sieve: --limit must be >= 1");
  GlobalOptions local = opts;
  local.limit = limit;
  Run run(local, "sieve");
  run.param("limit", limit);
  const ArithTables t = run.tables(limit);
  std::uint64_t sum_r = 0, sum_d = 0, sum_sigma = 0, max_r = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    sum_r += t.r(n);
    sum_d += t.d(n);
    sum_sigma += t.sigma(n);
    max_r = std::max<std::uint64_t>(max_r, t.r(n));
  }
  CsvTable table{{"quantity", "value"}, {}};
  table.rows.push_back({"limit", std::to_string(limit)});
  table.rows.push_back({"sum_r", std::to_string(sum_r)});
  table.rows.push_back({"sum_d", std::to_string(sum_d)});
  table.rows.push_back({"sum_sigma", std::to_string(sum_sigma)});
  table.rows.push_back({"max_r", std::to_string(max_r)});
  table.rows.push_back({"bytes", std::to_string((limit + 1) * ArithTables::kBytesPerEntry)});
  run.emit(table);
}

void cmd_error_term(const GlobalOptions& opts, const std::string& kind_text, double x_max,
                    std::uint64_t samples) {
  const ErrorKind kind = parse_error_kind(kind_text);
  if (samples == 0) throw ArgumentError("error-term: --samples must be >= 1");
  if (!(x_max >= 1)) throw ArgumentError("error-term: --x-max must be >= 1");
  Run run(opts, "error-term");
  run.param("kind", kind_text);
  run.param("x_max", x_max);
  run.param("samples", samples);
  const ArithTables t = run.tables(static_cast<std::uint64_t>(std::ceil(x_max)));
  const StepProfile profile(t, kind);
  const PointwiseReport report = pointwise_report(profile, x_max, samples);
  run.summary() << "max_abs," << run.real(report.max_abs) << "\nargmax," << run.real(report.argmax)
                << "\n";
  run.emit(pointwise_table(report, opts.digits));
}

void cmd_correlate(const GlobalOptions& opts, const std::string& N_text, std::uint64_t H,
                   const std::string& report_kind, std::uint64_t block, std::uint64_t trials) {
  const auto N_list = parse_natural_list(N_text);
  Run run(opts, "correlate");
  run.param("N", N_text);
  run.param("report", report_kind);
  if (report_kind == "weighted") {
    if (block == 0) throw ArgumentError("correlate: --block M >= 1 is required for the weighted report");
    if (N_list.size() != 1) throw ArgumentError("correlate: weighted report needs a single N");
    H = 2 * block;
    run.param("block", block);
    run.param("trials", trials);
    run.use_seed();
  }
  if (H == 0) throw ArgumentError("correlate: --H must be >= 1");
  run.param("H", H);
  const std::uint64_t N_top = *std::max_element(N_list.begin(), N_list.end());
  const ArithTables t = run.tables(N_top + H);
  const auto records = corr_grid(t, N_list, H);

  if (report_kind == "records") {
    run.emit(correlation_table(records, opts.digits));
  } else if (report_kind == "pointwise") {
    const auto rep = pointwise_bound_report(records);
    CsvTable table{{"N", "h", "e_value", "ratio"}, {}};
    for (const auto& r : rep.rows)
      table.rows.push_back({std::to_string(r.N), std::to_string(r.h), run.real(r.e_value), run.real(r.ratio)});
    run.summary() << "max_ratio," << run.real(rep.max_ratio) << "\nargmax_N," << rep.argmax_N
                  << "\nargmax_h," << rep.argmax_h << "\n";
    run.emit(table);
  } else if (report_kind == "weighted") {
    std::vector<CorrelationRecord> in_block(records.begin() + static_cast<std::ptrdiff_t>(block), records.end());
    const auto rows = weighted_bound_report(in_block, trials, opts.seed);
    CsvTable table{{"trial", "weighted_abs", "norm", "envelope", "ratio"}, {}};
    for (const auto& r : rows)
      table.rows.push_back({std::to_string(r.trial), run.real(r.weighted_abs), run.real(r.norm),
                            run.real(r.envelope), run.real(r.ratio)});
    run.emit(table);
  } else {
    throw ArgumentError("correlate: --report must be records, pointwise or weighted");
  }
}

void cmd_laplace(const GlobalOptions& opts, const std::string& kind_text, const std::string& T_text,
                 std::uint64_t terms) {
  const ErrorKind kind = parse_error_kind(kind_text);
  const auto T_list = parse_real_list(T_text);
  if (!std::is_sorted(T_list.begin(), T_list.end())) throw ArgumentError("laplace: T list must be ascending");
  if (!(opts.rel_tol > 0)) throw ArgumentError("laplace: --rel-tol must be > 0");
  if (terms == 0) throw ArgumentError("laplace: --terms must be >= 1");
  Run run(opts, "laplace");
  run.param("kind", kind_text);
  run.param("T", T_text);
  run.param("rel_tol", opts.rel_tol);
  run.param("terms", terms);
  // The integrals total at least ~T^{3/2}/4 for T >= 1; a 10% margin on
  // the truncation point keeps the a-priori size above what is needed.
  const double T_top = T_list.back();
  const std::uint64_t x_need =
      truncation_point(T_top, opts.rel_tol, 0.25 * std::pow(T_top, 1.5)) * 11 / 10 + 2;
  const ArithTables t = run.tables(std::max(x_need, terms));
  const StepProfile profile(t, kind);

  if (kind == ErrorKind::circle) {
    const auto c_r = series_constant(t, SeriesKind::r_squared, terms);
    const ResidualScan scan = residual_scan_p(profile, c_r, T_list, opts.rel_tol);
    CsvTable table{{"T", "integral", "truncation_bound", "main", "residual", "residual_over_T23"}, {}};
    for (const auto& r : scan.rows)
      table.rows.push_back({run.real(r.T), run.real(r.integral), run.real(r.truncation_bound),
                            run.real(r.main_term), run.real(r.residual), run.real(r.scaled)});
    run.summary() << "slope," << run.real(scan.slope) << "\n";
    run.emit(table);
  } else {
    const auto c_d = series_constant(t, SeriesKind::d_squared, terms);
    CsvTable table{{"T", "integral", "truncation_bound", "main", "y_over_T"}, {}};
    std::vector<double> Ts, ys;
    for (double T : T_list) {
      const LaplaceIntegral li = laplace_d2(profile, T, opts.rel_tol);
      const double main = laplace_main_d(c_d, T);
      Ts.push_back(T);
      ys.push_back((li.integral - main) / T);
      table.rows.push_back({run.real(T), run.real(li.integral), run.real(li.truncation_bound), run.real(main),
                            run.real(ys.back())});
    }
    if (Ts.size() >= 3) {
      const auto c = fit_log_quadratic(Ts, ys);
      run.summary() << "A1," << run.real(c(0)) << "\nA2," << run.real(c(1)) << "\nA3," << run.real(c(2))
                    << "\n";
    }
    run.emit(table);
  }
}

void cmd_constants(const GlobalOptions& opts, const std::string& kind_text, std::uint64_t terms) {
  const SeriesKind kind = parse_series_kind(kind_text);
  if (terms == 0) throw ArgumentError("constants: terms must be >= 1");
  Run run(opts, "constants");
  run.param("kind", kind_text);
  run.param("terms", terms);
  const ArithTables t = run.tables(terms);
  const SeriesConstant c = series_constant(t, kind, terms);
  CsvTable table{{"kind", "terms", "value", "tail_bound", "tail_estimate", "corrected"}, {}};
  table.rows.push_back({to_string(kind), std::to_string(c.terms_used), run.real(c.value), run.real(c.tail_bound),
                        run.real(c.tail_estimate), run.real(c.corrected())});
  run.emit(table);
}

void cmd_gauss(const GlobalOptions& opts, std::uint64_t k_max) {
  if (k_max == 0) throw ArgumentError("gauss: k_max must be >= 1");
  Run run(opts, "gauss");
  run.param("k_max", k_max);
  CsvTable table{{"k", "k_mod_4", "expected", "max_deviation", "pass"}, {}};
  std::uint64_t pass[4] = {}, total[4] = {};
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const auto cls = k % 4;
    double worst = 0;
    const double expected = static_cast<double>(chi(k)) * static_cast<double>(k);
    for (std::uint64_t h = 1; h <= k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      const auto g = gauss_sum_sq(k, static_cast<std::int64_t>(h));
      worst = std::max(worst, std::abs(g - std::complex<double>(expected, 0.0)));
    }
    const bool checked = cls == 1 || cls == 2;
    const bool ok = !checked || worst <= 1e-6 * static_cast<double>(k);
    if (checked) {
      ++total[cls];
      pass[cls] += ok;
    }
    table.rows.push_back({std::to_string(k), std::to_string(cls), checked ? run.real(expected) : "",
                          checked ? run.real(worst) : "", checked ? (ok ? "1" : "0") : ""});
  }
  run.summary() << "k=2 mod 4 (expect 0)," << pass[2] << "/" << total[2] << " pass\n"
                << "k=1 mod 4 (expect chi(k)k)," << pass[1] << "/" << total[1] << " pass\n";
  run.emit(table);
}

void cmd_voronoi(const GlobalOptions& opts, double x, std::uint64_t N) {
  if (!(x >= 2)) throw ArgumentError("voronoi: --x must be >= 2");
  if (N < 2) throw ArgumentError("voronoi: --N must be >= 2");
  Run run(opts, "voronoi");
  run.param("x", x);
  run.param("N", N);
  const ArithTables t = run.tables(std::max<std::uint64_t>(N, static_cast<std::uint64_t>(std::ceil(x))));
  const StepProfile profile(t, ErrorKind::circle);
  const double p = p_of_x(profile, x);
  const double hardy = hardy_partial(t, x, N);
  const double trunc = truncated_p(t, x, N);
  CsvTable table{{"quantity", "value", "difference_from_p"}, {}};
  table.rows.push_back({"p_of_x", run.real(p), run.real(0.0)});
  table.rows.push_back({"hardy_partial", run.real(hardy), run.real(hardy - p)});
  table.rows.push_back({"truncated_p", run.real(trunc), run.real(trunc - p)});
  run.emit(table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss circle problem workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions opts;
  app.add_option("--limit", opts.limit, "Sieve limit (default: sized to the command)");
  app.add_option("--out", opts.out, "Output CSV path; the manifest goes to PATH.json");
  app.add_option("--seed", opts.seed, "Seed for randomized reports");
  app.add_option("--rel-tol", opts.rel_tol, "Relative truncation tolerance for Laplace integrals");
  app.add_option("--digits", opts.digits, "Significant digits for reals")->check(CLI::Range(1, 17));

  std::function<void()> action;

  auto* sieve = app.add_subcommand("sieve", "Build r, d, sigma tables and print checksums");
  sieve->callback([&] { action = [&] { cmd_sieve(opts, opts.limit); }; });

  std::string et_kind = "circle";
  double et_xmax = 100;
  std::uint64_t et_samples = 64;
  auto* et = app.add_subcommand("error-term", "Scan |P(x)| or |Delta(x)| and its growth ratios");
  et->add_option("kind", et_kind, "circle or divisor");
  et->add_option("--x-max", et_xmax);
  et->add_option("--samples", et_samples);
  et->callback([&] { action = [&] { cmd_error_term(opts, et_kind, et_xmax, et_samples); }; });

  std::string co_N = "100000", co_report = "records";
  std::uint64_t co_H = 316, co_block = 0, co_trials = 16;
  auto* co = app.add_subcommand("correlate", "Correlation sums and E(N,h)");
  co->add_option("--N", co_N, "Comma-separated list of N");
  co->add_option("--H", co_H, "Largest shift");
  co->add_option("--report", co_report, "records | pointwise | weighted");
  co->add_option("--block", co_block, "Dyadic block M (weighted report: M < h <= 2M)");
  co->add_option("--trials", co_trials, "Random coefficient draws for the weighted report");
  co->callback([&] { action = [&] { cmd_correlate(opts, co_N, co_H, co_report, co_block, co_trials); }; });

  std::string la_kind = "circle", la_T = "64..8192";
  std::uint64_t la_terms = 10'000'000;
  auto* la = app.add_subcommand("laplace", "Laplace transform of P^2 or Delta^2 against its main term");
  la->add_option("kind", la_kind, "circle or divisor");
  la->add_option("--T", la_T, "List a,b,c or doubling range lo..hi");
  la->add_option("--terms", la_terms, "Terms for the Dirichlet-series constant");
  la->callback([&] { action = [&] { cmd_laplace(opts, la_kind, la_T, la_terms); }; });

  std::string cs_kind = "r_squared";
  std::uint64_t cs_terms = 1'000'000;
  auto* cs = app.add_subcommand("constants", "sum f(n)^2 n^{-3/2} with tail bound");
  cs->add_option("kind", cs_kind, "r_squared or d_squared");
  cs->add_option("terms", cs_terms);
  cs->callback([&] { action = [&] { cmd_constants(opts, cs_kind, cs_terms); }; });

  std::uint64_t ga_kmax = 500;
  auto* ga = app.add_subcommand("gauss", "Check squared Gauss sums for k = 1, 2 mod 4");
  ga->add_option("k_max", ga_kmax);
  ga->callback([&] { action = [&] { cmd_gauss(opts, ga_kmax); }; });

  double vo_x = 10.5;
  std::uint64_t vo_N = 1000;
  auto* vo = app.add_subcommand("voronoi", "Compare P(x) with Hardy's series and the truncated formula");
  vo->add_option("--x", vo_x);
  vo->add_option("--N", vo_N);
  vo->callback([&] { action = [&] { cmd_voronoi(opts, vo_x, vo_N); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    action();
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << " (required limit: " << e.required() << ")\n";
    return kExitCapacity;
  } catch (const ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
