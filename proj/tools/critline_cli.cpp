// critline: build caches, run the verification suites, and emit data series.
//
//   critline build  [--max-height H] [--sieve-limit X] [--out DIR]
//   critline verify [--checks thm22,thm24,...] [--x 10] [--s 2] [--r 0] [--t 20]
//   critline series fstar --range 2:100 --step 1

#include <CLI11.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "critline/cli.hpp"

namespace {

void add_common(CLI::App* cmd, critline::RunConfig& cfg, std::string& synthetic, std::string& out) {
  cmd->add_option("--max-height", cfg.max_height, "Zero scan and line cache ceiling")->capture_default_str();
  cmd->add_option("--truncation-T", cfg.truncation_T, "Critical-line integral cutoff")->capture_default_str();
  cmd->add_option("--sieve-limit", cfg.sieve_limit, "Prime sieve limit X")->capture_default_str();
  cmd->add_option("--abs-tol", cfg.abs_tol, "Quadrature absolute tolerance")->capture_default_str();
  cmd->add_option("--rel-tol", cfg.rel_tol, "Quadrature relative tolerance")->capture_default_str();
  cmd->add_option("--synthetic-zeros", synthetic, "CSV of off-line zeros (sigma,tau)");
  cmd->add_option("--out", out, "Output and cache directory")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical-line integral identities for the Riemann zeta function"};
  app.require_subcommand(1);

  critline::RunConfig cfg;
  std::string synthetic;
  std::string out = cfg.output_dir.string();

  auto* build = app.add_subcommand("build", "Scan zeros, sample log|zeta| on the line, sieve primes");
  add_common(build, cfg, synthetic, out);

  auto* verify = app.add_subcommand("verify", "Run identity checks and write report.csv/report.json");
  add_common(verify, cfg, synthetic, out);
  std::vector<std::string> checks;
  std::vector<double> xs, ts;
  std::vector<std::string> ss, rs;
  verify->add_option("--checks", checks, "Suites to run (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(critline::check_names()));
  verify->add_option("--x", xs, "Evaluation points x")->delimiter(',');
  verify->add_option("--s", ss, "Evaluation points s (e.g. 1.5+3i)")->delimiter(',');
  verify->add_option("--r", rs, "Shifts r")->delimiter(',');
  verify->add_option("--t", ts, "Heights t")->delimiter(',');

  auto* series = app.add_subcommand("series", "Write series_<what>.csv (arg,value,err_est)");
  add_common(series, cfg, synthetic, out);
  std::string what;
  std::string range;
  double step = 1.0;
  series->add_option("what", what, "fstar | f11 | f21 | n_decomp | theta")
      ->required()
      ->check(CLI::IsMember({"fstar", "f11", "f21", "n_decomp", "theta"}));
  series->add_option("--range", range, "lo:hi")->required();
  series->add_option("--step", step, "Grid step")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; every other parse failure is a usage error.
    const int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }

  cfg.output_dir = out;
  if (!synthetic.empty()) cfg.synthetic_zeros_path = synthetic;

  try {
    if (*build) return critline::cmd_build(cfg);
    if (*verify) {
      critline::CheckParams params;
      params.x = xs;
      params.t = ts;
      for (const auto& s : ss) params.s.push_back(critline::parse_complex(s));
      for (const auto& r : rs) params.r.push_back(critline::parse_complex(r));
      return critline::cmd_verify(cfg, checks, params);
    }
    const auto colon = range.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--range must be lo:hi");
    const double lo = std::stod(range.substr(0, colon));
    const double hi = std::stod(range.substr(colon + 1));
    return critline::cmd_series(cfg, what, lo, hi, step);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  }
}
