#pragma once

// Command orchestration: cache management (zero table, line samples, sieve),
// the named check suites, and plot-ready data series.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "critline/blaschke.hpp"
#include "critline/line_cache.hpp"
#include "critline/prime_side.hpp"
#include "critline/quadrature.hpp"
#include "critline/report.hpp"
#include "critline/zeros.hpp"

namespace critline {

struct RunConfig {
  double max_height = 1000.0;    // zero scan and line cache ceiling
  double truncation_T = 1000.0;  // integral cutoff
  std::uint64_t sieve_limit = 1000000;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::optional<std::filesystem::path> synthetic_zeros_path;
  std::filesystem::path output_dir = "critline_out";

  /// Throws DomainError unless 15 < max_height, 0 < truncation_T <= max_height,
  /// tolerances positive and 1e3 <= sieve_limit <= 1e8.
  void validate() const;
};

/// FNV-1a hash (hex) of everything that determines the zero table and the
/// line cache; written into the first line of each cache file.
std::string zeros_config_hash(const RunConfig& cfg);

/// Optional overrides of the default evaluation points of the check suites.
struct CheckParams {
  std::vector<double> x;
  std::vector<ComplexValue> s;
  std::vector<ComplexValue> r;
  std::vector<double> t;
};

/// Lazily loads (or builds and saves) the caches for one configuration.
class Workspace {
 public:
  explicit Workspace(RunConfig cfg, bool verbose = true);

  const RunConfig& config() const noexcept { return cfg_; }
  const ZeroTable& zeros();
  const CriticalLineCache& cache();
  const MangoldtTable& sieve();
  const SyntheticZeroSet& synthetic();
  /// Quadrature settings from the configuration (osc_split off).
  QuadratureSpec quad() const;

 private:
  void log(const std::string& msg) const;

  RunConfig cfg_;
  bool verbose_;
  std::unique_ptr<ZeroTable> zeros_;
  std::unique_ptr<CriticalLineCache> cache_;
  std::unique_ptr<MangoldtTable> sieve_;
  std::unique_ptr<SyntheticZeroSet> synthetic_;
};

/// Names accepted by cmd_verify, in execution order.
const std::vector<std::string>& check_names();

/// Runs the named suites (all when `checks` is empty). Throws
/// std::invalid_argument for an unknown name.
VerificationReport run_checks(Workspace& ws, const std::vector<std::string>& checks,
                              const CheckParams& params = {});

/// `build`: scans zeros, samples the line, sieves; writes zeros.csv,
/// line_samples.csv, line_exclusions.csv and the sieve cache. Returns the
/// process exit status.
int cmd_build(const RunConfig& cfg);
/// `verify`: writes report.csv and report.json; exit 0 iff every entry passes.
int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& checks,
               const CheckParams& params);
/// `series`: writes series_<what>.csv with columns arg,value,err_est for
/// what in {fstar, f11, f21, n_decomp, theta} over [lo, hi] with the given step.
int cmd_series(const RunConfig& cfg, const std::string& what, double lo, double hi, double step);

/// Parses "2", "1.5+3i", "0.5-2i", "3i".
ComplexValue parse_complex(const std::string& text);

}  // namespace critline
