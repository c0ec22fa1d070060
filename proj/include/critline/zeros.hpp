#pragma once

// Critical-line zeros located as sign changes of Hardy's Z function, the
// counting function N(t) and the leading-term tail estimates used to
// annotate truncated integrals.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "critline/errors.hpp"

namespace critline {

struct ZeroBracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct ZeroTable {
  std::vector<double> ordinates;       // increasing, 0 < t_n <= height
  std::vector<ZeroBracket> brackets;   // Z(lo) Z(hi) < 0, lo <= t_n <= hi
  double height = 0.0;
  bool count_consistent = false;       // size == round(theta(T)/pi + 1)
  /// Intervals of a near-miss of the axis by Z (local minimum of |Z| without
  /// a sign change); only filled when the count is inconsistent.
  std::vector<std::pair<double, double>> gaps;
  double scan_step = 0.0;              // step that produced the table
};

inline constexpr double kDefaultScanStep = 0.05;
inline constexpr double kDefaultRefineTol = 1e-10;

/// Finds all sign changes of Z on (0, T] on a grid of the given step,
/// bisects each to a bracket of width <= refine_tol and certifies the count
/// against round(theta(T)/pi + 1). On a mismatch the step is halved up to
/// three times; the last table is returned with count_consistent = false and
/// the gap list filled. Requires T > 15 and 0 < step <= 0.1.
ZeroTable scan_zeros(double T, double step = kDefaultScanStep,
                     double refine_tol = kDefaultRefineTol);

/// Scan without the minimum-height precondition (used to extend or to probe
/// small heights such as T = 14); same algorithm as scan_zeros.
ZeroTable scan_zeros_unchecked(double T, double step, double refine_tol);

/// The expected count round(theta(T)/pi + 1).
int expected_zero_count(double T);

/// N(t): number of ordinates <= t, extended as an odd function to t < 0.
/// Throws OutOfRangeError for |t| > table.height.
int count_N(double t, const ZeroTable& table);

struct TailBounds {
  double sum_inv_imsq;   // (log T) / (pi T) ~ sum_{|Im rho| > T} |Im rho|^-2
  double count_density;  // theta(T) / pi ~ N(T)
};

/// Leading-term estimates for T >= 100; throws DomainError below.
TailBounds tail_bounds(double T);

/// CSV persistence: header `index,t,bracket_lo,bracket_hi`, preceded by a
/// `# config=<hash> height=<T> step=<step>` comment line.
void save_zeros_csv(const std::filesystem::path& path, const ZeroTable& table,
                    const std::string& config_hash);

/// Loads a table and re-certifies every bracket by evaluating Z at both
/// ends. Returns false (leaving `out` untouched) if the file is missing, the
/// hash differs, or a bracket fails certification.
bool load_zeros_csv(const std::filesystem::path& path, const std::string& config_hash,
                    ZeroTable& out);

}  // namespace critline
