#pragma once

// Tabulated log|zeta(1/2+iu)| on a uniform grid, with excluded intervals
// around the zero ordinates where the function has logarithmic singularities.
//
// Between grid points the value is reconstructed by 6-point Lagrange
// interpolation of the deflated function
//     d(u) = log|zeta(1/2+iu)| - sum_{|t_k - u| <~ 1} log|u - t_k|,
// which is smooth, and the removed logarithms are added back exactly. Inside
// an excluded interval the deflated function is represented by a Chebyshev
// interpolant built from direct zeta evaluations, which gives the quadrature
// engine a sampler that is exact in its singular part.

#include <filesystem>
#include <string>
#include <vector>

#include "critline/errors.hpp"
#include "critline/zeros.hpp"

namespace critline {

struct Exclusion {
  double lo = 0.0;
  double hi = 0.0;
  double zero = 0.0;
};

inline constexpr double kDefaultGridSpacing = 0.01;
inline constexpr double kDefaultExclusionRadius = 0.05;

class CriticalLineCache {
 public:
  CriticalLineCache() = default;

  /// Samples log|zeta(1/2+iu)| on [0, height] (height <= zeros.height).
  /// Exclusion half-widths are min(radius, 0.4 * distance to the nearest
  /// other zero) so that each interval holds exactly one ordinate.
  static CriticalLineCache build(const ZeroTable& zeros, double height,
                                 double spacing = kDefaultGridSpacing,
                                 double radius = kDefaultExclusionRadius);

  double height() const noexcept { return height_; }
  double spacing() const noexcept { return spacing_; }
  /// Estimated worst absolute interpolation error (from midpoint spot checks
  /// against direct evaluation).
  double build_tol() const noexcept { return build_tol_; }

  const std::vector<double>& grid_u() const noexcept { return u_; }
  const std::vector<double>& grid_logabs() const noexcept { return v_; }
  const std::vector<Exclusion>& exclusions() const noexcept { return excl_; }

  /// Interpolated value for |u| <= height outside every excluded interval.
  /// Throws SingularityError inside one and OutOfRangeError beyond height.
  double interpolate(double u) const;

  /// Quadrature sampler defined for every |u| <= height except the zero
  /// ordinates themselves: interpolation outside the exclusions, exact
  /// logarithm plus Chebyshev regular part inside.
  double sample(double u) const;

  /// Exclusion containing |u|, or nullptr.
  const Exclusion* exclusion_at(double u) const;

  /// Zero ordinates covered by the cache (one per exclusion).
  std::vector<double> zero_ordinates() const;

  /// Writes line_samples.csv and line_exclusions.csv into dir.
  void save(const std::filesystem::path& dir, const std::string& config_hash) const;

  /// Loads the two CSV files if their config hash matches; rebuilds the
  /// Chebyshev parts from direct evaluations and re-estimates build_tol.
  static bool load(const std::filesystem::path& dir, const std::string& config_hash,
                   CriticalLineCache& out);

 private:
  struct ChebPart {
    std::vector<double> values;  // deflated function at Chebyshev nodes
    std::vector<double> window;  // zeros deflated in this interval
  };

  double deflation(double u, const std::vector<double>& window) const;
  std::vector<double> window_zeros(double lo, double hi) const;
  double cheb_eval(std::size_t k, double u) const;
  void finish_setup();

  double height_ = 0.0;
  double spacing_ = kDefaultGridSpacing;
  double radius_ = kDefaultExclusionRadius;
  double build_tol_ = 0.0;
  std::vector<double> u_;
  std::vector<double> v_;
  std::vector<Exclusion> excl_;
  std::vector<double> zeros_;  // sorted ordinates used for deflation
  std::vector<ChebPart> cheb_;
};

/// log|zeta(1/2+iu)| with absolute error <= cache_tol. Uses the cache when
/// its build_tol meets cache_tol and direct evaluation otherwise. Throws
/// SingularityError inside an excluded interval.
double log_abs_zeta_half(double u, double cache_tol, const CriticalLineCache& cache);

}  // namespace critline
