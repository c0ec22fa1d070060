#pragma once

// Adaptive panel quadrature for the half-line integrals along the critical
// line and for the x-side Mellin integrals.
//
//  * Regular panels: 21-point Gauss-Kronrod with QUADPACK error scaling,
//    refined globally (worst panel first) by bisection.
//  * Panels with an integrable endpoint singularity (logarithmic or weaker):
//    tanh-sinh with level halving; such panels are bisected too when they
//    do not converge, the singular half keeping tanh-sinh.
//  * Semi-infinite tails: u = a / w maps [a, inf) onto (0, 1], integrated
//    with tanh-sinh (w = 0 treated as a singular endpoint).

#include <functional>
#include <vector>

#include "critline/errors.hpp"

namespace critline {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double truncation_T = 1000.0;
  int max_depth = 40;
  double sing_radius = 0.05;
  bool osc_split = false;
};

template <class T>
struct QuadResult {
  T value{};
  double err_est = 0.0;
};

using RealIntegrand = std::function<double(double)>;
using ComplexIntegrand = std::function<ComplexValue(double)>;

/// Breakpoint description for one finite integral.
struct PanelLayout {
  std::vector<double> singular;  // integrable endpoint singularities
  std::vector<double> breaks;    // plain breakpoints (jumps, kinks, period marks)
  double max_panel = 0.5;        // initial panels are at most this wide
};

/// Integral of f over [a, b]. Throws QuadratureError (with the best value)
/// if the tolerance max(abs_tol, rel_tol |I|) is not met within max_depth
/// bisections of the initial panels.
QuadResult<double> integrate(const RealIntegrand& f, double a, double b, const PanelLayout& layout,
                             double abs_tol, double rel_tol, int max_depth = 40);
QuadResult<ComplexValue> integrate(const ComplexIntegrand& f, double a, double b,
                                   const PanelLayout& layout, double abs_tol, double rel_tol,
                                   int max_depth = 40);

/// Integral of f over [a, inf) by the reciprocal map. f must be finite for
/// arbitrarily large arguments and decay at least like u^-(1+eps).
QuadResult<double> integrate_to_infinity(const RealIntegrand& f, double a, double abs_tol,
                                         double rel_tol);
QuadResult<ComplexValue> integrate_to_infinity(const ComplexIntegrand& f, double a,
                                               double abs_tol, double rel_tol);

/// Result of a critical-line integral truncated at spec.truncation_T.
template <class T>
struct HalflineResult {
  T value{};
  double err_est = 0.0;
  /// Integral over the last half period before T when oscillatory splitting
  /// was used (zero otherwise); |last_half_period| / 2 is the
  /// alternating-series estimate of the remainder beyond T.
  double last_half_period = 0.0;
};

/// Integral of f over (0, spec.truncation_T] for integrands with logarithmic
/// singularities at the listed ordinates. Breakpoints are placed at each
/// singularity, at singularity +- spec.sing_radius, at `jumps`, and, when
/// spec.osc_split and omega > 0, at every u = k pi / omega.
HalflineResult<double> integrate_halfline(const RealIntegrand& f, const QuadratureSpec& spec,
                                          const std::vector<double>& singularities,
                                          double omega = 0.0,
                                          const std::vector<double>& jumps = {});
HalflineResult<ComplexValue> integrate_halfline(const ComplexIntegrand& f,
                                                const QuadratureSpec& spec,
                                                const std::vector<double>& singularities,
                                                double omega = 0.0,
                                                const std::vector<double>& jumps = {});

}  // namespace critline
