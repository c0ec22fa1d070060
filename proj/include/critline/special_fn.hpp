#pragma once

// Scalar special functions used throughout the critical-line formulas.
//
// Branch convention: log, Ei and E1 use the principal branch on the plane
// slit along (-inf, 0]. Ei0(z) = sum_{k>=1} z^k / (k k!) is entire.

#include "critline/errors.hpp"

namespace critline {

/// Euler's constant gamma.
inline constexpr double kEulerGamma = 0.57721566490153286060651209;

constexpr double euler_gamma() { return kEulerGamma; }

/// Analytic continuation of log Gamma(s) (the branch that is continuous in
/// s off the negative real axis, agreeing with the real log on s > 0).
/// Throws DomainError at the poles s = 0, -1, -2, ...
ComplexValue log_gamma(ComplexValue s);

/// Entire part of the exponential integral, Ei0(z) = Ei(z) - gamma - log z.
ComplexValue ei0(ComplexValue z);

/// Principal exponential integral E1(z) = int_z^inf e^-t/t dt, z not 0.
ComplexValue e1(ComplexValue z);

/// Real exponential integral Ei(x) for x > 0.
double ei(double x);

/// Complex Ei(z) = gamma + log z + Ei0(z) on the cut plane.
ComplexValue ei(ComplexValue z);

/// Logarithmic integral li(x) = Ei(log x), x > 1.
double li(double x);

/// Riemann-Siegel theta function via its product-series representation
///   theta(t) = -atan(2t) - t/2 (gamma + log pi)
///              + sum_k { t/(2k) - atan(t/(2k+1/2)) },
/// summed directly for small k and closed by an Euler-Maclaurin tail.
/// Odd in t by construction.
double theta_exact(double t);

/// Main terms t/2 log(t/2pi) - t/2 - pi/8 of the large-t expansion; t > 2pi.
double theta_asymptotic(double t);

/// phi_alpha(x) = gamma + log log x + log(-alpha) + Ei0(alpha log x),
/// x > 1, alpha not in [0, inf). Evaluated as -E1(-alpha log x).
ComplexValue phi_alpha(ComplexValue alpha, double x);

/// Phi_alpha(x) = x phi_{alpha-1}(x) - phi_alpha(x)
///               + x [log(-alpha) - log(-(alpha-1))],   Im alpha != 0.
ComplexValue phi_big(ComplexValue alpha, double x);

/// ~Phi_alpha(x) = x phi_{alpha-1}(x) - phi_alpha(x),   Im alpha != 0.
ComplexValue phi_tilde(ComplexValue alpha, double x);

/// Theta(x, alpha) = -(x^alpha - 1)/alpha + Ei0(alpha log x) log x, with the
/// removable value -log x at alpha = 0. x > 1.
ComplexValue theta_big(double x, ComplexValue alpha);

/// K(x, r, u) = (1/pi) [ (x^z - 1)/z^2 - log x / z ],  z = 1/2 + iu - r,
/// with the removable value log^2 x / (2 pi) at z = 0. x > 1.
ComplexValue kernel_K(double x, ComplexValue r, double u);

/// (e^w - 1)/w, continuous at w = 0.
ComplexValue exprel(ComplexValue w);

}  // namespace critline
