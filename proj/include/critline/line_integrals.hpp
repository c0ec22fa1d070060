#pragma once

// Integrals along the critical line Re(s) = 1/2 and the identity checks
// built from them. Every truncated integral is returned with the quadrature
// error estimate and a separate estimate of the remainder beyond
// spec.truncation_T:
//
//  * kernels multiplying pi N(u) - theta(u) - 2 atan(2u) (mean zero,
//    O(log u) fluctuation): A log T / T with A = sup_{u >= T} u^2 |w(u)|;
//  * kernels multiplying log|zeta(1/2+iu)|: the envelope |log|zeta|| <= 2 log u,
//    i.e. 2A T^{1-p} (log T/(p-1) + 1/(p-1)^2) for |w(u)| <= A u^-p;
//  * oscillatory integrands additionally get |last half period| / 2.

#include <vector>

#include "critline/blaschke.hpp"
#include "critline/line_cache.hpp"
#include "critline/prime_side.hpp"
#include "critline/quadrature.hpp"
#include "critline/report.hpp"
#include "critline/zeros.hpp"

namespace critline {

template <class T>
struct LineValue {
  T value{};
  double err_est = 0.0;
  double tail = 0.0;
};

/// K_C(s, u) = (2/pi) s(s-1) u / ((u^2 + (s-1/2)^2)(u^2 + 1/4)).
ComplexValue kernel_KC(ComplexValue s, double u);

/// theta(u) for quadrature: exact up to u = 1e4, asymptotic series beyond.
double theta_for_quadrature(double u);

/// pi N(u) - theta(u) - 2 atan(2u) for 0 <= u <= zeros.height.
double counting_remainder(double u, const ZeroTable& zeros);

/// Quadrature calibration: exp[pi int chi_alpha K_C], exp[int atan(u/a) K_C],
/// int u K_C, and the Laplace-side sine/cosine transforms, each against its
/// closed form, over a fixed 20-point (s, alpha, a, u) grid (100 records).
std::vector<ReportEntry> closed_form_battery(double tol = 1e-9);

/// exp[int theta K_C] = Gamma(s/2) pi^{-s/2}  and  exp[int 2 atan(2u) K_C] = s^2.
/// The part beyond truncation_T uses the asymptotic theta series; the tail
/// column bounds the first omitted term of that series.
ReportEntry gamma_kernel_identity(ComplexValue s, const QuadratureSpec& spec);
ReportEntry atan_kernel_identity(ComplexValue s, const QuadratureSpec& spec);

/// Omega = (1/pi) int_0^T log|zeta(1/2+iu)| / (u^2 + 1/4) du.
LineValue<double> omega_zeta(const QuadratureSpec& spec, const CriticalLineCache& cache);
/// The same integral over (-T, T) without folding (for the evenness check).
LineValue<double> omega_zeta_whole_line(const QuadratureSpec& spec, const CriticalLineCache& cache);

/// zeta_B(s) = exp[(2/pi)(s - 1/2) int_0^T log|zeta| / (u^2 + (s-1/2)^2) du], Re(s) > 1/2.
LineValue<ComplexValue> zeta_B_eval(ComplexValue s, const QuadratureSpec& spec,
                                    const CriticalLineCache& cache);
/// zeta_C(s) = exp[int_0^T (pi N - theta - 2 atan 2u) K_C(s, u) du], Re(s) > 1/2.
LineValue<ComplexValue> zeta_C_eval(ComplexValue s, const QuadratureSpec& spec,
                                    const ZeroTable& zeros);

/// xi(s) = (1/2) exp[int pi N(u) K_C(s, u) du]: N from the table on (0, T],
/// theta(u) + 2 atan(2u) (its mean) beyond T; the tail covers the omitted
/// fluctuation.
LineValue<ComplexValue> xi_poisson(ComplexValue s, const QuadratureSpec& spec,
                                   const ZeroTable& zeros);

struct J1J2 {
  LineValue<double> j1;  // -(1/pi) int log|zeta| / (u^2 + 1/4)^2
  LineValue<double> j2;  // (2/pi) int u (pi N - theta - 2 atan 2u) / (u^2 + 1/4)^2
};
J1J2 j1_j2(const QuadratureSpec& spec, const CriticalLineCache& cache, const ZeroTable& zeros);

/// f11(x) = (2 sqrt x / pi) int (pi N - theta - 2 atan 2u) / (u^2 + 1/4) sin(u log x) du.
LineValue<double> f11(double x, const QuadratureSpec& spec, const ZeroTable& zeros);
/// f21(x) = -(2 sqrt x / pi) int log|zeta| / (u^2 + 1/4) cos(u log x) du.
LineValue<double> f21(double x, const QuadratureSpec& spec, const CriticalLineCache& cache);

/// N1(t) = (theta(t) + 2 atan(2t)) / pi (odd in t).
double n1(double t);
/// N2(t) = -(1/2pi^2) d/dt int_R log|1 - t^2/u^2| log|zeta(1/2+iu)| du, the
/// integral folded to 2 int_0^T, the derivative by central differences with
/// steps h and h/2 combined by Richardson extrapolation. t must be at least
/// 0.1 from every zero ordinate; h in [1e-4, 1e-2].
LineValue<double> n2(double t, const QuadratureSpec& spec, const CriticalLineCache& cache,
                     double h = 1e-3);

/// N(t) - N_B(t) = N1(t) + N2(t) + N3(t). For a nonempty synthetic set the
/// check runs on the model function F = zeta * G (see synthetic_G): N counts
/// the zeros of F, N2 includes the log|G| part. Tolerance 0.1.
ReportEntry decomposition_check(double t, const QuadratureSpec& spec, const CriticalLineCache& cache,
                                const ZeroTable& zeros, const SyntheticZeroSet& zs);

/// f*(x) = f11(x) + f12(x)  and  f*(x) = f21(x) + f22(x), tolerance 0.05.
ReportEntry theorem33a_check(double x, const MangoldtTable& tab, const QuadratureSpec& spec,
                             const ZeroTable& zeros, const SyntheticZeroSet& zs);
ReportEntry theorem33b_check(double x, const MangoldtTable& tab, const QuadratureSpec& spec,
                             const CriticalLineCache& cache, const SyntheticZeroSet& zs);

/// pi_{*,r}(x) log x - psi_r(x) = Theta(x, 1-r) - Theta(x, -r)
///   + int_0^T (K(x,r,u) + K(x,r,-u)) log|zeta| du - zero sum.
ReportEntry theorem34_check(double x, ComplexValue r, const MangoldtTable& tab,
                            const QuadratureSpec& spec, const CriticalLineCache& cache,
                            const SyntheticZeroSet& zs, double tol);
/// int_1^x pi_{*,r}(y)/y dy (piecewise exact) = pi_{*,r}(x) log x - psi_r(x), tolerance 1e-8.
ReportEntry theorem34_first_equality(double x, ComplexValue r, const MangoldtTable& tab);

/// Balance identities for F = zeta * G on a synthetic set: the change of
/// every term of  gamma - 1 = J1 + 2 Omega + B'/B(1) = J2 + C'/C(1)  against
/// G'/G(1), plus sum f_rho = B'/B(1) + 2 Omega_B and the closed form of C'/C(1).
std::vector<ReportEntry> balance_check(const QuadratureSpec& spec, const SyntheticZeroSet& zs);

}  // namespace critline
