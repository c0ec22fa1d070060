#include "critline/special_fn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2, B_4, ..., B_20
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,         -1.0 / 30.0,    1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0, 7.0 / 6.0,          -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0};

// Regions for the exponential integral. The Taylor series of Ei0(-z) loses
// about exp(|z| + Re z) relative to E1(z); below kSeriesLoss that is
// harmless. Outside it, the continued fraction converges quickly for
// moderate |z| and the asymptotic series is accurate once |z| > kAsymptotic.
constexpr double kSeriesLoss = 10.0;
constexpr double kSeriesAlways = 2.0;
constexpr double kAsymptotic = 40.0;
constexpr double kSeriesMax = 700.0;

bool series_region(ComplexValue z) {
  const double r = std::abs(z);
  return r <= kSeriesAlways || (r + z.real() <= kSeriesLoss && r <= kSeriesMax);
}

// sum_{k>=1} w^k/(k k!)
ComplexValue ei0_series(ComplexValue w) {
  ComplexValue term = 1.0;
  ComplexValue sum = 0.0;
  const double r = std::abs(w);
  for (int k = 1; k < 5000; ++k) {
    term *= w / static_cast<double>(k);
    const ComplexValue add = term / static_cast<double>(k);
    sum += add;
    if (k > r && std::abs(add) <= 0.25 * kEps * std::abs(sum)) break;
  }
  return sum;
}

// Modified Lentz evaluation of
//   E1(z) = e^-z / (z+1 - 1/(z+3 - 4/(z+5 - 9/(z+7 - ...))))
ComplexValue e1_continued_fraction(ComplexValue z) {
  constexpr double tiny = 1e-300;
  ComplexValue b = z + 1.0;
  ComplexValue c = 1.0 / tiny;
  ComplexValue d = 1.0 / b;
  ComplexValue h = d;
  for (int i = 1; i < 20000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const ComplexValue del = c * d;
    h *= del;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  return h * std::exp(-z);
}

// e^-z / z * sum (-1)^k k! / z^k, truncated at the smallest term.
ComplexValue e1_asymptotic(ComplexValue z) {
  ComplexValue term = 1.0;
  ComplexValue sum = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -static_cast<double>(k) / z;
    const double mag = std::abs(term);
    if (mag > last) break;
    sum += term;
    last = mag;
    if (mag <= 0.25 * kEps) break;
  }
  return std::exp(-z) / z * sum;
}

// sum_{k>=0} w^k/(k+n)!  for n = 1, 2
ComplexValue exp_remainder_series(ComplexValue w, int n) {
  double fact = 1.0;
  for (int j = 2; j <= n; ++j) fact *= j;
  ComplexValue term = 1.0 / fact;
  ComplexValue sum = term;
  for (int k = 1; k < 100; ++k) {
    term *= w / static_cast<double>(k + n);
    sum += term;
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
  }
  return sum;
}

bool is_nonpositive_integer(ComplexValue s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

}  // namespace

ComplexValue log_gamma(ComplexValue s) {
  if (!is_finite(s)) throw DomainError("log_gamma: non-finite argument");
  if (is_nonpositive_integer(s)) throw DomainError("log_gamma: pole");

  // Shift into the Stirling region; the sum of principal logs of z+k is
  // continuous in z off the real axis, so the result is the analytic branch.
  ComplexValue z = s;
  ComplexValue shift = 0.0;
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const ComplexValue inv = 1.0 / z;
  const ComplexValue inv2 = inv * inv;
  ComplexValue series = 0.0;
  ComplexValue pw = inv;
  for (std::size_t k = 1; k <= 8; ++k) {
    const double n = 2.0 * static_cast<double>(k);
    series += kBernoulli[k - 1] / (n * (n - 1.0)) * pw;
    pw *= inv2;
  }
  const ComplexValue stirling =
      (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
  return stirling - shift;
}

ComplexValue e1(ComplexValue z) {
  if (!is_finite(z)) throw DomainError("e1: non-finite argument");
  if (z == ComplexValue(0.0)) throw DomainError("e1: logarithmic pole at 0");
  if (series_region(z)) return -kEulerGamma - std::log(z) - ei0_series(-z);
  if (std::abs(z) > kAsymptotic) return e1_asymptotic(z);
  return e1_continued_fraction(z);
}

ComplexValue ei0(ComplexValue z) {
  if (!is_finite(z)) throw DomainError("ei0: non-finite argument");
  // Series for -z in the E1 series region, i.e. near the positive real axis
  // of z where the terms do not cancel.
  if (series_region(-z)) return ei0_series(z);
  const ComplexValue mz = -z;
  return -e1(mz) - kEulerGamma - std::log(mz);
}

double ei(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("ei: requires x > 0");
  return kEulerGamma + std::log(x) + ei0(ComplexValue(x)).real();
}

ComplexValue ei(ComplexValue z) {
  if (z.imag() == 0.0 && z.real() <= 0.0)
    throw DomainError("ei: argument on the branch cut");
  return kEulerGamma + std::log(z) + ei0(z);
}

double li(double x) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("li: requires x > 1");
  return ei(std::log(x));
}

double theta_exact(double t) {
  if (!std::isfinite(t)) throw DomainError("theta_exact: non-finite t");
  if (t == 0.0) return 0.0;
  if (t < 0.0) return -theta_exact(-t);

  // f(k) = t/(2k) - atan(t/(2k+1/2)); atan(t/a) = Im log(a + it).
  constexpr int kDirect = 16;
  constexpr int kCorrections = 8;
  double sum = 0.0;
  for (int k = 1; k < kDirect; ++k) {
    sum += t / (2.0 * k) - std::atan(t / (2.0 * k + 0.5));
  }

  const double K = kDirect;
  const double a = 2.0 * K + 0.5;
  // Antiderivative F(k) = t/2 log k - 1/2 [a atan(t/a) + t/2 log(a^2 + t^2)],
  // F(inf) = -t/2 (1 + log 2).
  const double F_K = 0.5 * t * std::log(K) -
                     0.5 * (a * std::atan(t / a) + 0.5 * t * std::log(a * a + t * t));
  const double F_inf = -0.5 * t * (1.0 + std::log(2.0));
  const double f_K = t / (2.0 * K) - std::atan(t / a);

  double tail = (F_inf - F_K) + 0.5 * f_K;
  // Euler-Maclaurin corrections -B_2j/(2j)! f^(2j-1)(K). For odd n:
  //   d^n/dk^n t/(2k)           = -(t/2) n! / k^(n+1)
  //   d^n/dk^n Im log(2k+1/2+it) = Im 2^n (n-1)! / (2k+1/2+it)^n
  const ComplexValue q(a, t);
  double fact_nm1 = 1.0;  // (n-1)!
  for (int j = 1; j <= kCorrections; ++j) {
    const int n = 2 * j - 1;
    if (n > 1) fact_nm1 *= static_cast<double>((n - 1) * (n - 2));
    const double fact_n = fact_nm1 * n;
    const double fact_2j = fact_n * (n + 1);
    const double d_recip = -0.5 * t * fact_n / std::pow(K, n + 1);
    const double d_log = (std::pow(2.0, n) * fact_nm1 / std::pow(q, n)).imag();
    tail -= kBernoulli[j - 1] / fact_2j * (d_recip - d_log);
  }
  return -std::atan(2.0 * t) - 0.5 * t * (kEulerGamma + std::log(kPi)) + sum + tail;
}

double theta_asymptotic(double t) {
  if (!(t > 2.0 * kPi)) throw DomainError("theta_asymptotic: requires t > 2 pi");
  return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0;
}

ComplexValue phi_alpha(ComplexValue alpha, double x) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("phi_alpha: requires x > 1");
  if (!is_finite(alpha)) throw DomainError("phi_alpha: non-finite alpha");
  if (alpha.imag() == 0.0 && alpha.real() >= 0.0)
    throw DomainError("phi_alpha: alpha on the excluded ray [0, inf)");
  // gamma + log(-w) + Ei0(w) = -E1(-w) with w = alpha log x, log x > 0.
  return -e1(-alpha * std::log(x));
}

ComplexValue phi_tilde(ComplexValue alpha, double x) {
  if (alpha.imag() == 0.0) throw DomainError("phi_tilde: requires Im(alpha) != 0");
  return x * phi_alpha(alpha - 1.0, x) - phi_alpha(alpha, x);
}

ComplexValue phi_big(ComplexValue alpha, double x) {
  if (alpha.imag() == 0.0) throw DomainError("phi_big: requires Im(alpha) != 0");
  return phi_tilde(alpha, x) + x * (std::log(-alpha) - std::log(1.0 - alpha));
}

ComplexValue exprel(ComplexValue w) {
  if (std::abs(w) < 0.5) return exp_remainder_series(w, 1);
  return (std::exp(w) - 1.0) / w;
}

ComplexValue theta_big(double x, ComplexValue alpha) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("theta_big: requires x > 1");
  const double L = std::log(x);
  if (alpha == ComplexValue(0.0)) return -L;
  const ComplexValue w = alpha * L;
  // -(x^alpha - 1)/alpha = -L (e^w - 1)/w
  return L * (ei0(w) - exprel(w));
}

ComplexValue kernel_K(double x, ComplexValue r, double u) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("kernel_K: requires x > 1");
  const double L = std::log(x);
  const ComplexValue z = ComplexValue(0.5 - r.real(), u - r.imag());
  if (z == ComplexValue(0.0)) return L * L / (2.0 * kPi);
  const ComplexValue w = z * L;
  // (x^z - 1)/z^2 - L/z = L^2 (e^w - 1 - w)/w^2
  ComplexValue g;
  if (std::abs(w) < 1.0) {
    g = exp_remainder_series(w, 2);
  } else {
    g = (std::exp(w) - 1.0 - w) / (w * w);
  }
  return L * L / kPi * g;
}

}  // namespace critline
