#include "critline/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "critline/special_fn.hpp"
#include "critline/zeros.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxCorrections = 30;

// b_k = B_2k / (2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}, k = 1..30.
std::array<double, kMaxCorrections + 1> make_bernoulli_ratios() {
  std::array<double, kMaxCorrections + 1> b{};
  for (int k = 1; k <= kMaxCorrections; ++k) {
    // zeta(2k): 199 direct terms plus the Euler-Maclaurin tail from N = 200.
    const double m = 2.0 * k;
    const double N = 200.0;
    double z2k = std::pow(N, 1.0 - m) / (m - 1.0) + 0.5 * std::pow(N, -m) +
                 m / 12.0 * std::pow(N, -m - 1.0) -
                 m * (m + 1.0) * (m + 2.0) / 720.0 * std::pow(N, -m - 3.0);
    for (int n = 199; n >= 1; --n) z2k += std::pow(static_cast<double>(n), -m);
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    b[k] = sign * 2.0 * z2k / std::pow(2.0 * kPi, 2.0 * k);
  }
  return b;
}

const std::array<double, kMaxCorrections + 1>& bernoulli_ratios() {
  static const auto table = make_bernoulli_ratios();
  return table;
}

int direct_terms(ComplexValue s) {
  // Keeps |s + 2k| / (2 pi N) <= 1/2 for every correction k <= 30.
  return std::max(10, static_cast<int>(std::ceil((std::abs(s) + 2.0 * kMaxCorrections) / kPi)));
}

void check_domain(ComplexValue s) {
  if (!is_finite(s)) throw DomainError("zeta: non-finite argument");
  if (s == ComplexValue(1.0)) throw DomainError("zeta: pole at s = 1");
  if (!(s.real() > 0.0)) throw DomainError("zeta: requires Re(s) > 0");
}

template <bool WithDerivative>
std::pair<ComplexValue, ComplexValue> euler_maclaurin(ComplexValue s) {
  check_domain(s);
  const int N = direct_terms(s);
  ComplexValue sum = 0.0;
  ComplexValue dsum = 0.0;
  for (int n = N - 1; n >= 1; --n) {
    const double ln = std::log(static_cast<double>(n));
    const ComplexValue term = std::exp(-s * ln);
    sum += term;
    if constexpr (WithDerivative) dsum -= ln * term;
  }
  const double dN = N;
  const double lnN = std::log(dN);
  const ComplexValue Ns = std::exp(-s * lnN);  // N^{-s}
  const ComplexValue sm1 = s - 1.0;
  sum += dN * Ns / sm1 + 0.5 * Ns;
  if constexpr (WithDerivative) {
    dsum += dN * Ns * (-lnN / sm1 - 1.0 / (sm1 * sm1)) - 0.5 * lnN * Ns;
  }

  const auto& b = bernoulli_ratios();
  ComplexValue P = s;    // s (s+1) ... (s+2k-2)
  ComplexValue dP = 1.0;
  ComplexValue Npow = Ns / dN;  // N^{-s-2k+1}
  const double invN2 = 1.0 / (dN * dN);
  for (int k = 1; k <= kMaxCorrections; ++k) {
    const ComplexValue term = b[k] * P * Npow;
    sum += term;
    if constexpr (WithDerivative) dsum += b[k] * (dP - lnN * P) * Npow;
    if (k >= 2 && std::abs(term) <= 1e-17 * std::abs(sum)) break;
    const ComplexValue f1 = s + (2.0 * k - 1.0);
    const ComplexValue f2 = s + (2.0 * k);
    dP = dP * f1 * f2 + P * (f1 + f2);
    P *= f1 * f2;
    Npow *= invN2;
  }
  return {sum, dsum};
}

}  // namespace

ComplexValue zeta(ComplexValue s) { return euler_maclaurin<false>(s).first; }

std::pair<ComplexValue, ComplexValue> zeta_and_derivative(ComplexValue s) {
  return euler_maclaurin<true>(s);
}

double hardy_Z(double t) {
  if (!std::isfinite(t)) throw DomainError("hardy_Z: non-finite t");
  const ComplexValue z = zeta(ComplexValue(0.5, t));
  const ComplexValue rotated = std::polar(1.0, theta_exact(t)) * z;
  if (std::abs(rotated.imag()) > 1e-8 * std::max(1.0, std::abs(z))) {
    throw std::logic_error("hardy_Z: rotated zeta value is not real");
  }
  return rotated.real();
}

double log_abs_zeta_half_direct(double u) {
  return std::log(std::abs(zeta(ComplexValue(0.5, u))));
}

ComplexValue xi(ComplexValue s) {
  if (s == ComplexValue(1.0)) return 0.5;
  const ComplexValue z = zeta(s);
  const ComplexValue g = std::exp(log_gamma(0.5 * s) - 0.5 * s * std::log(kPi));
  return 0.5 * s * (s - 1.0) * g * z;
}

ComplexValue reconstruct_zeta_on_line(double t, const ZeroTable& zeros) {
  if (t == 0.0) throw DomainError("reconstruct_zeta_on_line: t = 0");
  for (double tn : zeros.ordinates) {
    if (std::abs(std::abs(t) - tn) <= 1e-9 * std::max(1.0, tn)) {
      throw DomainError("reconstruct_zeta_on_line: t is a zero ordinate");
    }
  }
  const double modulus = std::abs(zeta(ComplexValue(0.5, t)));
  const double sign = t > 0.0 ? 1.0 : -1.0;
  const double phase = kPi * count_N(t, zeros) - theta_exact(t) - kPi * sign;
  return std::polar(modulus, phase);
}

}  // namespace critline
