#include <doctest.h>

#include <cmath>
#include <numbers>

#include "critline/quadrature.hpp"
#include "critline/special_fn.hpp"
#include "oracle_values.hpp"

using namespace critline;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(ComplexValue got, ComplexValue want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("euler_gamma matches the harmonic-sum oracle") {
  CHECK(std::abs(euler_gamma() - oracle::kEulerGamma) < 1e-15);
  CHECK(std::abs(euler_gamma() - 1.0 - oracle::kEulerGammaMinusOne) < 1e-15);
}

TEST_CASE("euler_gamma against the truncated Weierstrass product at z = 1") {
  // prod_{k<=K} (1 + 1/k) e^{-1/k} = (K+1) exp(-H_K), which tends to exp(-gamma).
  double log_prod = 0.0;
  for (int k = 1; k <= 1000000; ++k) log_prod += std::log1p(1.0 / k) - 1.0 / k;
  CHECK(std::abs(std::exp(log_prod) - std::exp(-euler_gamma())) < 1e-6);
}

TEST_CASE("log_gamma") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(0.5) - std::log(std::sqrt(kPi))) < 1e-14);
  CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-13);
  for (const auto& p : oracle::kLogGamma) {
    CAPTURE(p.arg);
    // Imaginary parts compare modulo nothing: principal branch, continuous in s.
    CHECK(std::abs(log_gamma(p.arg) - p.value) <= 1e-12 * std::max(1.0, std::abs(p.value)));
  }
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-3.0), DomainError);
}

TEST_CASE("ei0 against the extended-precision series oracle") {
  CHECK(std::abs(ei0(0.0)) == 0.0);
  CHECK(std::abs(ei0(1.0) - oracle::kEi0One) < 1e-14);
  CHECK(std::abs(ei0(-1.0) - oracle::kEi0MinusOne) < 1e-14);
  for (const auto& p : oracle::kEi0) {
    CAPTURE(p.arg);
    CHECK(std::abs(ei0(p.arg) - p.value) <= 1e-10 * std::max(1.0, std::abs(p.value)));
  }
}

TEST_CASE("e1 against the arbitrary-precision oracle") {
  for (const auto& p : oracle::kE1) {
    CAPTURE(p.arg);
    CHECK(std::abs(e1(p.arg) - p.value) <= 1e-10 * std::max(1e-300, std::abs(p.value)) + 1e-300);
  }
}

TEST_CASE("ei and li") {
  CHECK(std::abs(ei(1.0) - oracle::kEiOne) < 1e-13);
  CHECK(std::abs(li(oracle::kSoldner)) < 1e-13);
  CHECK(li(1.0 + 1e-9) < -15.0);
  CHECK_THROWS_AS(li(1.0), DomainError);
  CHECK_THROWS_AS(li(0.5), DomainError);
  CHECK_THROWS_AS(ei(0.0), DomainError);
  for (double x : {0.1, 1.0, 5.0, 25.0, 80.0}) {
    CAPTURE(x);
    const double id = ei(x) - euler_gamma() - std::log(x) - ei0(x).real();
    CHECK(std::abs(id) <= 1e-10 * std::max(1.0, std::abs(ei(x))));
  }
  // li(x) = ei(log x) up to 1e12.
  for (double x : {2.0, 1e3, 1e6, 1e12}) CHECK(rel_err(li(x), ei(std::log(x))) < 1e-14);
}

TEST_CASE("complex ei obeys the defining identity off the cut") {
  for (ComplexValue z : {ComplexValue(2.0, 3.0), ComplexValue(-4.0, 1.0), ComplexValue(40.0, -5.0)}) {
    const ComplexValue id = ei(z) - euler_gamma() - std::log(z) - ei0(z);
    CHECK(std::abs(id) <= 1e-10 * std::max(1.0, std::abs(ei(z))));
  }
}

TEST_CASE("theta_exact") {
  CHECK(theta_exact(0.0) == 0.0);
  for (const auto& p : oracle::kTheta) {
    CAPTURE(p.arg);
    CHECK(std::abs(theta_exact(p.arg) - p.value) <= 1e-10 * std::max(1.0, std::abs(p.value)));
  }
  for (double t : {1.0, 10.0, 100.0}) CHECK(theta_exact(-t) == -theta_exact(t));
  CHECK(std::abs(theta_exact(100.0) - theta_asymptotic(100.0)) <= 0.01);
  for (double t = 50.0; t <= 2000.0; t *= 2.0) CHECK(std::abs(theta_exact(t) - theta_asymptotic(t)) <= 0.01);
}

TEST_CASE("theta_asymptotic") {
  const double t0 = 2.0 * kPi * std::exp(1.0);
  CHECK(std::abs(theta_asymptotic(t0) + kPi / 8.0) < 1e-13);
  CHECK(std::abs(theta_asymptotic(100.0) - (50.0 * std::log(100.0 / (2.0 * kPi)) - 50.0 - kPi / 8.0)) < 1e-12);
  CHECK_THROWS_AS(theta_asymptotic(6.0), DomainError);
}

TEST_CASE("phi_alpha") {
  const ComplexValue a(2.0, 3.0);
  const double x = 5.0;
  const ComplexValue lhs = phi_alpha(a, x);
  const ComplexValue rhs = ei(a * std::log(x)) - ComplexValue(0.0, kPi);
  CHECK(std::abs(lhs - rhs) < 1e-9);
  CHECK(std::abs(phi_alpha(std::conj(a), x) - std::conj(lhs)) < 1e-13);
  // Remainder bound |phi - x^a/(a log x)| <= x^{Re a} / (Im a^2 log^2 x).
  const ComplexValue b(1.0, 4.0);
  for (double y : {2.0, 10.0, 100.0}) {
    const double L = std::log(y);
    const double rem = std::abs(phi_alpha(b, y) - std::pow(ComplexValue(y), b) / (b * L));
    CHECK(rem <= std::pow(y, b.real()) / (b.imag() * b.imag() * L * L));
  }
  // The excluded ray and x <= 1.
  CHECK_THROWS_AS(phi_alpha(2.0, 3.0), DomainError);
  CHECK_THROWS_AS(phi_alpha(0.0, 3.0), DomainError);
  CHECK_THROWS_AS(phi_alpha(a, 1.0), DomainError);
  // Negative real alpha is admissible.
  CHECK(is_finite(phi_alpha(-1.5, 3.0)));
}

TEST_CASE("phi_big and phi_tilde") {
  const ComplexValue a(0.6, 14.0);
  CHECK(std::abs(phi_big(a, 1.0 + 1e-8)) <= 1e-6);
  const double x = 10.0;
  const double L = std::log(x);
  const double rem = std::abs(phi_tilde(a, x) - std::pow(ComplexValue(x), a) / (a * (a - 1.0) * L));
  CHECK(rem <= 2.0 * std::pow(x, a.real()) / (a.imag() * a.imag() * L * L));
  // The remainder bound on a grid with |Im alpha| >= 1.
  for (ComplexValue b : {ComplexValue(0.75, 1.0), ComplexValue(0.9, 5.0), ComplexValue(0.55, -30.0)}) {
    for (double y : {3.0, 10.0, 1000.0}) {
      const double Ly = std::log(y);
      const double r = std::abs(phi_tilde(b, y) - std::pow(ComplexValue(y), b) / (b * (b - 1.0) * Ly));
      CAPTURE(b);
      CAPTURE(y);
      CHECK(r <= 2.0 * std::pow(y, b.real()) / (b.imag() * b.imag() * Ly * Ly));
    }
  }
  // Defining integral Phi_a(x) = x int_1^x phi_a(y) / y^2 dy, in v = log y.
  for (const auto& [b, y] : {std::pair{ComplexValue(1.0, 2.0), 3.0}, std::pair{ComplexValue(0.6, 14.0), 10.0}}) {
    PanelLayout layout;
    layout.singular = {0.0};
    const auto I = integrate(ComplexIntegrand([b](double v) { return -e1(-b * v) * std::exp(-v); }), 0.0,
                             std::log(y), layout, 1e-13, 1e-13);
    CHECK(std::abs(phi_big(b, y) - y * I.value) < 1e-8);
  }
  CHECK_THROWS_AS(phi_big(2.0, 3.0), DomainError);
  CHECK_THROWS_AS(phi_tilde(0.5, 3.0), DomainError);
}

TEST_CASE("theta_big") {
  CHECK(std::abs(theta_big(10.0, 0.0) + std::log(10.0)) < 1e-15);
  CHECK(std::abs(theta_big(10.0, 1e-9) - theta_big(10.0, 0.0)) <= 1e-7);
  CHECK(std::abs(theta_big(std::exp(1.0), 1.0) - oracle::kThetaBigAtE) < 1e-13);
  // Entire in alpha: the series and the closed form agree across the switch.
  for (double eps : {1e-7, 1e-5, 1e-3}) {
    const ComplexValue a(eps, eps);
    const double L = std::log(7.0);
    const ComplexValue closed = -(std::exp(a * L) - 1.0) / a + ei0(a * L) * L;
    CHECK(std::abs(theta_big(7.0, a) - closed) < 1e-6);
  }
}

TEST_CASE("kernel_K") {
  const double x = 10.0;
  const double L = std::log(x);
  const double diag = L * L / (2.0 * kPi);
  const double u = 1.0;
  CHECK(std::abs(kernel_K(x, ComplexValue(0.5, u), u) - diag) < 1e-14);
  CHECK(std::abs(kernel_K(x, ComplexValue(0.5 + 1e-9, u), u) - diag) <= 1e-6);
  CHECK(std::abs(kernel_K(1.0 + 1e-9, 2.0, 1.0)) <= 1e-7);
  // Off the diagonal: the closed form.
  const ComplexValue r(2.0, 0.0);
  const ComplexValue z = ComplexValue(0.5, 3.0) - r;
  const ComplexValue want = ((std::exp(z * L) - 1.0) / (z * z) - L / z) / kPi;
  CHECK(std::abs(kernel_K(x, r, 3.0) - want) < 1e-14);
}

TEST_CASE("exprel") {
  CHECK(std::abs(exprel(0.0) - 1.0) == 0.0);
  CHECK(std::abs(exprel(1e-10) - (1.0 + 0.5e-10)) < 1e-16);
  CHECK(std::abs(exprel(ComplexValue(1.0, 1.0)) - (std::exp(ComplexValue(1.0, 1.0)) - 1.0) / ComplexValue(1.0, 1.0)) <
        1e-15);
}
