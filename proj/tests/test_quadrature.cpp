#include <doctest.h>

#include <cmath>
#include <numbers>

#include "critline/quadrature.hpp"

using namespace critline;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("smooth integrals") {
  const PanelLayout plain;
  const auto a = integrate(RealIntegrand([](double x) { return std::exp(x); }), 0.0, 3.0, plain, 1e-13, 1e-13);
  CHECK(std::abs(a.value - (std::exp(3.0) - 1.0)) < 1e-12);
  CHECK(a.err_est <= 1e-11);
  const auto b = integrate(RealIntegrand([](double x) { return 1.0 / (1.0 + x * x); }), -20.0, 20.0, plain, 1e-13,
                           1e-13);
  CHECK(std::abs(b.value - 2.0 * std::atan(20.0)) < 1e-12);
  // Reversed limits are rejected; an empty interval is zero.
  CHECK_THROWS_AS(integrate(RealIntegrand([](double x) { return x * x; }), 2.0, 0.0, plain, 1e-13, 1e-13),
                  DomainError);
  CHECK(integrate(RealIntegrand([](double x) { return x; }), 1.0, 1.0, plain, 1e-13, 1e-13).value == 0.0);
  const auto z = integrate(ComplexIntegrand([](double x) { return std::exp(ComplexValue(0.0, x)); }), 0.0, kPi,
                           plain, 1e-13, 1e-13);
  CHECK(std::abs(z.value - ComplexValue(0.0, 2.0)) < 1e-12);
}

TEST_CASE("integrable endpoint singularities") {
  PanelLayout layout;
  layout.singular = {0.0};
  const auto a = integrate(RealIntegrand([](double x) { return std::log(x); }), 0.0, 1.0, layout, 1e-12, 1e-12);
  CHECK(std::abs(a.value + 1.0) < 1e-11);
  const auto b = integrate(RealIntegrand([](double x) { return 1.0 / std::sqrt(x); }), 0.0, 4.0, layout, 1e-12,
                           1e-12);
  // x^-1/2 is stronger than logarithmic; tanh-sinh still reaches ~1e-10.
  CHECK(std::abs(b.value - 4.0) < 1e-9);
  // Interior logarithmic singularity: int_0^2 log|x - 1| dx = -2.
  PanelLayout mid;
  mid.singular = {1.0};
  const auto c = integrate(RealIntegrand([](double x) { return std::log(std::abs(x - 1.0)); }), 0.0, 2.0, mid, 1e-12,
                           1e-12);
  CHECK(std::abs(c.value + 2.0) < 1e-11);
}

TEST_CASE("jump discontinuities at breakpoints") {
  // floor(x + 0.7) is 0 on [0, 0.3), 1 on [0.3, 1.3), 2 on [1.3, 2].
  PanelLayout all;
  all.breaks = {0.3, 1.3};
  const auto b = integrate(RealIntegrand([](double x) { return std::floor(x + 0.7); }), 0.0, 2.0, all, 1e-13, 1e-13);
  CHECK(std::abs(b.value - (1.0 + 2.0 * 0.7)) < 1e-12);
}

TEST_CASE("integrate_to_infinity") {
  const auto a = integrate_to_infinity(RealIntegrand([](double u) { return 1.0 / (u * u); }), 2.0, 1e-13, 1e-13);
  CHECK(std::abs(a.value - 0.5) < 1e-12);
  const auto b =
      integrate_to_infinity(RealIntegrand([](double u) { return 1.0 / (1.0 + u * u); }), 1.0, 1e-13, 1e-13);
  CHECK(std::abs(b.value - kPi / 4.0) < 1e-12);
  const auto c = integrate_to_infinity(RealIntegrand([](double u) { return std::log(u) / (u * u * u); }), 1.0,
                                       1e-13, 1e-13);
  CHECK(std::abs(c.value - 0.25) < 1e-12);
  const auto d = integrate_to_infinity(
      ComplexIntegrand([](double u) { return ComplexValue(1.0, 1.0) / std::pow(u, 1.5); }), 4.0, 1e-13, 1e-13);
  CHECK(std::abs(d.value - ComplexValue(1.0, 1.0)) < 1e-11);
}

TEST_CASE("half-line integrals with singularities and oscillation") {
  QuadratureSpec spec;
  spec.truncation_T = 50.0;
  // int_0^50 log|u - 10| du in closed form.
  const auto a = integrate_halfline(RealIntegrand([](double u) { return std::log(std::abs(u - 10.0)); }), spec,
                                    {10.0});
  const double want_a = (40.0 * std::log(40.0) - 40.0) + (10.0 * std::log(10.0) - 10.0);
  CHECK(std::abs(a.value - want_a) < 1e-9);
  CHECK(a.last_half_period == 0.0);

  // int_0^T sin(2u) / (u^2 + 1/4) with period splitting.
  spec.osc_split = true;
  spec.truncation_T = 200.0;
  const auto f = [](double u) { return std::sin(2.0 * u) / (u * u + 0.25); };
  const auto b = integrate_halfline(RealIntegrand(f), spec, {}, 2.0);
  PanelLayout ref_layout;
  ref_layout.max_panel = 0.25;
  const auto ref = integrate(RealIntegrand(f), 0.0, 200.0, ref_layout, 1e-13, 1e-13);
  CHECK(std::abs(b.value - ref.value) < 1e-9);
  CHECK(b.last_half_period != 0.0);
  // The remainder beyond T is smaller than the last half period.
  const double remainder = 1.0 / (2.0 * 200.0 * 200.0);
  CHECK(std::abs(b.last_half_period) > remainder);
}

TEST_CASE("refinement cap raises QuadratureError with the best value") {
  PanelLayout layout;
  layout.max_panel = 1.0;
  const auto rough = [](double x) { return std::sin(1.0 / (x + 1e-9)); };
  CHECK_THROWS_AS(integrate(RealIntegrand(rough), 0.0, 1.0, layout, 1e-15, 1e-15, 6), QuadratureError);
  try {
    integrate(RealIntegrand(rough), 0.0, 1.0, layout, 1e-15, 1e-15, 6);
  } catch (const QuadratureError& e) {
    CHECK(std::isfinite(e.best_value().real()));
    CHECK(e.error_estimate() > 0.0);
  }
}
