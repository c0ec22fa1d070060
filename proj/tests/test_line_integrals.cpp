#include <doctest.h>

#include <cmath>
#include <numbers>

#include "critline/blaschke.hpp"
#include "critline/line_cache.hpp"
#include "critline/line_integrals.hpp"
#include "critline/prime_side.hpp"
#include "critline/special_fn.hpp"
#include "critline/zeros.hpp"
#include "critline/zeta.hpp"
#include "oracle_values.hpp"

using namespace critline;

namespace {

constexpr double kPi = std::numbers::pi;

struct Fixture {
  ZeroTable zeros = scan_zeros(1000.0);
  CriticalLineCache cache = CriticalLineCache::build(zeros, 1000.0);
  MangoldtTable sieve = build_mangoldt(1000000);
  QuadratureSpec quad;
};

Fixture& fx() {
  static Fixture f;
  return f;
}

void check_entry(const ReportEntry& e) {
  CAPTURE(e.check_id);
  CAPTURE(e.abs_diff);
  CAPTURE(e.tolerance);
  CAPTURE(e.tail);
  CHECK(e.pass);
}

}  // namespace

TEST_CASE("closed-form quadrature battery") {
  const auto battery = closed_form_battery(1e-9);
  CHECK(battery.size() == 100);
  for (const auto& e : battery) check_entry(e);
}

TEST_CASE("kernel K_C") {
  const ComplexValue s(2.0, 0.0);
  const double u = 3.0;
  const ComplexValue want = 2.0 / kPi * s * (s - 1.0) * u / ((u * u + (s - 0.5) * (s - 0.5)) * (u * u + 0.25));
  CHECK(std::abs(kernel_KC(s, u) - want) < 1e-15);
  CHECK(kernel_KC(s, 0.0) == ComplexValue(0.0));
  // theta for quadrature switches to the asymptotic series smoothly.
  CHECK(std::abs(theta_for_quadrature(9999.0) - theta_exact(9999.0)) < 1e-12);
  CHECK(std::abs(theta_for_quadrature(1e4 + 1.0) - theta_exact(1e4 + 1.0)) < 1e-9);
}

TEST_CASE("Gamma and arctangent kernel identities") {
  for (ComplexValue s : {ComplexValue(2.0), ComplexValue(3.0), ComplexValue(1.5, 1.0)}) {
    check_entry(gamma_kernel_identity(s, fx().quad));
    check_entry(atan_kernel_identity(s, fx().quad));
  }
}

TEST_CASE("counting remainder") {
  const ZeroTable& z = fx().zeros;
  CHECK(std::abs(counting_remainder(0.0, z)) < 1e-15);
  // Mean zero: the average over (0, 1000] is small compared to its O(1) swings.
  double mean = 0.0;
  const int n = 20000;
  for (int i = 1; i <= n; ++i) mean += counting_remainder(1000.0 * (i - 0.5) / n, z);
  CHECK(std::abs(mean / n) < 0.05);
  CHECK_THROWS_AS(counting_remainder(1001.0, z), OutOfRangeError);
}

TEST_CASE("Omega on the line: folded and whole-line integrals agree") {
  const auto folded = omega_zeta(fx().quad, fx().cache);
  const auto whole = omega_zeta_whole_line(fx().quad, fx().cache);
  CHECK(std::abs(folded.value - whole.value) < 1e-8);
  CHECK(std::abs(folded.value) <= 5e-3 + folded.tail);
  CHECK(folded.tail > 0.0);
}

TEST_CASE("zeta_B and zeta_C reproduce zeta") {
  for (ComplexValue s : {ComplexValue(2.0), ComplexValue(1.5, 3.0)}) {
    CAPTURE(s);
    const ComplexValue zs = zeta(s);
    // With no zeros off the line B = C = 1, so both equal (s-1)/s zeta(s).
    const ComplexValue target = (s - 1.0) / s * zs;
    const auto zb = zeta_B_eval(s, fx().quad, fx().cache);
    const auto zc = zeta_C_eval(s, fx().quad, fx().zeros);
    CHECK(std::abs(zb.value - target) / std::abs(zs) <= 5e-3 + zb.tail / std::abs(zs));
    CHECK(std::abs(zc.value - target) / std::abs(zs) <= 5e-3 + zc.tail / std::abs(zs));
  }
  CHECK_THROWS_AS(zeta_B_eval(ComplexValue(0.5, 1.0), fx().quad, fx().cache), DomainError);
}

TEST_CASE("xi from the counting function") {
  const auto v = xi_poisson(2.0, fx().quad, fx().zeros);
  CHECK(std::abs(v.value - kPi / 6.0) <= 2e-3 + v.tail);
  const auto w = xi_poisson(ComplexValue(1.5, 2.0), fx().quad, fx().zeros);
  const ComplexValue want = xi(ComplexValue(1.5, 2.0));
  CHECK(std::abs(w.value - want) <= 2e-3 * std::abs(want) + w.tail);
}

TEST_CASE("J1 and J2") {
  const J1J2 j = j1_j2(fx().quad, fx().cache, fx().zeros);
  CHECK(std::abs(j.j1.value - oracle::kEulerGammaMinusOne) <= 5e-3 + j.j1.tail);
  CHECK(std::abs(j.j2.value - oracle::kEulerGammaMinusOne) <= 5e-3 + j.j2.tail);
}

TEST_CASE("N1 and N2") {
  CHECK(n1(-20.0) == -n1(20.0));
  CHECK(std::abs(n1(20.0) - (theta_exact(20.0) + 2.0 * std::atan(40.0)) / kPi) < 1e-14);
  const double t1 = fx().zeros.ordinates[0];
  CHECK_THROWS_AS(n2(t1 + 0.05, fx().quad, fx().cache), DomainError);
  CHECK_THROWS_AS(n2(20.0, fx().quad, fx().cache, 0.5), DomainError);
  const auto v = n2(20.0, fx().quad, fx().cache);
  // N(20) = 1 = N1 + N2 under an empty synthetic set.
  CHECK(std::abs(1.0 - n1(20.0) - v.value) <= 0.1);
}

TEST_CASE("counting decomposition") {
  const SyntheticZeroSet none;
  for (double t : {20.0, 30.0, 50.0}) check_entry(decomposition_check(t, fx().quad, fx().cache, fx().zeros, none));
  const SyntheticZeroSet zs({ComplexValue(0.6, 14.0)});
  for (double t : {13.5, 20.0}) check_entry(decomposition_check(t, fx().quad, fx().cache, fx().zeros, zs));
}

TEST_CASE("f* from the critical line") {
  QuadratureSpec q = fx().quad;
  q.osc_split = true;
  const SyntheticZeroSet none;
  for (double x : {std::exp(1.0), 10.0}) {
    check_entry(theorem33a_check(x, fx().sieve, q, fx().zeros, none));
    check_entry(theorem33b_check(x, fx().sieve, q, fx().cache, none));
  }
  // f11 and f21 both approximate f*, hence each other.
  const auto a = f11(10.0, q, fx().zeros);
  const auto b = f21(10.0, q, fx().cache);
  CHECK(std::abs(a.value - b.value) <= 0.1 + a.tail + b.tail);
}

TEST_CASE("weighted prime sums from the critical line") {
  const SyntheticZeroSet none;
  check_entry(theorem34_check(10.0, 2.0, fx().sieve, fx().quad, fx().cache, none, 5e-3));
  check_entry(theorem34_check(10.0, 0.0, fx().sieve, fx().quad, fx().cache, none, 0.05));
  for (ComplexValue r : {ComplexValue(2.0), ComplexValue(0.0), ComplexValue(0.5, 3.0)}) {
    check_entry(theorem34_first_equality(10.0, r, fx().sieve));
  }
}

TEST_CASE("balance identities on a synthetic set") {
  const SyntheticZeroSet zs({ComplexValue(0.6, 14.0), ComplexValue(0.8, 25.0)});
  const auto entries = balance_check(fx().quad, zs);
  CHECK(!entries.empty());
  for (const auto& e : entries) check_entry(e);
}
