#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include "critline/line_cache.hpp"
#include "critline/special_fn.hpp"
#include "critline/zeros.hpp"
#include "critline/zeta.hpp"
#include "oracle_values.hpp"

using namespace critline;

namespace {

constexpr double kPi = std::numbers::pi;

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::path(CRITLINE_TEST_DIR) / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string first_line(const std::filesystem::path& p, int skip = 0) {
  std::ifstream in(p);
  std::string line;
  for (int i = 0; i <= skip; ++i) std::getline(in, line);
  return line;
}

}  // namespace

TEST_CASE("scan_zeros below 100") {
  const ZeroTable z = scan_zeros(100.0);
  REQUIRE(z.ordinates.size() == 29);
  CHECK(z.count_consistent);
  CHECK(expected_zero_count(100.0) == 29);
  for (std::size_t i = 0; i < 29; ++i) {
    CAPTURE(i);
    CHECK(std::abs(z.ordinates[i] - oracle::kZetaZeros[i]) < 1e-8);
    const auto& b = z.brackets[i];
    CHECK(b.lo <= z.ordinates[i]);
    CHECK(z.ordinates[i] <= b.hi);
    CHECK(b.hi - b.lo <= kDefaultRefineTol);
    CHECK(hardy_Z(b.lo) * hardy_Z(b.hi) < 0.0);
  }
}

TEST_CASE("scan_zeros at small heights") {
  const ZeroTable one = scan_zeros_unchecked(15.0, 0.01, 1e-10);
  REQUIRE(one.ordinates.size() == 1);
  CHECK(std::abs(one.ordinates[0] - 14.134725) < 1e-6);
  CHECK(scan_zeros_unchecked(14.0, 0.01, 1e-10).ordinates.empty());
  CHECK_THROWS_AS(scan_zeros(10.0), DomainError);
  CHECK_THROWS_AS(scan_zeros(100.0, 0.5), DomainError);
}

TEST_CASE("scan_zeros to 1000 has the oracle count") {
  const ZeroTable z = scan_zeros(1000.0);
  CHECK(z.ordinates.size() == static_cast<std::size_t>(oracle::kZerosBelow1000));
  CHECK(z.count_consistent);
  for (std::size_t i = 1; i < z.ordinates.size(); ++i) CHECK(z.ordinates[i] > z.ordinates[i - 1]);
  // |N(T) - theta(T)/pi - 1| stays small at desk scale.
  for (double T : {250.0, 500.0, 1000.0}) {
    CHECK(std::abs(count_N(T, z) - theta_exact(T) / kPi - 1.0) <= 2.0);
  }
}

TEST_CASE("count_N") {
  const ZeroTable z = scan_zeros(100.0);
  CHECK(count_N(20.0, z) == 1);
  CHECK(count_N(0.0, z) == 0);
  CHECK(count_N(-20.0, z) == -1);
  CHECK(count_N(100.0, z) == 29);
  int prev = 0;
  for (double t = 0.0; t <= 100.0; t += 0.25) {
    const int n = count_N(t, z);
    CHECK(n >= prev);
    CHECK(count_N(-t, z) == -n);
    prev = n;
  }
  CHECK_THROWS_AS(count_N(100.5, z), OutOfRangeError);
  CHECK_THROWS_AS(count_N(-101.0, z), OutOfRangeError);
}

TEST_CASE("tail_bounds") {
  CHECK(tail_bounds(100.0).sum_inv_imsq == doctest::Approx(0.014657).epsilon(1e-4));
  CHECK(tail_bounds(1000.0).sum_inv_imsq == doctest::Approx(0.0021986).epsilon(1e-4));
  CHECK(tail_bounds(1000.0).count_density == doctest::Approx(theta_exact(1000.0) / kPi));
  CHECK_THROWS_AS(tail_bounds(50.0), DomainError);
  // Empirical: sum over 100 < t_n <= 1000 of 2/t_n^2 vs the leading-term difference.
  const ZeroTable z = scan_zeros(1000.0);
  double sum = 0.0;
  for (double t : z.ordinates)
    if (t > 100.0) sum += 2.0 / (t * t);
  const double lead = tail_bounds(100.0).sum_inv_imsq - tail_bounds(1000.0).sum_inv_imsq;
  CHECK(sum <= 3.0 * lead);
  CHECK(sum >= lead / 3.0);
}

TEST_CASE("zeros CSV round trip and hash check") {
  const auto dir = scratch("zeros_csv");
  const ZeroTable z = scan_zeros(100.0);
  save_zeros_csv(dir / "zeros.csv", z, "abc123");
  CHECK(first_line(dir / "zeros.csv", 1) == "index,t,bracket_lo,bracket_hi");
  ZeroTable back;
  REQUIRE(load_zeros_csv(dir / "zeros.csv", "abc123", back));
  REQUIRE(back.ordinates.size() == z.ordinates.size());
  for (std::size_t i = 0; i < z.ordinates.size(); ++i) CHECK(back.ordinates[i] == z.ordinates[i]);
  CHECK(back.count_consistent);
  ZeroTable other;
  CHECK_FALSE(load_zeros_csv(dir / "zeros.csv", "different", other));
  CHECK_FALSE(load_zeros_csv(dir / "missing.csv", "abc123", other));
  // Deterministic output.
  save_zeros_csv(dir / "zeros2.csv", z, "abc123");
  std::ifstream a(dir / "zeros.csv"), b(dir / "zeros2.csv");
  CHECK(std::string(std::istreambuf_iterator<char>(a), {}) == std::string(std::istreambuf_iterator<char>(b), {}));
}

TEST_CASE("critical-line cache") {
  const ZeroTable z = scan_zeros(100.0);
  const CriticalLineCache c = CriticalLineCache::build(z, 100.0);
  CHECK(c.build_tol() < 1e-7);
  const auto& u = c.grid_u();
  for (std::size_t i = 1; i < u.size(); ++i) CHECK(u[i] > u[i - 1]);
  for (double g : u) CHECK(c.exclusion_at(g) == nullptr);
  REQUIRE(c.exclusions().size() == 29);
  for (const auto& e : c.exclusions()) {
    int inside = 0;
    for (double t : z.ordinates) inside += (t >= e.lo && t <= e.hi) ? 1 : 0;
    CHECK(inside == 1);
  }
  // Interpolation and the singular sampler against direct evaluation.
  for (double v : {0.123, 3.3337, 17.5, 49.99, 77.7, 99.3}) {
    CAPTURE(v);
    CHECK(std::abs(c.interpolate(v) - log_abs_zeta_half_direct(v)) < 1e-7);
  }
  const double t1 = z.ordinates[0];
  // Near the ordinate the removed logarithm log|u - t1| inherits the
  // ordinate's bracket uncertainty, an error of at most refine_tol / |u - t1|.
  for (double d : {1e-6, 1e-3, 0.02, -0.04}) {
    CAPTURE(d);
    CHECK(std::abs(c.sample(t1 + d) - log_abs_zeta_half_direct(t1 + d)) < 1e-7 + kDefaultRefineTol / std::abs(d));
  }
  CHECK_THROWS_AS(c.interpolate(t1), SingularityError);
  CHECK_THROWS_AS(c.interpolate(150.0), OutOfRangeError);
  CHECK(c.zero_ordinates().size() == 29);
}

TEST_CASE("critical-line cache persistence") {
  const auto dir = scratch("line_cache");
  const ZeroTable z = scan_zeros(100.0);
  const CriticalLineCache c = CriticalLineCache::build(z, 100.0);
  c.save(dir, "h1");
  CHECK(first_line(dir / "line_samples.csv", 1) == "u,log_abs_zeta");
  CHECK(first_line(dir / "line_exclusions.csv", 1) == "lo,hi,zero_ordinate");
  CriticalLineCache back;
  REQUIRE(CriticalLineCache::load(dir, "h1", back));
  CHECK(back.grid_u().size() == c.grid_u().size());
  for (double v : {2.5, 14.134725141734693790 + 0.01, 60.0}) CHECK(std::abs(back.sample(v) - c.sample(v)) < 1e-12);
  CriticalLineCache other;
  CHECK_FALSE(CriticalLineCache::load(dir, "h2", other));
}
