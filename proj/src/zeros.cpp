#include "critline/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "critline/special_fn.hpp"
#include "critline/zeta.hpp"
#include "parallel.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;

struct Refined {
  double t;
  ZeroBracket bracket;
};

Refined bisect(double lo, double hi, double zlo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double zm = hardy_Z(mid);
    if (zm == 0.0) return {mid, {mid, mid}};
    if ((zm < 0.0) == (zlo < 0.0)) {
      lo = mid;
      zlo = zm;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), {lo, hi}};
}

ZeroTable scan_once(double T, double step, double refine_tol) {
  const std::size_t n = static_cast<std::size_t>(std::ceil(T / step));
  std::vector<double> grid(n + 1);
  for (std::size_t i = 0; i <= n; ++i) grid[i] = std::min(T, static_cast<double>(i) * step);
  std::vector<double> z = detail::parallel_map(grid, [](double t) { return hardy_Z(t); });

  ZeroTable table;
  table.height = T;
  table.scan_step = step;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (z[i] == 0.0 && grid[i] > 0.0) {
      table.ordinates.push_back(grid[i]);
      table.brackets.push_back({grid[i], grid[i]});
      continue;
    }
    if (z[i] * z[i + 1] < 0.0) {
      const Refined r = bisect(grid[i], grid[i + 1], z[i], refine_tol);
      table.ordinates.push_back(r.t);
      table.brackets.push_back(r.bracket);
    }
  }
  table.count_consistent =
      static_cast<int>(table.ordinates.size()) == expected_zero_count(T);
  if (!table.count_consistent) {
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
      const bool same_sign = (z[i - 1] > 0) == (z[i] > 0) && (z[i] > 0) == (z[i + 1] > 0);
      if (same_sign && std::abs(z[i]) < std::abs(z[i - 1]) && std::abs(z[i]) < std::abs(z[i + 1])) {
        table.gaps.emplace_back(grid[i - 1], grid[i + 1]);
      }
    }
  }
  return table;
}

}  // namespace

int expected_zero_count(double T) {
  return static_cast<int>(std::lround(theta_exact(T) / kPi + 1.0));
}

ZeroTable scan_zeros_unchecked(double T, double step, double refine_tol) {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("scan_zeros: requires T > 0");
  if (!(step > 0.0 && step <= 0.1)) throw DomainError("scan_zeros: requires 0 < step <= 0.1");
  if (!(refine_tol > 0.0)) throw DomainError("scan_zeros: requires refine_tol > 0");
  ZeroTable table = scan_once(T, step, refine_tol);
  for (int retry = 0; retry < 3 && !table.count_consistent; ++retry) {
    step *= 0.5;
    ZeroTable finer = scan_once(T, step, refine_tol);
    const bool found_more = finer.ordinates.size() > table.ordinates.size();
    table = std::move(finer);
    // Halving cannot help when the grid already resolves every sign change
    // and the certificate is off only because S(T) rounds the other way.
    if (!found_more && table.gaps.empty()) break;
  }
  return table;
}

ZeroTable scan_zeros(double T, double step, double refine_tol) {
  if (!(T > 15.0)) throw DomainError("scan_zeros: requires T > 15");
  return scan_zeros_unchecked(T, step, refine_tol);
}

int count_N(double t, const ZeroTable& table) {
  if (!std::isfinite(t) || std::abs(t) > table.height) {
    throw OutOfRangeError("count_N: |t| exceeds the table height");
  }
  const double a = std::abs(t);
  const auto it = std::upper_bound(table.ordinates.begin(), table.ordinates.end(), a);
  const int n = static_cast<int>(it - table.ordinates.begin());
  return t < 0.0 ? -n : n;
}

TailBounds tail_bounds(double T) {
  if (!(T >= 100.0) || !std::isfinite(T)) throw DomainError("tail_bounds: requires T >= 100");
  return {std::log(T) / (kPi * T), theta_exact(T) / kPi};
}

void save_zeros_csv(const std::filesystem::path& path, const ZeroTable& table,
                    const std::string& config_hash) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  char buf[160];
  std::snprintf(buf, sizeof buf, "# config=%s height=%.17g step=%.17g\n", config_hash.c_str(),
                table.height, table.scan_step);
  out << buf << "index,t,bracket_lo,bracket_hi\n";
  for (std::size_t i = 0; i < table.ordinates.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", i + 1, table.ordinates[i],
                  table.brackets[i].lo, table.brackets[i].hi);
    out << buf;
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

bool load_zeros_csv(const std::filesystem::path& path, const std::string& config_hash,
                    ZeroTable& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line)) return false;
  char hash[128] = {0};
  double height = 0.0;
  double step = 0.0;
  if (std::sscanf(line.c_str(), "# config=%127s height=%lf step=%lf", hash, &height, &step) != 3)
    return false;
  if (config_hash != hash) return false;
  if (!std::getline(in, line) || line != "index,t,bracket_lo,bracket_hi") return false;

  ZeroTable table;
  table.height = height;
  table.scan_step = step;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t idx = 0;
    double t = 0.0;
    ZeroBracket b;
    if (std::sscanf(line.c_str(), "%zu,%lf,%lf,%lf", &idx, &t, &b.lo, &b.hi) != 4) return false;
    if (!(b.lo <= t && t <= b.hi)) return false;
    if (b.lo < b.hi && !(hardy_Z(b.lo) * hardy_Z(b.hi) < 0.0)) return false;
    table.ordinates.push_back(t);
    table.brackets.push_back(b);
  }
  if (!std::is_sorted(table.ordinates.begin(), table.ordinates.end())) return false;
  table.count_consistent =
      static_cast<int>(table.ordinates.size()) == expected_zero_count(height);
  out = std::move(table);
  return true;
}

}  // namespace critline
