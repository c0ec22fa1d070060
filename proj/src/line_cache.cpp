#include "critline/line_cache.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>

#include "critline/zeta.hpp"
#include "parallel.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kStencil = 6;
constexpr int kChebNodes = 16;
constexpr double kDeflationReach = 1.0;
constexpr std::size_t kSpotChecks = 2000;

double cheb_node(int j) { return std::cos(kPi * (j + 0.5) / kChebNodes); }

bool read_hash_line(std::ifstream& in, const std::string& key, std::string& hash_out,
                    std::string& rest) {
  std::string line;
  if (!std::getline(in, line)) return false;
  const std::string prefix = "# config=";
  if (line.rfind(prefix, 0) != 0) return false;
  const auto sp = line.find(' ', prefix.size());
  hash_out = line.substr(prefix.size(), sp == std::string::npos ? std::string::npos
                                                                 : sp - prefix.size());
  rest = sp == std::string::npos ? "" : line.substr(sp + 1);
  std::string header;
  return std::getline(in, header) && header == key;
}

}  // namespace

std::vector<double> CriticalLineCache::window_zeros(double lo, double hi) const {
  const auto first = std::lower_bound(zeros_.begin(), zeros_.end(), lo - kDeflationReach);
  const auto last = std::upper_bound(zeros_.begin(), zeros_.end(), hi + kDeflationReach);
  return {first, last};
}

double CriticalLineCache::deflation(double u, const std::vector<double>& window) const {
  double s = 0.0;
  for (double t : window) s += std::log(std::abs(u - t));
  return s;
}

const Exclusion* CriticalLineCache::exclusion_at(double u) const {
  const double a = std::abs(u);
  auto it = std::upper_bound(excl_.begin(), excl_.end(), a,
                             [](double x, const Exclusion& e) { return x < e.lo; });
  if (it == excl_.begin()) return nullptr;
  --it;
  return (a >= it->lo && a <= it->hi) ? &*it : nullptr;
}

std::vector<double> CriticalLineCache::zero_ordinates() const {
  std::vector<double> out;
  out.reserve(excl_.size());
  for (const auto& e : excl_) out.push_back(e.zero);
  return out;
}

double CriticalLineCache::interpolate(double u) const {
  const double a = std::abs(u);
  if (!(a <= height_ * (1.0 + 1e-15))) throw OutOfRangeError("line cache: |u| beyond height");
  if (const Exclusion* e = exclusion_at(a)) throw SingularityError(u, e->zero);
  const std::size_t n = u_.size();
  const std::size_t idx = static_cast<std::size_t>(std::lower_bound(u_.begin(), u_.end(), a) - u_.begin());
  std::size_t start = idx >= kStencil / 2 ? idx - kStencil / 2 : 0;
  if (start + kStencil > n) start = n - kStencil;
  const std::vector<double> window = window_zeros(u_[start], u_[start + kStencil - 1]);

  double value = 0.0;
  for (int j = 0; j < kStencil; ++j) {
    const double uj = u_[start + j];
    if (uj == a) return v_[start + j];
    double basis = 1.0;
    for (int m = 0; m < kStencil; ++m) {
      if (m != j) basis *= (a - u_[start + m]) / (uj - u_[start + m]);
    }
    value += basis * (v_[start + j] - deflation(uj, window));
  }
  return value + deflation(a, window);
}

double CriticalLineCache::cheb_eval(std::size_t k, double u) const {
  const Exclusion& e = excl_[k];
  const double mid = 0.5 * (e.lo + e.hi);
  const double half = 0.5 * (e.hi - e.lo);
  const double x = (u - mid) / half;
  double num = 0.0;
  double den = 0.0;
  for (int j = 0; j < kChebNodes; ++j) {
    const double xj = cheb_node(j);
    if (x == xj) return cheb_[k].values[j];
    const double w = ((j % 2 == 0) ? 1.0 : -1.0) * std::sin(kPi * (j + 0.5) / kChebNodes);
    const double c = w / (x - xj);
    num += c * cheb_[k].values[j];
    den += c;
  }
  return num / den;
}

double CriticalLineCache::sample(double u) const {
  const double a = std::abs(u);
  if (const Exclusion* e = exclusion_at(a)) {
    const std::size_t k = static_cast<std::size_t>(e - excl_.data());
    return deflation(a, cheb_[k].window) + cheb_eval(k, a);
  }
  return interpolate(a);
}

void CriticalLineCache::finish_setup() {
  // Chebyshev representation of the deflated function in each exclusion.
  cheb_.assign(excl_.size(), {});
  std::vector<double> nodes;
  nodes.reserve(excl_.size() * kChebNodes);
  for (std::size_t k = 0; k < excl_.size(); ++k) {
    const Exclusion& e = excl_[k];
    cheb_[k].window = window_zeros(e.lo, e.hi);
    for (int j = 0; j < kChebNodes; ++j) {
      nodes.push_back(0.5 * (e.lo + e.hi) + 0.5 * (e.hi - e.lo) * cheb_node(j));
    }
  }
  const std::vector<double> raw =
      detail::parallel_map(nodes, [](double u) { return log_abs_zeta_half_direct(u); });
  for (std::size_t k = 0; k < excl_.size(); ++k) {
    cheb_[k].values.resize(kChebNodes);
    for (int j = 0; j < kChebNodes; ++j) {
      const double uj = nodes[k * kChebNodes + j];
      cheb_[k].values[j] = raw[k * kChebNodes + j] - deflation(uj, cheb_[k].window);
    }
  }

  // Spot checks at cell midpoints and inside exclusions.
  std::vector<double> probes;
  const std::size_t cells = u_.size() > 1 ? u_.size() - 1 : 0;
  const std::size_t stride = std::max<std::size_t>(1, cells / kSpotChecks);
  for (std::size_t i = stride / 2; i < cells; i += stride) {
    if (u_[i + 1] - u_[i] < 1.5 * spacing_) probes.push_back(0.5 * (u_[i] + u_[i + 1]));
  }
  const std::size_t estride = std::max<std::size_t>(1, excl_.size() / 200);
  for (std::size_t k = 0; k < excl_.size(); k += estride) {
    const Exclusion& e = excl_[k];
    probes.push_back(e.lo + 0.13 * (e.hi - e.lo));
    probes.push_back(e.lo + 0.71 * (e.hi - e.lo));
  }
  const std::vector<double> exact =
      detail::parallel_map(probes, [](double u) { return log_abs_zeta_half_direct(u); });
  double worst = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    worst = std::max(worst, std::abs(sample(probes[i]) - exact[i]));
  }
  build_tol_ = std::max(1e-13, 2.0 * worst);
}

CriticalLineCache CriticalLineCache::build(const ZeroTable& zeros, double height, double spacing,
                                           double radius) {
  if (!(height > 0.0) || height > zeros.height * (1.0 + 1e-12)) {
    throw DomainError("line cache: height must be in (0, zero table height]");
  }
  if (!(spacing > 0.0) || !(radius > 0.0)) throw DomainError("line cache: bad spacing/radius");
  CriticalLineCache c;
  c.height_ = height;
  c.spacing_ = spacing;
  c.radius_ = radius;
  const auto& z = zeros.ordinates;
  for (std::size_t i = 0; i < z.size() && z[i] - radius <= height; ++i) {
    double gap = std::numeric_limits<double>::infinity();
    if (i > 0) gap = std::min(gap, z[i] - z[i - 1]);
    if (i + 1 < z.size()) gap = std::min(gap, z[i + 1] - z[i]);
    const double r = std::min(radius, 0.4 * gap);
    c.excl_.push_back({z[i] - r, z[i] + r, z[i]});
    c.zeros_.push_back(z[i]);
  }

  const auto count = static_cast<std::size_t>(std::floor(height / spacing + 1e-9));
  std::vector<double> grid;
  grid.reserve(count + 2);
  std::size_t e = 0;
  for (std::size_t k = 0; k <= count; ++k) {
    const double u = static_cast<double>(k) * spacing;
    while (e < c.excl_.size() && c.excl_[e].hi < u) ++e;
    if (e < c.excl_.size() && u >= c.excl_[e].lo) continue;
    grid.push_back(u);
  }
  if (grid.back() < height && !c.exclusion_at(height)) grid.push_back(height);
  if (grid.size() < static_cast<std::size_t>(kStencil)) {
    throw DomainError("line cache: height too small for the interpolation stencil");
  }
  c.u_ = grid;
  c.v_ = detail::parallel_map(grid, [](double u) { return log_abs_zeta_half_direct(u); });
  c.finish_setup();
  return c;
}

void CriticalLineCache::save(const std::filesystem::path& dir,
                             const std::string& config_hash) const {
  char buf[128];
  {
    std::ofstream out(dir / "line_samples.csv");
    if (!out) throw std::runtime_error("cannot write line_samples.csv");
    std::snprintf(buf, sizeof buf, "# config=%s height=%.17g spacing=%.17g radius=%.17g\n",
                  config_hash.c_str(), height_, spacing_, radius_);
    out << buf << "u,log_abs_zeta\n";
    for (std::size_t i = 0; i < u_.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", u_[i], v_[i]);
      out << buf;
    }
  }
  std::ofstream out(dir / "line_exclusions.csv");
  if (!out) throw std::runtime_error("cannot write line_exclusions.csv");
  out << "# config=" << config_hash << "\n" << "lo,hi,zero_ordinate\n";
  for (const auto& e : excl_) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", e.lo, e.hi, e.zero);
    out << buf;
  }
}

bool CriticalLineCache::load(const std::filesystem::path& dir, const std::string& config_hash,
                             CriticalLineCache& out) {
  std::ifstream in(dir / "line_samples.csv");
  std::ifstream ex(dir / "line_exclusions.csv");
  if (!in || !ex) return false;
  std::string hash;
  std::string rest;
  if (!read_hash_line(in, "u,log_abs_zeta", hash, rest) || hash != config_hash) return false;
  CriticalLineCache c;
  if (std::sscanf(rest.c_str(), "height=%lf spacing=%lf radius=%lf", &c.height_, &c.spacing_,
                  &c.radius_) != 3)
    return false;
  std::string line;
  while (std::getline(in, line)) {
    double u = 0.0;
    double v = 0.0;
    if (line.empty()) continue;
    if (std::sscanf(line.c_str(), "%lf,%lf", &u, &v) != 2) return false;
    c.u_.push_back(u);
    c.v_.push_back(v);
  }
  if (!read_hash_line(ex, "lo,hi,zero_ordinate", hash, rest) || hash != config_hash) return false;
  while (std::getline(ex, line)) {
    Exclusion e;
    if (line.empty()) continue;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &e.lo, &e.hi, &e.zero) != 3) return false;
    c.excl_.push_back(e);
    c.zeros_.push_back(e.zero);
  }
  if (c.u_.size() < static_cast<std::size_t>(kStencil) ||
      !std::is_sorted(c.u_.begin(), c.u_.end()))
    return false;
  c.finish_setup();
  out = std::move(c);
  return true;
}

double log_abs_zeta_half(double u, double cache_tol, const CriticalLineCache& cache) {
  if (const Exclusion* e = cache.exclusion_at(u)) throw SingularityError(u, e->zero);
  if (std::abs(u) <= cache.height() && cache.build_tol() <= cache_tol) {
    return cache.interpolate(u);
  }
  return log_abs_zeta_half_direct(std::abs(u));
}

}  // namespace critline
