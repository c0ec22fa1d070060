#include "critline/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace critline {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr int kMaxTanhSinhLevel = 9;
constexpr std::size_t kMaxPanelEvaluations = 400000;

struct GaussKronrod21 {
  std::array<double, 11> xk{};
  std::array<double, 11> wk{};
  std::array<double, 5> wg{};
  GaussKronrod21() {
    const auto& a = boost::math::quadrature::gauss_kronrod<double, 21>::abscissa();
    const auto& w = boost::math::quadrature::gauss_kronrod<double, 21>::weights();
    const auto& g = boost::math::quadrature::gauss<double, 10>::weights();
    std::copy(a.begin(), a.end(), xk.begin());
    std::copy(w.begin(), w.end(), wk.begin());
    std::copy(g.begin(), g.end(), wg.begin());
  }
};

const GaussKronrod21& gk21() {
  static const GaussKronrod21 rule;
  return rule;
}

template <class T>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  bool sing_left = false;
  bool sing_right = false;
  int depth = 0;
  T value{};
  double err = 0.0;
};

template <class T, class F>
void eval_gauss_kronrod(const F& f, Panel<T>& p) {
  const auto& r = gk21();
  const double c = 0.5 * (p.a + p.b);
  const double h = 0.5 * (p.b - p.a);
  const T fc = f(c);
  T resk = r.wk[0] * fc;
  T resg{};
  double resabs = r.wk[0] * std::abs(fc);
  std::array<T, 10> f1{};
  std::array<T, 10> f2{};
  for (int i = 1; i <= 10; ++i) {
    const double dx = h * r.xk[i];
    f1[i - 1] = f(c - dx);
    f2[i - 1] = f(c + dx);
    const T pair = f1[i - 1] + f2[i - 1];
    resk += r.wk[i] * pair;
    if (i % 2 == 1) resg += r.wg[(i - 1) / 2] * pair;
    resabs += r.wk[i] * (std::abs(f1[i - 1]) + std::abs(f2[i - 1]));
  }
  const T mean = 0.5 * resk;
  double resasc = r.wk[0] * std::abs(fc - mean);
  for (int i = 1; i <= 10; ++i) {
    resasc += r.wk[i] * (std::abs(f1[i - 1] - mean) + std::abs(f2[i - 1] - mean));
  }
  p.value = resk * h;
  double err = std::abs((resk - resg) * h);
  resasc *= std::abs(h);
  resabs *= std::abs(h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  p.err = err;
}

// Tanh-sinh on [a, b]; nodes are placed by their distance to the nearer
// endpoint so that no node rounds onto a singular endpoint.
template <class T, class F>
void eval_tanh_sinh(const F& f, Panel<T>& p, double tol) {
  const double half = 0.5 * (p.b - p.a);
  const double c = 0.5 * (p.a + p.b);
  const double end_scale = std::max(std::abs(p.a), std::abs(p.b));
  T sum = kHalfPi * f(c);
  double h = 1.0;
  T prev{};
  bool have_prev = false;
  T est{};
  double diff = std::numeric_limits<double>::infinity();

  auto add_nodes = [&](double hh, int k0, int kstep) {
    T part{};
    for (int k = k0;; k += kstep) {
      const double t = k * hh;
      const double u = kHalfPi * std::sinh(t);
      const double ch = std::cosh(u);
      const double w = kHalfPi * std::cosh(t) / (ch * ch);
      const double dist = half * 2.0 / (std::exp(2.0 * u) + 1.0);
      if (!(w > 1e-18) || dist <= 0.5 * kEps * end_scale) break;
      const double xl = p.a + dist;
      const double xr = p.b - dist;
      if (xl > p.a && xl < p.b) part += w * f(xl);
      if (xr > p.a && xr < p.b) part += w * f(xr);
    }
    return part;
  };

  sum += add_nodes(h, 1, 1);
  for (int level = 0; level <= kMaxTanhSinhLevel; ++level) {
    if (level > 0) {
      h *= 0.5;
      sum += add_nodes(h, 1, 2);
    }
    est = half * h * sum;
    if (have_prev) {
      diff = std::abs(est - prev);
      if (level >= 3 && diff <= std::max(tol, 1e-14 * std::abs(est))) break;
    }
    prev = est;
    have_prev = true;
  }
  p.value = est;
  p.err = std::max(diff, 4.0 * kEps * std::abs(est));
}

template <class T, class F>
void eval_panel(const F& f, Panel<T>& p, double tol) {
  if (p.sing_left || p.sing_right) {
    eval_tanh_sinh(f, p, tol);
  } else {
    eval_gauss_kronrod(f, p);
  }
}

std::vector<double> collect_points(double a, double b, const PanelLayout& layout) {
  std::vector<double> pts{a, b};
  for (double s : layout.singular)
    if (s > a && s < b) pts.push_back(s);
  for (double s : layout.breaks)
    if (s > a && s < b) pts.push_back(s);
  std::sort(pts.begin(), pts.end());
  const double merge = 8.0 * kEps * std::max(std::abs(a), std::abs(b));
  std::vector<double> out;
  for (double x : pts) {
    if (out.empty() || x - out.back() > merge) out.push_back(x);
  }
  if (out.back() != b) out.back() = b;
  return out;
}

bool is_singular(double x, const PanelLayout& layout) {
  for (double s : layout.singular) {
    if (std::abs(s - x) <= 8.0 * kEps * std::max(1.0, std::abs(x))) return true;
  }
  return false;
}

template <class T, class F>
QuadResult<T> integrate_impl(const F& f, double a, double b, const PanelLayout& layout,
                             double abs_tol, double rel_tol, int max_depth) {
  if (!(b >= a)) throw DomainError("integrate: requires b >= a");
  if (a == b) return {};
  const std::vector<double> pts = collect_points(a, b, layout);
  const double width = b - a;

  std::vector<Panel<T>> heap;
  std::vector<Panel<T>> done;
  std::size_t evaluations = 0;
  auto panel_tol = [&](const Panel<T>& p) {
    return 0.1 * abs_tol * (p.b - p.a) / width;
  };
  auto cmp = [](const Panel<T>& x, const Panel<T>& y) { return x.err < y.err; };

  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i];
    const double hi = pts[i + 1];
    const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / layout.max_panel)));
    const bool sl = is_singular(lo, layout);
    const bool sr = is_singular(hi, layout);
    for (int k = 0; k < pieces; ++k) {
      Panel<T> p;
      p.a = lo + (hi - lo) * k / pieces;
      p.b = (k + 1 == pieces) ? hi : lo + (hi - lo) * (k + 1) / pieces;
      p.sing_left = sl && k == 0;
      p.sing_right = sr && k + 1 == pieces;
      eval_panel(f, p, panel_tol(p));
      ++evaluations;
      heap.push_back(p);
    }
  }
  std::make_heap(heap.begin(), heap.end(), cmp);

  auto totals = [&](T& value, double& err) {
    value = T{};
    err = 0.0;
    for (const auto& p : heap) {
      value += p.value;
      err += p.err;
    }
    for (const auto& p : done) {
      value += p.value;
      err += p.err;
    }
  };

  T value{};
  double err = 0.0;
  totals(value, err);
  std::size_t since_recount = 0;
  while (err > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (heap.empty() || evaluations > kMaxPanelEvaluations) {
      throw QuadratureError("integrate: tolerance not reached", ComplexValue(value), err);
    }
    std::pop_heap(heap.begin(), heap.end(), cmp);
    Panel<T> worst = heap.back();
    heap.pop_back();
    if (worst.depth >= max_depth) {
      done.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      done.push_back(worst);
      continue;
    }
    Panel<T> left{worst.a, mid, worst.sing_left, false, worst.depth + 1, {}, 0.0};
    Panel<T> right{mid, worst.b, false, worst.sing_right, worst.depth + 1, {}, 0.0};
    eval_panel(f, left, panel_tol(left));
    eval_panel(f, right, panel_tol(right));
    evaluations += 2;
    value += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), cmp);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), cmp);
    if (++since_recount == 512) {
      totals(value, err);
      since_recount = 0;
    }
  }
  totals(value, err);
  return {value, err};
}

template <class T, class F>
QuadResult<T> to_infinity_impl(const F& f, double a, double abs_tol, double rel_tol) {
  if (!(a > 0.0)) throw DomainError("integrate_to_infinity: requires a > 0");
  auto g = [&](double w) -> T {
    if (w < 1e-250) return T{};
    const double u = a / w;
    return f(u) * (a / (w * w));
  };
  PanelLayout layout;
  layout.singular = {0.0};
  layout.max_panel = 0.25;
  return integrate_impl<T>(g, 0.0, 1.0, layout, abs_tol, rel_tol, 40);
}

template <class T, class F>
HalflineResult<T> halfline_impl(const F& f, const QuadratureSpec& spec,
                                const std::vector<double>& singularities, double omega,
                                const std::vector<double>& jumps) {
  const double T_end = spec.truncation_T;
  if (!(T_end > 0.0)) throw DomainError("integrate_halfline: truncation_T must be positive");
  PanelLayout layout;
  for (double s : singularities) {
    if (s < 0.0 || s > T_end + spec.sing_radius) continue;
    layout.singular.push_back(s);
    layout.breaks.push_back(s - spec.sing_radius);
    layout.breaks.push_back(s + spec.sing_radius);
  }
  layout.breaks.insert(layout.breaks.end(), jumps.begin(), jumps.end());
  const bool osc = spec.osc_split && omega > 0.0;
  if (osc) {
    const double period = std::numbers::pi / omega;
    const auto kmax = static_cast<long>(std::floor(T_end / period));
    for (long k = 1; k <= kmax; ++k) layout.breaks.push_back(k * period);
    layout.max_panel = std::min(layout.max_panel, period);
  }
  HalflineResult<T> out;
  const QuadResult<T> r =
      integrate_impl<T>(f, 0.0, T_end, layout, spec.abs_tol, spec.rel_tol, spec.max_depth);
  out.value = r.value;
  out.err_est = r.err_est;
  if (osc) {
    const double period = std::numbers::pi / omega;
    const double lo = std::max(0.0, T_end - period);
    const QuadResult<T> last =
        integrate_impl<T>(f, lo, T_end, layout, spec.abs_tol, spec.rel_tol, spec.max_depth);
    out.last_half_period = std::abs(last.value);
  }
  return out;
}

}  // namespace

QuadResult<double> integrate(const RealIntegrand& f, double a, double b, const PanelLayout& layout,
                             double abs_tol, double rel_tol, int max_depth) {
  return integrate_impl<double>(f, a, b, layout, abs_tol, rel_tol, max_depth);
}

QuadResult<ComplexValue> integrate(const ComplexIntegrand& f, double a, double b,
                                   const PanelLayout& layout, double abs_tol, double rel_tol,
                                   int max_depth) {
  return integrate_impl<ComplexValue>(f, a, b, layout, abs_tol, rel_tol, max_depth);
}

QuadResult<double> integrate_to_infinity(const RealIntegrand& f, double a, double abs_tol,
                                         double rel_tol) {
  return to_infinity_impl<double>(f, a, abs_tol, rel_tol);
}

QuadResult<ComplexValue> integrate_to_infinity(const ComplexIntegrand& f, double a,
                                               double abs_tol, double rel_tol) {
  return to_infinity_impl<ComplexValue>(f, a, abs_tol, rel_tol);
}

HalflineResult<double> integrate_halfline(const RealIntegrand& f, const QuadratureSpec& spec,
                                          const std::vector<double>& singularities, double omega,
                                          const std::vector<double>& jumps) {
  return halfline_impl<double>(f, spec, singularities, omega, jumps);
}

HalflineResult<ComplexValue> integrate_halfline(const ComplexIntegrand& f,
                                                const QuadratureSpec& spec,
                                                const std::vector<double>& singularities,
                                                double omega, const std::vector<double>& jumps) {
  return halfline_impl<ComplexValue>(f, spec, singularities, omega, jumps);
}

}  // namespace critline
