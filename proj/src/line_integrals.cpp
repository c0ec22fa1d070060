#include "critline/line_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "critline/special_fn.hpp"
#include "critline/zeta.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThetaExactLimit = 1e4;
constexpr double kMidGapDistance = 0.1;

void check_truncation(const QuadratureSpec& spec, double height, const char* what) {
  if (!(spec.truncation_T > 0.0) || spec.truncation_T > height * (1.0 + 1e-12)) {
    throw DomainError(std::string(what) + ": truncation_T must lie in (0, table height]");
  }
}

void check_half_plane(ComplexValue s, const char* what) {
  if (!is_finite(s) || !(s.real() > 0.5)) throw DomainError(std::string(what) + ": requires Re(s) > 1/2");
}

std::vector<double> upto(const std::vector<double>& z, double T) {
  return {z.begin(), std::upper_bound(z.begin(), z.end(), T)};
}

// Remainder estimates beyond T (see the header).
double logzeta_tail(double A, double p, double T) {
  return 2.0 * A * std::pow(T, 1.0 - p) * (std::log(T) / (p - 1.0) + 1.0 / ((p - 1.0) * (p - 1.0)));
}
double counting_tail(double A, double T) { return A * std::log(T) / T; }

// sup_{u >= T} u^2 |w(u)| for weights that behave like c / u^2 at infinity,
// sampled on a geometric grid.
double sup_u2(const std::function<double(double)>& absw, double T) {
  double best = 0.0;
  for (double u = T; u < T * 1e6; u *= 1.5) best = std::max(best, u * u * absw(u));
  return best;
}

// |exp(w) - 1| <= |w| e^{|w|}.
double exp_tail(double value_abs, double exponent_err) {
  return value_abs * exponent_err * std::exp(exponent_err);
}

// Breakpoints near the real projection of the K_C pole u^2 = -(s - 1/2)^2.
std::vector<double> kc_breaks(ComplexValue s) {
  const ComplexValue u0 = std::sqrt(-(s - 0.5) * (s - 0.5));
  const double re = std::abs(u0.real());
  const double im = std::max(std::abs(u0.imag()), 1e-3);
  if (re == 0.0) return {};
  return {std::max(0.0, re - 4.0 * im), std::max(0.0, re - im), re, re + im, re + 4.0 * im};
}

// int_lo^inf f: finite part up to `mid` with the given layout, reciprocal
// map beyond.
template <class T, class F>
QuadResult<T> integrate_semi_infinite(const F& f, double lo, double mid, PanelLayout layout,
                                      double abs_tol, double rel_tol) {
  const auto a = integrate(f, lo, mid, layout, abs_tol, rel_tol);
  const auto b = integrate_to_infinity(f, mid, abs_tol, rel_tol);
  return {a.value + b.value, a.err_est + b.err_est};
}

// Asymptotic theta series through t^-5; the first omitted term is 127/(430080 t^7).
double theta_series(double t) {
  const double t2 = t * t;
  return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
         7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t * t2 * t2);
}

ReportEntry sign_entry(std::string id, double value, bool ok, double seconds, std::string note) {
  // lhs carries the size of the violation (0 when the sign condition holds).
  const double violation = ok ? 0.0 : std::max(std::abs(value), std::numeric_limits<double>::min());
  return make_entry(std::move(id), violation, 0.0, 0.0, 0.0, seconds, std::move(note));
}

std::string fmt(double v) { return format_value(ComplexValue(v)); }

}  // namespace

ComplexValue kernel_KC(ComplexValue s, double u) {
  const ComplexValue a = s - 0.5;
  return (2.0 / kPi) * s * (s - 1.0) * u / ((u * u + a * a) * (u * u + 0.25));
}

double theta_for_quadrature(double u) {
  return std::abs(u) <= kThetaExactLimit ? theta_exact(u) : std::copysign(theta_series(std::abs(u)), u);
}

double counting_remainder(double u, const ZeroTable& zeros) {
  return kPi * count_N(u, zeros) - theta_for_quadrature(u) - 2.0 * std::atan(2.0 * u);
}

// ---------------------------------------------------------------------------
// Closed-form battery

std::vector<ReportEntry> closed_form_battery(double tol) {
  constexpr double kAbs = 1e-13;
  constexpr double kRel = 1e-13;
  const double re_parts[5] = {0.7, 1.0, 1.5, 2.0, 3.0};
  const double im_parts[4] = {0.0, 0.5, -2.0, 5.0};
  const double alphas[4] = {0.0, 1.0, 5.0, 14.13};
  const double as[4] = {0.5, 1.0, 2.5, 7.0};
  const double us[4] = {0.5, 3.0, 10.0, 25.0};
  std::vector<ReportEntry> out;
  int j = 0;
  for (double re : re_parts) {
    for (double im : im_parts) {
      const ComplexValue s(re, im);
      const double alpha = alphas[(j + j / 4) % 4];
      const double a = as[(j + 1 + j / 4) % 4];
      const double u = us[(j + 2 + j / 4) % 4];
      ++j;
      const std::string at = "@s=" + format_value(s);
      PanelLayout layout;
      layout.breaks = kc_breaks(s);
      const double mid = 60.0 + 2.0 * std::abs(s);

      {
        Stopwatch sw;
        auto f = [&](double v) { return kernel_KC(s, v); };
        const auto I = integrate_semi_infinite<ComplexValue>(ComplexIntegrand(f), alpha, alpha + mid,
                                                             layout, kAbs, kRel);
        const ComplexValue lhs = std::exp(kPi * I.value);
        const ComplexValue rhs = (1.0 - s / ComplexValue(0.5, alpha)) * (1.0 - s / ComplexValue(0.5, -alpha));
        out.push_back(make_entry("kernels.quadfactor" + at + ",alpha=" + fmt(alpha), lhs, rhs, tol, 0.0,
                                 sw.seconds()));
      }
      {
        Stopwatch sw;
        auto f = [&](double v) { return std::atan(v / a) * kernel_KC(s, v); };
        const auto I = integrate_semi_infinite<ComplexValue>(ComplexIntegrand(f), 0.0, mid, layout,
                                                             kAbs, kRel);
        const ComplexValue lhs = std::exp(I.value);
        const ComplexValue rhs = 1.0 + (s - 1.0) / (a + 0.5);
        out.push_back(make_entry("kernels.gammafactor" + at + ",a=" + fmt(a), lhs, rhs, tol, 0.0,
                                 sw.seconds()));
      }
      {
        Stopwatch sw;
        auto f = [&](double v) { return v * kernel_KC(s, v); };
        const auto I = integrate_semi_infinite<ComplexValue>(ComplexIntegrand(f), 0.0, mid, layout,
                                                             kAbs, kRel);
        out.push_back(make_entry("kernels.sminus1" + at, I.value, s - 1.0, tol, 0.0, sw.seconds()));
      }
      // x = e^v turns the Mellin transforms of sqrt(x) sin/cos(u log x) into
      // Laplace transforms; truncated where e^{-(Re s - 1/2) V} < 1e-17.
      const ComplexValue c = s - 0.5;
      const double V = 40.0 / c.real();
      const double vtail = std::exp(-c.real() * V) / c.real();
      PanelLayout osc;
      osc.max_panel = std::min(0.5, kPi / u);
      {
        Stopwatch sw;
        auto f = [&](double v) { return std::exp(-c * v) * std::sin(u * v); };
        const auto I = integrate(ComplexIntegrand(f), 0.0, V, osc, kAbs, kRel);
        out.push_back(make_entry("kernels.sinlogint" + at + ",u=" + fmt(u), I.value, u / (u * u + c * c),
                                 tol, vtail, sw.seconds()));
      }
      {
        Stopwatch sw;
        auto f = [&](double v) { return std::exp(-c * v) * std::cos(u * v); };
        const auto I = integrate(ComplexIntegrand(f), 0.0, V, osc, kAbs, kRel);
        out.push_back(make_entry("kernels.expzb4" + at + ",u=" + fmt(u), I.value, c / (u * u + c * c),
                                 tol, vtail, sw.seconds()));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gamma and arctan kernel identities

namespace {

ReportEntry kernel_identity(const std::string& id, ComplexValue s, const QuadratureSpec& spec,
                            const std::function<double(double)>& head,
                            const std::function<double(double)>& far, ComplexValue rhs,
                            double far_rel_error) {
  Stopwatch sw;
  try {
    check_half_plane(s, id.c_str());
    const double T = spec.truncation_T;
    PanelLayout layout;
    layout.breaks = kc_breaks(s);
    auto f_head = [&](double u) { return head(u) * kernel_KC(s, u); };
    auto f_far = [&](double u) { return far(u) * kernel_KC(s, u); };
    const auto I1 = integrate(ComplexIntegrand(f_head), 0.0, T, layout, spec.abs_tol, spec.rel_tol,
                              spec.max_depth);
    const auto I2 = integrate_to_infinity(ComplexIntegrand(f_far), T, spec.abs_tol, spec.rel_tol);
    const ComplexValue lhs = std::exp(I1.value + I2.value);
    // Remainder of the asymptotic representation used beyond T:
    // |far - exact| <= far_rel_error / u^7 against |K_C| <= A / u^3.
    const double A = sup_u2([&](double u) { return u * std::abs(kernel_KC(s, u)); }, T);
    const double tail = exp_tail(std::abs(lhs), far_rel_error * A / (9.0 * std::pow(T, 9.0)));
    return make_entry(id + "@s=" + format_value(s), lhs, rhs, 1e-6, tail, sw.seconds());
  } catch (const std::exception& e) {
    return failed_entry(id + "@s=" + format_value(s), 1e-6, e.what());
  }
}

}  // namespace

ReportEntry gamma_kernel_identity(ComplexValue s, const QuadratureSpec& spec) {
  const ComplexValue rhs = std::exp(log_gamma(0.5 * s) - 0.5 * s * std::log(kPi));
  return kernel_identity("thm22.thetaKC", s, spec, theta_for_quadrature, theta_series, rhs,
                         127.0 / 430080.0);
}

ReportEntry atan_kernel_identity(ComplexValue s, const QuadratureSpec& spec) {
  auto f = [](double u) { return 2.0 * std::atan(2.0 * u); };
  return kernel_identity("thm22.atanKC", s, spec, f, f, s * s, 0.0);
}

// ---------------------------------------------------------------------------
// log|zeta| integrals

LineValue<double> omega_zeta(const QuadratureSpec& spec, const CriticalLineCache& cache) {
  check_truncation(spec, cache.height(), "omega_zeta");
  const double T = spec.truncation_T;
  auto f = [&](double u) { return cache.sample(u) / (u * u + 0.25); };
  const auto r = integrate_halfline(RealIntegrand(f), spec, upto(cache.zero_ordinates(), T));
  return {r.value / kPi, r.err_est / kPi, logzeta_tail(1.0 / kPi, 2.0, T)};
}

LineValue<double> omega_zeta_whole_line(const QuadratureSpec& spec, const CriticalLineCache& cache) {
  check_truncation(spec, cache.height(), "omega_zeta_whole_line");
  const double T = spec.truncation_T;
  const std::vector<double> z = upto(cache.zero_ordinates(), T);
  // (-T, 0) and (0, T) with mirrored panel layouts.
  PanelLayout pos;
  PanelLayout neg;
  for (double t : z) {
    pos.singular.push_back(t);
    neg.singular.push_back(-t);
    for (double d : {-spec.sing_radius, spec.sing_radius}) {
      pos.breaks.push_back(t + d);
      neg.breaks.push_back(-t - d);
    }
  }
  auto f = [&](double u) { return cache.sample(u) / (u * u + 0.25); };
  const auto a = integrate(RealIntegrand(f), -T, 0.0, neg, spec.abs_tol, spec.rel_tol, spec.max_depth);
  const auto b = integrate(RealIntegrand(f), 0.0, T, pos, spec.abs_tol, spec.rel_tol, spec.max_depth);
  return {(a.value + b.value) / (2.0 * kPi), (a.err_est + b.err_est) / (2.0 * kPi),
          logzeta_tail(1.0 / kPi, 2.0, T)};
}

LineValue<ComplexValue> zeta_B_eval(ComplexValue s, const QuadratureSpec& spec,
                                    const CriticalLineCache& cache) {
  check_half_plane(s, "zeta_B_eval");
  check_truncation(spec, cache.height(), "zeta_B_eval");
  const double T = spec.truncation_T;
  const ComplexValue a = s - 0.5;
  const ComplexValue c = (2.0 / kPi) * a;
  auto f = [&](double u) { return c * cache.sample(u) / (u * u + a * a); };
  const auto r = integrate_halfline(ComplexIntegrand(f), spec, upto(cache.zero_ordinates(), T));
  const ComplexValue value = std::exp(r.value);
  const double A = sup_u2([&](double u) { return std::abs(c / (u * u + a * a)); }, T);
  return {value, std::abs(value) * r.err_est, exp_tail(std::abs(value), logzeta_tail(A, 2.0, T))};
}

LineValue<ComplexValue> zeta_C_eval(ComplexValue s, const QuadratureSpec& spec, const ZeroTable& zeros) {
  check_half_plane(s, "zeta_C_eval");
  check_truncation(spec, zeros.height, "zeta_C_eval");
  const double T = spec.truncation_T;
  auto f = [&](double u) { return counting_remainder(u, zeros) * kernel_KC(s, u); };
  const auto r = integrate_halfline(ComplexIntegrand(f), spec, {}, 0.0, upto(zeros.ordinates, T));
  const ComplexValue value = std::exp(r.value);
  const double A = sup_u2([&](double u) { return std::abs(kernel_KC(s, u)); }, T);
  return {value, std::abs(value) * r.err_est, exp_tail(std::abs(value), counting_tail(A, T))};
}

LineValue<ComplexValue> xi_poisson(ComplexValue s, const QuadratureSpec& spec, const ZeroTable& zeros) {
  check_half_plane(s, "xi_poisson");
  check_truncation(spec, zeros.height, "xi_poisson");
  const double T = spec.truncation_T;
  auto head = [&](double u) { return kPi * count_N(u, zeros) * kernel_KC(s, u); };
  auto far = [&](double u) {
    return (theta_for_quadrature(u) + 2.0 * std::atan(2.0 * u)) * kernel_KC(s, u);
  };
  const auto r1 = integrate_halfline(ComplexIntegrand(head), spec, {}, 0.0, upto(zeros.ordinates, T));
  const auto r2 = integrate_to_infinity(ComplexIntegrand(far), T, spec.abs_tol, spec.rel_tol);
  const ComplexValue value = 0.5 * std::exp(r1.value + r2.value);
  const double A = sup_u2([&](double u) { return std::abs(kernel_KC(s, u)); }, T);
  return {value, std::abs(value) * (r1.err_est + r2.err_est),
          exp_tail(std::abs(value), counting_tail(A, T))};
}

J1J2 j1_j2(const QuadratureSpec& spec, const CriticalLineCache& cache, const ZeroTable& zeros) {
  check_truncation(spec, std::min(cache.height(), zeros.height), "j1_j2");
  const double T = spec.truncation_T;
  J1J2 out;
  {
    auto f = [&](double u) {
      const double d = u * u + 0.25;
      return -cache.sample(u) / (kPi * d * d);
    };
    const auto r = integrate_halfline(RealIntegrand(f), spec, upto(cache.zero_ordinates(), T));
    out.j1 = {r.value, r.err_est, logzeta_tail(1.0 / kPi, 4.0, T)};
  }
  {
    auto w = [](double u) {
      const double d = u * u + 0.25;
      return 2.0 * u / (kPi * d * d);
    };
    auto f = [&](double u) { return w(u) * counting_remainder(u, zeros); };
    const auto r = integrate_halfline(RealIntegrand(f), spec, {}, 0.0, upto(zeros.ordinates, T));
    out.j2 = {r.value, r.err_est, counting_tail(sup_u2(w, T), T)};
  }
  return out;
}

LineValue<double> f11(double x, const QuadratureSpec& spec, const ZeroTable& zeros) {
  if (!(x > 1.0)) throw DomainError("f11: requires x > 1");
  check_truncation(spec, zeros.height, "f11");
  const double T = spec.truncation_T;
  const double L = std::log(x);
  const double c = 2.0 * std::sqrt(x) / kPi;
  auto f = [&](double u) { return c * counting_remainder(u, zeros) / (u * u + 0.25) * std::sin(u * L); };
  const auto r = integrate_halfline(RealIntegrand(f), spec, {}, L, upto(zeros.ordinates, T));
  return {r.value, r.err_est, counting_tail(c, T) + 0.5 * r.last_half_period};
}

LineValue<double> f21(double x, const QuadratureSpec& spec, const CriticalLineCache& cache) {
  if (!(x > 1.0)) throw DomainError("f21: requires x > 1");
  check_truncation(spec, cache.height(), "f21");
  const double T = spec.truncation_T;
  const double L = std::log(x);
  const double c = 2.0 * std::sqrt(x) / kPi;
  auto f = [&](double u) { return -c * cache.sample(u) / (u * u + 0.25) * std::cos(u * L); };
  const auto r = integrate_halfline(RealIntegrand(f), spec, upto(cache.zero_ordinates(), T), L);
  return {r.value, r.err_est, logzeta_tail(c, 2.0, T) + 0.5 * r.last_half_period};
}

// ---------------------------------------------------------------------------
// Zero-counting decomposition

double n1(double t) { return (theta_exact(t) + 2.0 * std::atan(2.0 * t)) / kPi; }

namespace {

// log|1 - tau^2/u^2| for u > 0, written to stay accurate near u = 0 and u = tau.
// log|1 - tau^2/u^2|, accurate for u >> tau as well.
double log_ratio(double u, double tau) {
  if (u > 2.0 * tau) return std::log1p(-(tau / u) * (tau / u));
  return std::log(std::abs(u - tau)) + std::log(u + tau) - 2.0 * std::log(u);
}

struct Derivative {
  double value = 0.0;
  double err = 0.0;
};

// Richardson-extrapolated central difference of I at t.
Derivative richardson(const std::function<QuadResult<double>(double)>& I, double t, double h) {
  const auto ap = I(t + h);
  const auto am = I(t - h);
  const auto bp = I(t + 0.5 * h);
  const auto bm = I(t - 0.5 * h);
  const double d1 = (ap.value - am.value) / (2.0 * h);
  const double d2 = (bp.value - bm.value) / h;
  const double quad_err = (ap.err_est + am.err_est) / (2.0 * h) + (bp.err_est + bm.err_est) / h;
  return {(4.0 * d2 - d1) / 3.0, quad_err * 5.0 / 3.0 + std::abs(d2 - d1) / 3.0};
}

void check_mid_gap(double t, const std::vector<double>& zeros, const char* what) {
  const auto it = std::lower_bound(zeros.begin(), zeros.end(), t);
  double d = std::numeric_limits<double>::infinity();
  if (it != zeros.end()) d = std::min(d, *it - t);
  if (it != zeros.begin()) d = std::min(d, t - *(it - 1));
  if (d < kMidGapDistance) throw DomainError(std::string(what) + ": t too close to a zero ordinate");
}

}  // namespace

LineValue<double> n2(double t, const QuadratureSpec& spec, const CriticalLineCache& cache, double h) {
  if (!(h >= 1e-4 && h <= 1e-2)) throw DomainError("n2: requires h in [1e-4, 1e-2]");
  check_truncation(spec, cache.height(), "n2");
  const double T = spec.truncation_T;
  if (!(t > 0.0) || t + h >= T) throw DomainError("n2: requires 0 < t < truncation_T");
  const std::vector<double> z = upto(cache.zero_ordinates(), T);
  check_mid_gap(t, z, "n2");
  auto I = [&](double tau) {
    std::vector<double> sing = z;
    sing.push_back(0.0);
    sing.push_back(tau);
    std::sort(sing.begin(), sing.end());
    auto f = [&](double u) { return 2.0 * log_ratio(u, tau) * cache.sample(u); };
    const auto r = integrate_halfline(RealIntegrand(f), spec, sing);
    return QuadResult<double>{r.value, r.err_est};
  };
  const Derivative d = richardson(I, t, h);
  const double scale = 1.0 / (2.0 * kPi * kPi);
  const double tail = scale * 8.0 * t * (std::log(T) + 1.0) / (T * (1.0 - t * t / (T * T)));
  return {-scale * d.value, scale * d.err, tail};
}

ReportEntry decomposition_check(double t, const QuadratureSpec& spec, const CriticalLineCache& cache,
                                const ZeroTable& zeros, const SyntheticZeroSet& zs) {
  const std::string id = "thm25.nsumme@t=" + fmt(t);
  Stopwatch sw;
  try {
    const int N = count_N(t, zeros);
    const double N1 = n1(t);
    const LineValue<double> N2 = n2(t, spec, cache);
    const N3NB b = n3_and_nb(t, zs, spec);
    double N2G = 0.0;
    if (!zs.empty()) {
      // N2 of the polynomial factor G: its log|G| has no singularities on the
      // line, so the whole half-line is integrated (reciprocal map beyond U).
      double U = std::max(spec.truncation_T, 4.0 * t);
      PanelLayout layout;
      for (const auto& rho : zs.zeros()) {
        const double tau = std::abs(rho.imag());
        const double a = rho.real() - 0.5;
        U = std::max(U, 4.0 * tau);
        for (double k : {-4.0, -1.0, 0.0, 1.0, 4.0}) layout.breaks.push_back(tau + k * a);
      }
      auto I = [&](double tau) {
        PanelLayout l = layout;
        l.singular = {0.0, tau};
        l.breaks.push_back(tau - spec.sing_radius);
        l.breaks.push_back(tau + spec.sing_radius);
        auto f = [&](double u) { return 2.0 * log_ratio(u, tau) * log_abs_synthetic_G_on_line(u, zs); };
        return integrate_semi_infinite<double>(RealIntegrand(f), 0.0, U, l, spec.abs_tol, spec.rel_tol);
      };
      N2G = -richardson(I, t, 1e-3).value / (2.0 * kPi * kPi);
    }
    const double lhs = N + synthetic_zero_count(t, zs) - b.nb;
    const double rhs = N1 + N2.value + N2G + b.n3;
    return make_entry(id, lhs, rhs, 0.1, N2.tail, sw.seconds(),
                      "N1=" + fmt(N1) + " N2=" + fmt(N2.value) + " N3=" + fmt(b.n3));
  } catch (const std::exception& e) {
    return failed_entry(id, 0.1, e.what());
  }
}

// ---------------------------------------------------------------------------
// Explicit formulas

ReportEntry theorem33a_check(double x, const MangoldtTable& tab, const QuadratureSpec& spec,
                             const ZeroTable& zeros, const SyntheticZeroSet& zs) {
  const std::string id = "thm33a@x=" + fmt(x);
  Stopwatch sw;
  try {
    const double lhs = f_star(x, tab);
    const LineValue<double> v = f11(x, spec, zeros);
    return make_entry(id, lhs, v.value + f12_sum(x, zs), 0.05, v.tail, sw.seconds());
  } catch (const std::exception& e) {
    return failed_entry(id, 0.05, e.what());
  }
}

ReportEntry theorem33b_check(double x, const MangoldtTable& tab, const QuadratureSpec& spec,
                             const CriticalLineCache& cache, const SyntheticZeroSet& zs) {
  const std::string id = "thm33b@x=" + fmt(x);
  Stopwatch sw;
  try {
    const double lhs = f_star(x, tab);
    const LineValue<double> v = f21(x, spec, cache);
    return make_entry(id, lhs, v.value + f22_sum(x, zs), 0.05, v.tail, sw.seconds());
  } catch (const std::exception& e) {
    return failed_entry(id, 0.05, e.what());
  }
}

ReportEntry theorem34_check(double x, ComplexValue r, const MangoldtTable& tab,
                            const QuadratureSpec& spec, const CriticalLineCache& cache,
                            const SyntheticZeroSet& zs, double tol) {
  const std::string id = "thm34@x=" + fmt(x) + ",r=" + format_value(r);
  Stopwatch sw;
  try {
    if (!(x > 1.0)) throw DomainError("theorem34_check: requires x > 1");
    check_truncation(spec, cache.height(), "theorem34_check");
    const double T = spec.truncation_T;
    const double L = std::log(x);
    const ComplexValue lhs = pi_star_r(x, r, tab) * L - psi_r(x, r, tab);
    auto f = [&](double u) { return (kernel_K(x, r, u) + kernel_K(x, r, -u)) * cache.sample(u); };
    const auto I = integrate_halfline(ComplexIntegrand(f), spec, upto(cache.zero_ordinates(), T), L);
    const ComplexValue rhs =
        theta_big(x, 1.0 - r) - theta_big(x, -r) + I.value - theorem34_zero_sum(x, r, zs);
    // |K(u) + K(-u)| <= [2 (x^{1/2 - Re r} + 1) + log x |1 - 2r|] / (pi m^2), m = u - |Im r|.
    const double m = T - std::abs(r.imag());
    if (!(m > 0.0)) throw DomainError("theorem34_check: |Im r| must be below truncation_T");
    const double A = (2.0 * (std::pow(x, 0.5 - r.real()) + 1.0) + L * std::abs(1.0 - 2.0 * r)) / kPi *
                     (T * T) / (m * m);
    const double tail = logzeta_tail(A, 2.0, T) + 0.5 * I.last_half_period;
    return make_entry(id, lhs, rhs, tol, tail, sw.seconds());
  } catch (const std::exception& e) {
    return failed_entry(id, tol, e.what());
  }
}

ReportEntry theorem34_first_equality(double x, ComplexValue r, const MangoldtTable& tab) {
  const std::string id = "thm34.first@x=" + fmt(x) + ",r=" + format_value(r);
  Stopwatch sw;
  try {
    const ComplexValue lhs = pi_star_r_log_integral(x, r, tab);
    const ComplexValue rhs = pi_star_r(x, r, tab) * std::log(x) - psi_r(x, r, tab);
    return make_entry(id, lhs, rhs, 1e-8, 0.0, sw.seconds());
  } catch (const std::exception& e) {
    return failed_entry(id, 1e-8, e.what());
  }
}

// ---------------------------------------------------------------------------
// Balance identities on a synthetic set

std::vector<ReportEntry> balance_check(const QuadratureSpec& spec, const SyntheticZeroSet& zs) {
  std::vector<ReportEntry> out;
  if (zs.empty()) return out;
  Stopwatch sw;
  double U = 100.0;
  PanelLayout layout;
  std::vector<double> taus;
  for (const auto& rho : zs.zeros()) {
    const double tau = std::abs(rho.imag());
    const double a = rho.real() - 0.5;
    U = std::max(U, 4.0 * tau + 50.0);
    taus.push_back(tau);
    for (double k : {-4.0, -1.0, 0.0, 1.0, 4.0}) layout.breaks.push_back(tau + k * a);
  }
  auto G_integral = [&](const std::function<double(double)>& w) {
    auto f = [&](double u) { return w(u) * log_abs_synthetic_G_on_line(u, zs); };
    return integrate_semi_infinite<double>(RealIntegrand(f), 0.0, U, layout, 1e-13, 1e-13).value;
  };
  const double dJ1 = -G_integral([](double u) {
                       const double d = u * u + 0.25;
                       return 1.0 / (d * d);
                     }) / kPi;
  const double dOmega = G_integral([](double u) { return 1.0 / (u * u + 0.25); }) / kPi;
  // Change of pi N - theta - 2 atan 2u: pi times two zeros per entry at |tau|.
  auto dJ2_f = [&](double u) {
    const double d = u * u + 0.25;
    return 2.0 * u / (kPi * d * d) * kPi * synthetic_zero_count(u, zs);
  };
  PanelLayout jl;
  jl.breaks = taus;
  const double dJ2 =
      integrate_semi_infinite<double>(RealIntegrand(dJ2_f), 0.0, U, jl, 1e-13, 1e-13).value;
  const double dlog_G = synthetic_G_log_derivative(1.0, zs).real();
  const double bb = blaschke_log_derivative(1.0, zs).real();
  const double cc = c_log_derivative(1.0, zs).real();
  const double chain1 = dJ1 + 2.0 * dOmega + bb;
  const double chain2 = dJ2 + cc;
  const double secs = sw.seconds();
  (void)spec;
  out.push_back(make_entry("thm24.balance.chain1", dlog_G, chain1, 1e-6, 0.0, secs,
                           "dJ1=" + fmt(dJ1) + " dOmega=" + fmt(dOmega) + " B'/B(1)=" + fmt(bb)));
  out.push_back(make_entry("thm24.balance.chain2", dlog_G, chain2, 1e-6, 0.0, secs,
                           "dJ2=" + fmt(dJ2) + " C'/C(1)=" + fmt(cc)));
  out.push_back(make_entry("thm24.balance.chains", chain1, chain2, 1e-6, 0.0, secs));

  double fsum = 0.0;
  double closed = 0.0;
  bool positive = true;
  bool negative = true;
  for (const auto& rho : zs.zeros()) {
    const double f = f_rho_pair(rho);
    positive = positive && f > 0.0;
    fsum += f;
    const double c = c_pair_log_derivative_closed_form(rho);
    negative = negative && c < 0.0;
    closed += c;
  }
  out.push_back(make_entry("thm24.frho", fsum, bb + 2.0 * blaschke_omega(zs), 1e-12, 0.0, 0.0));
  out.push_back(sign_entry("thm24.frho_positive", fsum, positive, 0.0, "sum f_rho=" + fmt(fsum)));
  out.push_back(make_entry("thm24.logcrho", cc, closed, 1e-10, 0.0, 0.0));
  out.push_back(sign_entry("thm24.logcrho_negative", closed, negative, 0.0, "C'/C(1)=" + fmt(closed)));
  return out;
}

}  // namespace critline
