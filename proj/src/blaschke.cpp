#include "critline/blaschke.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "critline/special_fn.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;

void check_half_plane(ComplexValue s, const char* what) {
  if (!is_finite(s) || !(s.real() > 0.5)) {
    throw DomainError(std::string(what) + ": requires Re(s) > 1/2");
  }
}

// Reflection of z in the critical line.
ComplexValue reflect(ComplexValue z) { return 1.0 - std::conj(z); }

}  // namespace

SyntheticZeroSet::SyntheticZeroSet(std::vector<ComplexValue> zeros) : zeros_(std::move(zeros)) {
  for (const auto& z : zeros_) {
    if (!is_finite(z) || !(z.real() > 0.5) || z.real() > 1.0 || z.imag() == 0.0) {
      throw DomainError("synthetic zero must satisfy 1/2 < sigma <= 1 and tau != 0");
    }
  }
}

std::vector<ComplexValue> SyntheticZeroSet::with_conjugates() const {
  std::vector<ComplexValue> out;
  out.reserve(2 * zeros_.size());
  for (const auto& z : zeros_) {
    out.push_back(z);
    out.push_back(std::conj(z));
  }
  return out;
}

SyntheticZeroSet load_synthetic_zeros_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read synthetic zeros: " + path.string());
  std::vector<ComplexValue> zs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    double sigma = 0.0;
    double tau = 0.0;
    char comma = 0;
    if (!(row >> sigma >> comma >> tau) || comma != ',') {
      if (zs.empty() && line.find("sigma") != std::string::npos) continue;  // header
      throw DomainError("malformed synthetic zero row: " + line);
    }
    zs.emplace_back(sigma, tau);
  }
  return SyntheticZeroSet(std::move(zs));
}

ComplexValue blaschke_B(ComplexValue s, const SyntheticZeroSet& zs) {
  // The poles 1 - conj(rho) lie left of the line, so the closed half-plane
  // is admissible; |B| = 1 on the line itself.
  if (!is_finite(s) || !(s.real() >= 0.5)) throw DomainError("blaschke_B: requires Re(s) >= 1/2");
  ComplexValue prod = 1.0;
  for (const auto& rho : zs.with_conjugates()) {
    const ComplexValue den = 1.0 - s / reflect(rho);
    if (std::abs(den) == 0.0) throw DomainError("blaschke_B: pole");
    prod *= (1.0 - s / rho) / den * std::abs(rho / (1.0 - rho));
  }
  return prod;
}

ComplexValue blaschke_log_derivative(ComplexValue s, const SyntheticZeroSet& zs) {
  check_half_plane(s, "blaschke_log_derivative");
  ComplexValue sum = 0.0;
  for (const auto& rho : zs.with_conjugates()) sum += 1.0 / (s - rho) - 1.0 / (s - reflect(rho));
  return sum;
}

double blaschke_omega(const SyntheticZeroSet& zs) {
  double sum = 0.0;
  for (const auto& rho : zs.with_conjugates()) sum += std::log(std::abs(rho / (1.0 - rho)));
  return sum;
}

ComplexValue c_product(ComplexValue s, const SyntheticZeroSet& zs) {
  check_half_plane(s, "c_product");
  ComplexValue prod = 1.0;
  for (const auto& rho : zs.with_conjugates()) {
    const ComplexValue m = 0.5 * (reflect(rho) + rho);  // 1/2 + i tau
    const ComplexValue den = 1.0 - s / m;
    if (std::abs(den) == 0.0) throw DomainError("c_product: pole");
    prod *= (1.0 - s / rho) * (1.0 - s / reflect(rho)) / (den * den);
  }
  return prod;
}

ComplexValue c_log_derivative(ComplexValue s, const SyntheticZeroSet& zs) {
  check_half_plane(s, "c_log_derivative");
  ComplexValue sum = 0.0;
  for (const auto& rho : zs.with_conjugates()) {
    const ComplexValue m = 0.5 * (reflect(rho) + rho);
    sum += 1.0 / (s - rho) + 1.0 / (s - reflect(rho)) - 2.0 / (s - m);
  }
  return sum;
}

double c_pair_log_derivative_closed_form(ComplexValue rho) {
  const double sg = rho.real();
  const double t2 = rho.imag() * rho.imag();
  const double a = sg - 0.5;
  return -2.0 * (3.0 * t2 - sg * (1.0 - sg)) * a * a /
         (((1.0 - sg) * (1.0 - sg) + t2) * (sg * sg + t2) * (0.25 + t2));
}

double f_rho_pair(ComplexValue rho) {
  if (!(rho.real() > 0.5 && rho.real() <= 1.0) || !(std::abs(rho.imag()) > 1.0)) {
    throw DomainError("f_rho_pair: requires 1/2 < sigma <= 1 and |tau| > 1");
  }
  auto f = [](ComplexValue r) {
    return 2.0 * std::log(std::abs(r / (1.0 - r))) + 1.0 / (1.0 - r) - 1.0 / std::conj(r);
  };
  return (f(rho) + f(std::conj(rho))).real();
}

double f_rho_pair_integral(ComplexValue rho, double tol) {
  if (!(rho.real() > 0.5 && rho.real() <= 1.0) || !(std::abs(rho.imag()) > 1.0)) {
    throw DomainError("f_rho_pair_integral: requires 1/2 < sigma <= 1 and |tau| > 1");
  }
  const double t2 = rho.imag() * rho.imag();
  auto integrand = [t2](double x) {
    const double y = 1.0 - x;
    const double num = x * x * y * y + t2 * (t2 - 6.0 * x * x + 6.0 * x - 1.0);
    const double d1 = x * x + t2;
    const double d2 = y * y + t2;
    return num / (d1 * d1 * d2 * d2);
  };
  const auto r = integrate(RealIntegrand(integrand), 0.5, rho.real(), PanelLayout{}, tol, 1e-14);
  return 2.0 * r.value;
}

ComplexValue f12_sum_complex(double x, const SyntheticZeroSet& zs) {
  ComplexValue sum = 0.0;
  for (const auto& rho : zs.with_conjugates()) {
    const ComplexValue m = 0.5 * (1.0 + rho - std::conj(rho));
    sum += phi_tilde(rho, x) + phi_tilde(reflect(rho), x) - 2.0 * phi_tilde(m, x);
  }
  return -sum;
}

ComplexValue f22_sum_complex(double x, const SyntheticZeroSet& zs) {
  ComplexValue sum = 0.0;
  for (const auto& rho : zs.with_conjugates()) {
    sum += phi_tilde(rho, x) - phi_tilde(reflect(rho), x);
  }
  return -sum;
}

double f12_sum(double x, const SyntheticZeroSet& zs) { return f12_sum_complex(x, zs).real(); }
double f22_sum(double x, const SyntheticZeroSet& zs) { return f22_sum_complex(x, zs).real(); }

ComplexValue theorem34_zero_sum(double x, ComplexValue r, const SyntheticZeroSet& zs) {
  ComplexValue sum = 0.0;
  for (const auto& rho : zs.with_conjugates()) {
    sum += theta_big(x, rho - r) - theta_big(x, reflect(rho) - r);
  }
  return sum;
}

N3NB n3_and_nb(double t, const SyntheticZeroSet& zs, const QuadratureSpec& quad) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("n3_and_nb: requires t > 0");
  N3NB out;
  if (zs.empty()) return out;
  std::vector<double> peaks;
  for (const auto& rho : zs.zeros()) {
    const double tau = std::abs(rho.imag());
    if (std::abs(t - tau) <= 1e-12 * std::max(1.0, tau)) {
      throw DomainError("n3_and_nb: t lies on the singular set |Im rho|");
    }
    if (tau <= t) out.nb += 2;
    peaks.push_back(tau);
  }
  // B'/B(1/2 + iu) is real and even in u; fold (-t, t) onto (0, t). On the
  // line itself B is analytic, so the sum is evaluated without the
  // half-plane guard of blaschke_log_derivative.
  const auto all = zs.with_conjugates();
  auto integrand = [&all](double u) {
    const ComplexValue s(0.5, u);
    ComplexValue sum = 0.0;
    for (const auto& rho : all) sum += 1.0 / (s - rho) - 1.0 / (s - reflect(rho));
    return sum.real();
  };
  PanelLayout layout;
  layout.breaks = peaks;
  for (const auto& rho : zs.zeros()) {
    const double a = rho.real() - 0.5;
    for (double k : {-4.0, -1.0, 1.0, 4.0}) layout.breaks.push_back(std::abs(rho.imag()) + k * a);
  }
  const auto r = integrate(RealIntegrand(integrand), 0.0, t, layout, quad.abs_tol, quad.rel_tol,
                           quad.max_depth);
  out.n3 = 2.0 * r.value / (2.0 * kPi);
  return out;
}

ComplexValue synthetic_G(ComplexValue s, const SyntheticZeroSet& zs) {
  ComplexValue prod = 1.0;
  for (const auto& rho : zs.with_conjugates()) prod *= (1.0 - s / rho) * (1.0 - s / (1.0 - rho));
  return prod;
}

ComplexValue synthetic_G_log_derivative(ComplexValue s, const SyntheticZeroSet& zs) {
  ComplexValue sum = 0.0;
  for (const auto& rho : zs.with_conjugates()) sum += 1.0 / (s - rho) + 1.0 / (s - (1.0 - rho));
  return sum;
}

double log_abs_synthetic_G_on_line(double u, const SyntheticZeroSet& zs) {
  const ComplexValue s(0.5, u);
  double sum = 0.0;
  for (const auto& rho : zs.with_conjugates()) {
    sum += std::log(std::abs(1.0 - s / rho)) + std::log(std::abs(1.0 - s / (1.0 - rho)));
  }
  return sum;
}

int synthetic_zero_count(double t, const SyntheticZeroSet& zs) {
  int n = 0;
  for (const auto& rho : zs.zeros()) {
    if (std::abs(rho.imag()) <= t) n += 2;
  }
  return n;
}

}  // namespace critline
