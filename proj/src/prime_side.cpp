#include "critline/prime_side.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include "critline/quadrature.hpp"
#include "critline/special_fn.hpp"
#include "critline/zeta.hpp"

namespace critline {

namespace {

constexpr std::uint64_t kMaxSieve = 100000000ULL;
constexpr char kCacheMagic[8] = {'C', 'L', 'S', 'I', 'E', 'V', 'E', '1'};

// Mellin integrals are taken to this accuracy in v = log x.
constexpr double kMellinAbsTol = 1e-12;
constexpr double kMellinRelTol = 1e-12;

void check_x(double x, const MangoldtTable& tab, const char* what) {
  if (!(x >= 1.0) || x > static_cast<double>(tab.limit())) {
    throw DomainError(std::string(what) + ": requires 1 <= x <= sieve limit");
  }
}

// |exp(w) - 1| <= |w| e^{|w|}: converts an error bound on an exponent into
// a bound on the exponential relative to its value.
double exp_tail(double value_abs, double exponent_err) {
  return value_abs * exponent_err * std::exp(exponent_err);
}

// phi_alpha(e^v) = -E1(-alpha v), evaluated from v to keep full accuracy near x = 1.
ComplexValue phi_of_v(ComplexValue alpha, double v) { return -e1(-alpha * v); }

// Phi_alpha(e^v) from its closed form.
ComplexValue big_phi_of_v(ComplexValue alpha, double v) {
  const double x = std::exp(v);
  return x * phi_of_v(alpha - 1.0, v) - phi_of_v(alpha, v) +
         x * (std::log(-alpha) - std::log(1.0 - alpha));
}

QuadResult<ComplexValue> laplace(const ComplexIntegrand& f, double V) {
  PanelLayout layout;
  layout.singular = {0.0};
  return integrate(f, 0.0, V, layout, kMellinAbsTol, kMellinRelTol);
}

}  // namespace

double MangoldtTable::lambda(std::uint64_t n) const {
  if (n > limit_) throw OutOfRangeError("lambda: n beyond sieve limit");
  const auto it = std::lower_bound(n_.begin(), n_.end(), n);
  return (it != n_.end() && *it == n) ? log_p_[static_cast<std::size_t>(it - n_.begin())] : 0.0;
}

std::size_t MangoldtTable::count_upto(double x) const {
  if (x < 2.0) return 0;
  const auto m = static_cast<std::uint64_t>(std::floor(x));
  return static_cast<std::size_t>(std::upper_bound(n_.begin(), n_.end(), m) - n_.begin());
}

MangoldtTable MangoldtTable::from_primes(std::uint64_t limit,
                                         const std::vector<std::uint32_t>& primes) {
  MangoldtTable t;
  t.limit_ = limit;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> pp;
  pp.reserve(primes.size() + primes.size() / 8 + 16);
  for (std::uint32_t p : primes) {
    if (p > limit) break;
    for (std::uint64_t q = p; q <= limit; q *= p) {
      pp.emplace_back(q, p);
      if (q > limit / p) break;
    }
  }
  std::sort(pp.begin(), pp.end());
  t.n_.reserve(pp.size());
  t.log_p_.reserve(pp.size());
  t.psi_.reserve(pp.size());
  t.pistar_.reserve(pp.size());
  t.s1_.reserve(pp.size());
  double psi = 0.0;
  double pistar = 0.0;
  double s1 = 0.0;
  for (const auto& [n, p] : pp) {
    const double lp = std::log(static_cast<double>(p));
    const double ln = std::log(static_cast<double>(n));
    psi += lp;
    pistar += lp / ln;
    s1 += lp / (static_cast<double>(n) * ln);
    t.n_.push_back(n);
    t.log_p_.push_back(lp);
    t.psi_.push_back(psi);
    t.pistar_.push_back(pistar);
    t.s1_.push_back(s1);
  }
  return t;
}

std::vector<std::uint32_t> sieve_primes(std::uint64_t X) {
  std::vector<std::uint32_t> primes;
  if (X < 2) return primes;
  // Odd-only sieve: index i represents 2i + 1.
  const std::uint64_t half = (X - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= X; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = p * p / 2; j < half; j += p) composite[j] = true;
  }
  primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
  }
  return primes;
}

MangoldtTable build_mangoldt(std::uint64_t X) {
  if (X < 2 || X > kMaxSieve) throw DomainError("build_mangoldt: requires 2 <= X <= 1e8");
  return MangoldtTable::from_primes(X, sieve_primes(X));
}

void save_sieve_cache(const std::filesystem::path& path, const MangoldtTable& tab) {
  std::vector<std::uint32_t> primes;
  const auto& n = tab.prime_powers();
  const auto& lp = tab.log_p();
  for (std::size_t i = 0; i < n.size(); ++i) {
    // A prime power is prime iff log n == log p.
    if (std::log(static_cast<double>(n[i])) == lp[i]) primes.push_back(static_cast<std::uint32_t>(n[i]));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write sieve cache " + path.string());
  const std::uint64_t header[2] = {tab.limit(), primes.size()};
  out.write(kCacheMagic, sizeof kCacheMagic);
  out.write(reinterpret_cast<const char*>(header), sizeof header);
  out.write(reinterpret_cast<const char*>(primes.data()),
            static_cast<std::streamsize>(primes.size() * sizeof(std::uint32_t)));
  if (!out) throw std::runtime_error("failed writing sieve cache " + path.string());
}

bool load_sieve_cache(const std::filesystem::path& path, std::uint64_t X, MangoldtTable& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  char magic[sizeof kCacheMagic];
  std::uint64_t header[2];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kCacheMagic, sizeof magic) != 0) return false;
  if (!in.read(reinterpret_cast<char*>(header), sizeof header) || header[0] != X) return false;
  if (header[1] > X) return false;
  std::vector<std::uint32_t> primes(header[1]);
  if (!in.read(reinterpret_cast<char*>(primes.data()),
               static_cast<std::streamsize>(primes.size() * sizeof(std::uint32_t))))
    return false;
  if (!std::is_sorted(primes.begin(), primes.end())) return false;
  out = MangoldtTable::from_primes(X, primes);
  return true;
}

double psi(double x, const MangoldtTable& tab) {
  check_x(x, tab, "psi");
  return tab.psi_prefix(tab.count_upto(x));
}

double pi_star(double x, const MangoldtTable& tab) {
  check_x(x, tab, "pi_star");
  return tab.pi_star_prefix(tab.count_upto(x));
}

ComplexValue psi_r(double x, ComplexValue r, const MangoldtTable& tab) {
  check_x(x, tab, "psi_r");
  const std::size_t k = tab.count_upto(x);
  ComplexValue sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sum += tab.log_p()[i] * std::exp(-r * std::log(static_cast<double>(tab.prime_powers()[i])));
  }
  return sum;
}

ComplexValue pi_star_r(double x, ComplexValue r, const MangoldtTable& tab) {
  check_x(x, tab, "pi_star_r");
  const std::size_t k = tab.count_upto(x);
  ComplexValue sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double ln = std::log(static_cast<double>(tab.prime_powers()[i]));
    sum += tab.log_p()[i] / ln * std::exp(-r * ln);
  }
  return sum;
}

ComplexValue pi_star_r_log_integral(double x, ComplexValue r, const MangoldtTable& tab) {
  check_x(x, tab, "pi_star_r_log_integral");
  const std::size_t k = tab.count_upto(x);
  const double lx = std::log(x);
  ComplexValue level = 0.0;  // pi_{*,r} on [n_i, n_{i+1})
  ComplexValue total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double ln = std::log(static_cast<double>(tab.prime_powers()[i]));
    level += tab.log_p()[i] / ln * std::exp(-r * ln);
    const double next =
        i + 1 < k ? std::log(static_cast<double>(tab.prime_powers()[i + 1])) : lx;
    total += level * (next - ln);
  }
  return total;
}

double f_star(double x, const MangoldtTable& tab) {
  if (!(x > 1.0)) throw DomainError("f_star: requires x > 1");
  check_x(x, tab, "f_star");
  const double L = std::log(x);
  const std::size_t k = tab.count_upto(x);
  const double smooth = x * ei0(ComplexValue(-L)).real() + ei0(ComplexValue(L)).real();
  return x * tab.s1_prefix(k) - tab.pi_star_prefix(k) + smooth;
}

double f_star_integral(double x, const MangoldtTable& tab, double tol) {
  if (!(x > 1.0)) throw DomainError("f_star_integral: requires x > 1");
  check_x(x, tab, "f_star_integral");
  const double V = std::log(x);
  PanelLayout layout;
  const std::size_t k = tab.count_upto(x);
  for (std::size_t i = 0; i < k; ++i) layout.breaks.push_back(std::log(static_cast<double>(tab.prime_powers()[i])));
  // In v = log y: int_0^V (pi*(e^v) - Ei0(v)) e^{-v} dv, with a breakpoint at
  // every jump so that each panel sees a smooth integrand.
  auto integrand = [&tab](double v) {
    const double y = std::exp(v);
    return (tab.pi_star_prefix(tab.count_upto(y)) - ei0(ComplexValue(v)).real()) * std::exp(-v);
  };
  const auto r = integrate(RealIntegrand(integrand), 0.0, V, layout, tol, 1e-14);
  return x * r.value;
}

std::vector<ReportEntry> mellin_checks(ComplexValue s, std::uint64_t X, const MangoldtTable& tab,
                                       ComplexValue alpha) {
  if (!(s.real() > 1.0)) throw DomainError("mellin_checks: requires Re(s) > 1");
  if (X < 1000 || X > tab.limit()) throw DomainError("mellin_checks: requires 1e3 <= X <= sieve limit");
  const double sigma = s.real();
  const double V = std::log(static_cast<double>(X));
  const double abs_s = std::abs(s);
  const ComplexValue s1 = s - 1.0;
  const std::string at = "@s=" + format_value(s);
  std::vector<ReportEntry> out;

  auto run = [&](const std::string& id, double tol, auto&& body) {
    Stopwatch sw;
    try {
      auto [lhs, rhs, tail] = body();
      out.push_back(make_entry(id + at, lhs, rhs, tol, tail, sw.seconds()));
    } catch (const std::exception& e) {
      out.push_back(failed_entry(id + at, tol, e.what()));
    }
  };
  struct Sides {
    ComplexValue lhs;
    ComplexValue rhs;
    double tail;
  };

  // (a) 1/s = exp(s int_0^V (gamma + log v) e^{-sv} dv)
  run("thm31a", 1e-6, [&] {
    const auto I = laplace([&](double v) { return (kEulerGamma + std::log(v)) * std::exp(-s * v); }, V);
    const ComplexValue rhs = std::exp(s * I.value);
    const double t = (kEulerGamma + std::log(V) + 1.0 / (sigma * V)) * std::exp(-sigma * V) / sigma;
    return Sides{1.0 / s, rhs, exp_tail(std::abs(rhs), abs_s * t)};
  });

  // (b) 1/(s-1) = exp(s int_0^V Ei(v) e^{-sv} dv); Ei(v) <= e^v/v (1 + 2/v) for v >= 5.
  run("thm31b", 1e-6, [&] {
    const auto I = laplace([&](double v) { return ei(ComplexValue(v)) * std::exp(-s * v); }, V);
    const ComplexValue rhs = std::exp(s * I.value);
    const double t = (1.0 + 2.0 / V) * std::exp((1.0 - sigma) * V) / (V * (sigma - 1.0));
    return Sides{1.0 / s1, rhs, exp_tail(std::abs(rhs), abs_s * t)};
  });

  // (c) 1 - s/rho = exp(-s int_0^V phi_rho(e^v) e^{-sv} dv), with the envelope
  // |phi_rho(x)| <~ x^{Re rho} / (|rho| log x) (1 + 2/(|rho| log x)).
  if (sigma > alpha.real() && alpha.imag() != 0.0) {
    run("thm31c", 1e-6, [&] {
      const auto I = laplace([&](double v) { return phi_of_v(alpha, v) * std::exp(-s * v); }, V);
      const ComplexValue rhs = std::exp(-s * I.value);
      const double m = std::abs(alpha) * V;
      const double t = std::exp((alpha.real() - sigma) * V) / ((sigma - alpha.real()) * m) * (1.0 + 2.0 / m);
      return Sides{1.0 - s / alpha, rhs, exp_tail(std::abs(rhs), abs_s * t)};
    });
  }

  // 1 - s/alpha = exp(-s(s-1) int_0^V Phi_alpha(e^v) e^{-sv} dv); needs Re(alpha) > 0.
  if (sigma > alpha.real() && alpha.real() > 0.0 && alpha.imag() != 0.0) {
    run("phimellin", 1e-6, [&] {
      const auto I = laplace([&](double v) { return big_phi_of_v(alpha, v) * std::exp(-s * v); }, V);
      const ComplexValue rhs = std::exp(-s * s1 * I.value);
      const double c0 = std::abs(std::log(-alpha) - std::log(1.0 - alpha));
      const double m = std::min(std::abs(alpha), std::abs(alpha - 1.0)) * V;
      const double t = c0 * std::exp((1.0 - sigma) * V) / (sigma - 1.0) +
                       2.0 * std::exp((alpha.real() - sigma) * V) / ((sigma - alpha.real()) * m) *
                           (1.0 + 2.0 / m);
      return Sides{1.0 - s / alpha, rhs, exp_tail(std::abs(rhs), std::abs(s * s1) * t)};
    });
  }

  // Step-function integrals, exact between prime powers:
  //   int_1^X pi*(x) x^{-s-1} dx = sum_{n<=X} Lambda(n)/log n (n^-s - X^-s)/s, etc.
  const std::size_t k = tab.count_upto(static_cast<double>(X));
  const ComplexValue Xs = std::exp(-s * V);
  ComplexValue pistar_mellin = 0.0;  // s int pi* x^{-s-1}
  ComplexValue psi_mellin = 0.0;     // s int psi x^{-s-1}
  ComplexValue s1_mellin = 0.0;      // (s-1) int x S1(x) x^{-s-1}
  for (std::size_t i = 0; i < k; ++i) {
    const double ln = std::log(static_cast<double>(tab.prime_powers()[i]));
    const double lam = tab.log_p()[i];
    const ComplexValue ns = std::exp(-s * ln);
    pistar_mellin += lam / ln * (ns - Xs);
    psi_mellin += lam * (ns - Xs);
    s1_mellin += lam / (std::exp(ln) * ln) * (ns * std::exp(ln) - Xs * std::exp(V));
  }
  const ComplexValue zeta_s = zeta(s);
  const auto [z, dz] = zeta_and_derivative(s);
  const double XV = std::exp((1.0 - sigma) * V);  // X^{1 - sigma}

  // zeta(s) = exp(s int pi* x^{-s-1}); pi*(x) <= 2x / log x beyond X.
  run("zetapi", 1e-6, [&] {
    const ComplexValue rhs = std::exp(pistar_mellin);
    const double t = abs_s * 2.0 * XV / ((sigma - 1.0) * V);
    return Sides{zeta_s, rhs, exp_tail(std::abs(rhs), t)};
  });

  // -zeta'/zeta(s) = s int psi x^{-s-1}; psi(x) < 1.04 x.
  run("zetapsi", 1e-5, [&] {
    const double t = 1.04 * abs_s * XV / (sigma - 1.0);
    return Sides{-dz / z, psi_mellin, t};
  });

  // (s-1)/s zeta(s) = exp(s int (pi* - Ei0(log x)) x^{-s-1}); |pi* - Ei0(log x)| <= x.
  const ComplexValue target = s1 / s * zeta_s;
  run("zetap1", 1e-4, [&] {
    const auto I = laplace([&](double v) { return ei0(ComplexValue(v)) * std::exp(-s * v); }, V);
    const ComplexValue rhs = std::exp(pistar_mellin - s * I.value);
    const double t = abs_s * XV / (sigma - 1.0);
    return Sides{target, rhs, exp_tail(std::abs(rhs), t)};
  });

  // (s-1)/s zeta(s) = exp(s(s-1) int f* x^{-s-1}) with
  // f* = x S1(x) - pi*(x) + x Ei0(-log x) + Ei0(log x); |f*(x)| <= x log x.
  run("zetap2", 1e-4, [&] {
    const auto I = laplace(
        [&](double v) {
          return (std::exp(v) * ei0(ComplexValue(-v)) + ei0(ComplexValue(v))) * std::exp(-s * v);
        },
        V);
    const ComplexValue exponent = s * s1_mellin - s1 * pistar_mellin + s * s1 * I.value;
    const ComplexValue rhs = std::exp(exponent);
    const double t = std::abs(s * s1) * XV * (V / (sigma - 1.0) + 1.0 / ((sigma - 1.0) * (sigma - 1.0)));
    return Sides{target, rhs, exp_tail(std::abs(rhs), t)};
  });

  return out;
}

}  // namespace critline
