#pragma once

// Arithmetic side of the explicit formulas: the von Mangoldt function from a
// sieve, its weighted partial sums, the function f*(x), and numerical Mellin
// checks of the x-side identities (integrals over (1, X] in x = e^v).

#include <cstdint>
#include <filesystem>
#include <vector>

#include "critline/errors.hpp"
#include "critline/report.hpp"

namespace critline {

/// Lambda(n) for 2 <= n <= limit, stored sparsely: only prime powers carry a
/// nonzero value, so the table keeps the sorted prime powers, their log p,
/// and prefix sums of the weights used by psi, pi* and f*.
class MangoldtTable {
 public:
  MangoldtTable() = default;

  std::uint64_t limit() const noexcept { return limit_; }
  const std::vector<std::uint64_t>& prime_powers() const noexcept { return n_; }
  /// log p for prime_powers()[i] = p^m.
  const std::vector<double>& log_p() const noexcept { return log_p_; }

  /// Lambda(n); 0 unless n is a prime power. Throws OutOfRangeError for n > limit.
  double lambda(std::uint64_t n) const;
  /// Number of prime powers <= x.
  std::size_t count_upto(double x) const;

  /// Prefix sums over the first k prime powers.
  double psi_prefix(std::size_t k) const { return k == 0 ? 0.0 : psi_[k - 1]; }
  double pi_star_prefix(std::size_t k) const { return k == 0 ? 0.0 : pistar_[k - 1]; }
  double s1_prefix(std::size_t k) const { return k == 0 ? 0.0 : s1_[k - 1]; }

  /// Prime powers from the primes up to limit (primes must be sorted).
  static MangoldtTable from_primes(std::uint64_t limit, const std::vector<std::uint32_t>& primes);

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> n_;
  std::vector<double> log_p_;
  std::vector<double> psi_;     // sum Lambda(n)
  std::vector<double> pistar_;  // sum Lambda(n) / log n
  std::vector<double> s1_;      // sum Lambda(n) / (n log n)
};

/// Sieve of Eratosthenes up to X; 2 <= X <= 1e8, else DomainError.
MangoldtTable build_mangoldt(std::uint64_t X);

/// Primes up to X (sorted).
std::vector<std::uint32_t> sieve_primes(std::uint64_t X);

/// Binary sieve cache (the primes up to X). load returns false when the
/// file is missing, truncated, or was written for another X.
void save_sieve_cache(const std::filesystem::path& path, const MangoldtTable& tab);
bool load_sieve_cache(const std::filesystem::path& path, std::uint64_t X, MangoldtTable& out);

/// Partial sums over n <= x (n = x included). Require 1 <= x <= limit.
double psi(double x, const MangoldtTable& tab);
double pi_star(double x, const MangoldtTable& tab);
/// psi_r(x) = sum Lambda(n) n^-r,  pi_{*,r}(x) = sum Lambda(n) / (n^r log n).
ComplexValue psi_r(double x, ComplexValue r, const MangoldtTable& tab);
ComplexValue pi_star_r(double x, ComplexValue r, const MangoldtTable& tab);

/// int_1^x pi_{*,r}(y) / y dy, computed exactly between consecutive prime powers.
ComplexValue pi_star_r_log_integral(double x, ComplexValue r, const MangoldtTable& tab);

/// f*(x) = x (sum_{n<=x} Lambda(n)/(n log n) + Ei0(-log x)) - (pi*(x) - Ei0(log x)),
/// 1 < x <= limit.
double f_star(double x, const MangoldtTable& tab);
/// x int_1^x (pi*(y) - Ei0(log y)) / y^2 dy by adaptive quadrature with
/// breakpoints at the prime powers (the defining integral of f*).
double f_star_integral(double x, const MangoldtTable& tab, double tol = 1e-12);

/// Mellin-transform identities at s, with x-integrals truncated at X:
///   thm31a     1/s          = exp(s int (gamma + log log x) x^{-s-1})
///   thm31b     1/(s-1)      = exp(s int Li(x) x^{-s-1})
///   thm31c     1 - s/rho    = exp(-s int phi_rho(x) x^{-s-1})
///   phimellin  1 - s/alpha  = exp(-s(s-1) int Phi_alpha(x) x^{-s-1})
///   zetapi     zeta(s)      = exp(s int pi*(x) x^{-s-1})
///   zetapsi    -zeta'/zeta(s) = s int psi(x) x^{-s-1}
///   zetap1     (s-1)/s zeta(s) = exp(s int (pi*(x) - Ei0(log x)) x^{-s-1})
///   zetap2     (s-1)/s zeta(s) = exp(s(s-1) int f*(x) x^{-s-1})
/// alpha serves as rho in thm31c and as the index of Phi in phimellin.
/// Requires Re(s) > 1, Re(s) > Re(alpha), 1e3 <= X <= tab.limit().
std::vector<ReportEntry> mellin_checks(ComplexValue s, std::uint64_t X, const MangoldtTable& tab,
                                       ComplexValue alpha = ComplexValue(0.6, 14.0));

}  // namespace critline
