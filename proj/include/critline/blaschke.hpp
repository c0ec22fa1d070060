#pragma once

// Objects indexed by hypothetical zeros rho = sigma + i tau with sigma > 1/2
// ("Blaschke zeros"). A SyntheticZeroSet lists one representative per
// conjugate pair; every product and sum below runs over rho and conj(rho).
// The empty set is the Riemann-hypothesis case: products are 1, sums 0.

#include <filesystem>
#include <vector>

#include "critline/errors.hpp"
#include "critline/quadrature.hpp"

namespace critline {

class SyntheticZeroSet {
 public:
  SyntheticZeroSet() = default;
  /// Validates 1/2 < sigma <= 1 and tau != 0 for every entry.
  explicit SyntheticZeroSet(std::vector<ComplexValue> zeros);

  const std::vector<ComplexValue>& zeros() const noexcept { return zeros_; }
  bool empty() const noexcept { return zeros_.empty(); }

  /// Every member including conjugates: rho_1, conj(rho_1), rho_2, ...
  std::vector<ComplexValue> with_conjugates() const;

 private:
  std::vector<ComplexValue> zeros_;
};

/// Reads `sigma,tau` rows (a header line is optional).
SyntheticZeroSet load_synthetic_zeros_csv(const std::filesystem::path& path);

/// B(s) = prod (1 - s/rho) / (1 - s/(1 - conj rho)) |rho / (1 - rho)|, Re(s) >= 1/2.
ComplexValue blaschke_B(ComplexValue s, const SyntheticZeroSet& zs);
/// B'(s)/B(s) = sum [1/(s - rho) - 1/(s - 1 + conj rho)].
ComplexValue blaschke_log_derivative(ComplexValue s, const SyntheticZeroSet& zs);
/// -log B(1) = sum log|rho / (1 - rho)| (the Blaschke part of Omega).
double blaschke_omega(const SyntheticZeroSet& zs);

/// C(s) = prod (1 - s/rho)(1 - s/(1 - conj rho)) / (1 - 2s/(1 - conj rho + rho))^2.
ComplexValue c_product(ComplexValue s, const SyntheticZeroSet& zs);
/// C'(s)/C(s).
ComplexValue c_log_derivative(ComplexValue s, const SyntheticZeroSet& zs);
/// Closed form of C'_rho(1)/C_rho(1) + C'_conj(rho)(1)/C_conj(rho)(1):
/// -2 (3 tau^2 - sigma (1 - sigma)) (sigma - 1/2)^2
///   / (((1 - sigma)^2 + tau^2)(sigma^2 + tau^2)(1/4 + tau^2)).
double c_pair_log_derivative_closed_form(ComplexValue rho);

/// f_rho + f_conj(rho), f_rho = 2 log|rho/(1 - rho)| + 1/(1 - rho) - 1/conj(rho).
/// Requires 1/2 < sigma <= 1 and |tau| > 1.
double f_rho_pair(ComplexValue rho);
/// The same quantity from its integral representation over x in (1/2, sigma).
double f_rho_pair_integral(ComplexValue rho, double tol = 1e-13);

/// f12(x) = -sum [~Phi_rho + ~Phi_{1-conj rho} - 2 ~Phi_{(1+rho-conj rho)/2}],
/// f22(x) = -sum [~Phi_rho - ~Phi_{1-conj rho}]; x > 1. The complex variants
/// expose the imaginary residue, which cancels between conjugates.
ComplexValue f12_sum_complex(double x, const SyntheticZeroSet& zs);
ComplexValue f22_sum_complex(double x, const SyntheticZeroSet& zs);
double f12_sum(double x, const SyntheticZeroSet& zs);
double f22_sum(double x, const SyntheticZeroSet& zs);

/// sum {Theta(x, rho - r) - Theta(x, 1 - conj(rho) - r)}; x > 1.
ComplexValue theorem34_zero_sum(double x, ComplexValue r, const SyntheticZeroSet& zs);

struct N3NB {
  double n3 = 0.0;
  int nb = 0;
};

/// N3(t) = (1/2pi) int_{-t}^{t} B'/B(1/2 + iu) du by quadrature of the closed
/// form logarithmic derivative, and N_B(t) = #{rho, conj rho : |Im| <= t}.
/// Throws DomainError for t <= 0 or t equal to some |tau|.
N3NB n3_and_nb(double t, const SyntheticZeroSet& zs, const QuadratureSpec& quad);

/// Polynomial G(s) = prod (1 - s/rho)(1 - s/conj rho)(1 - s/(1-rho))(1 - s/(1-conj rho)).
/// F = zeta * G is an entire-modulo-pole model function whose zeros in
/// Re(s) > 1/2 are exactly the synthetic ones; it is used to check the
/// balance identities term by term. G(1) = 1.
ComplexValue synthetic_G(ComplexValue s, const SyntheticZeroSet& zs);
ComplexValue synthetic_G_log_derivative(ComplexValue s, const SyntheticZeroSet& zs);
double log_abs_synthetic_G_on_line(double u, const SyntheticZeroSet& zs);
/// Number of zeros of G with 0 <= Im <= t in the critical strip (two per entry).
int synthetic_zero_count(double t, const SyntheticZeroSet& zs);

}  // namespace critline
