#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace critline {

/// Scalar type for s, rho, alpha, r and every other complex argument.
using ComplexValue = std::complex<double>;

/// Argument outside the mathematical domain of an operation (poles, cuts,
/// violated preconditions).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested ordinate lies beyond the height covered by a table or cache.
class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// log|zeta(1/2+iu)| requested inside an excluded interval around a zero.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(double ordinate, double zero)
      : std::runtime_error("log|zeta| is singular near zero ordinate " +
                           std::to_string(zero)),
        ordinate_(ordinate),
        zero_(zero) {}

  double ordinate() const noexcept { return ordinate_; }
  double zero() const noexcept { return zero_; }

 private:
  double ordinate_;
  double zero_;
};

/// Adaptive quadrature gave up; the best available estimate is attached.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, ComplexValue best, double err)
      : std::runtime_error(what), best_(best), err_(err) {}

  ComplexValue best_value() const noexcept { return best_; }
  double error_estimate() const noexcept { return err_; }

 private:
  ComplexValue best_;
  double err_;
};

inline bool is_finite(ComplexValue z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace critline
