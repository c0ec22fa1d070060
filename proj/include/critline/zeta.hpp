#pragma once

// Riemann zeta function for Re(s) > 0 by Euler-Maclaurin summation, and the
// derived quantities on the critical line.
//
// Error model: with N = ceil((|s| + 60)/pi) direct terms and up to 30
// Bernoulli corrections the truncation error is below 2^-60 of the leading
// term; what remains is rounding in the O(N) summation, i.e. an absolute
// error of a few ulp times sum |n^-s| (about 1e-14 for |Im s| <= 50 and
// about 1e-12 at |Im s| = 5000). Cost is O(|Im s|) complex exponentials.

#include <utility>

#include "critline/errors.hpp"

namespace critline {

struct ZeroTable;

/// zeta(s) for Re(s) > 0, s != 1. Throws DomainError otherwise.
ComplexValue zeta(ComplexValue s);

/// (zeta(s), zeta'(s)) from the termwise-differentiated expansion.
std::pair<ComplexValue, ComplexValue> zeta_and_derivative(ComplexValue s);

/// Hardy's function Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t.
/// Throws std::logic_error if the rotated value has an imaginary part larger
/// than 1e-8 * max(1, |zeta|), which would indicate a broken evaluation.
double hardy_Z(double t);

/// log|zeta(1/2 + iu)| evaluated directly (no cache); -inf at a zero.
double log_abs_zeta_half_direct(double u);

/// xi(s) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s) for Re(s) > 0, with the
/// removable value xi(1) = 1/2.
ComplexValue xi(ComplexValue s);

/// exp[ log|zeta(1/2+it)| + i (pi N(t) - theta(t) - pi sign t) ], with N
/// taken from the zero table. t != 0 and t not a tabulated ordinate.
ComplexValue reconstruct_zeta_on_line(double t, const ZeroTable& zeros);

}  // namespace critline
