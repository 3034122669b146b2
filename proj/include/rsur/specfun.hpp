#pragma once

// Real special functions needed by the closed-form fields.

namespace rsur::specfun {

/// Dawson function D(w) = exp(-w^2) * int_0^w exp(t^2) dt.
/// Absolute error below 1e-13 for |w| <= 50. Throws DomainError for NaN/inf.
double dawson(double w);

/// Imaginary error function erfi(w) = -i erf(i w).
/// Throws OverflowError when |w| exceeds erfi_overflow_threshold().
double erfi(double w);

/// Largest |w| for which erfi(w) is finite in double precision.
double erfi_overflow_threshold();

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
double laguerre(unsigned n, double alpha, double x);

}  // namespace rsur::specfun
