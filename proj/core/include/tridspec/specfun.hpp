#pragma once

#include <complex>
#include <vector>

#include "tridspec/errors.hpp"

namespace tridspec::specfun {

using Complex = std::complex<double>;

/// Principal-branch log Gamma via a Lanczos rational approximation with
/// reflection for Re z < 1/2. Relative accuracy ~1e-13 for |z| <= 50.
/// Throws PoleError at non-positive integers on the real axis, DomainError
/// on non-finite input.
Complex log_gamma(Complex z);

/// Real log Gamma for x > 0 (wraps the same approximation).
double log_gamma(double x);

/// |Gamma(z)|^2 = exp(2 Re log_gamma(z)).
double abs_gamma_sq(Complex z);

/// Pochhammer symbol (c)_n as an iterated product. n >= 0.
double pochhammer(double c, int n);

/// Generalized Laguerre polynomial L_n^nu(y) by forward recurrence.
/// Pre: n >= 0, nu > -1.
double laguerre(int n, double nu, double y);

/// Physicists' Hermite polynomial H_n(y) by forward recurrence.
double hermite(int n, double y);

/// Hermite functions e^{-t^2/2} H_m(t) / sqrt(2^m m! sqrt(pi)), m = 0..m_max,
/// by the orthonormal three-term recurrence (no factorials, no overflow).
std::vector<double> hermite_functions(int m_max, double t);

/// Weighted orthonormal Laguerre sequence
///   chi_n(y) = sqrt(n! / Gamma(n+nu+1)) y^{nu/2} e^{-y/2} L_n^nu(y),
/// n = 0..n_max; orthonormal on (0, inf) dy. Prefactor in log space.
std::vector<double> laguerre_functions(int n_max, double nu, double y);

/// Terminating generalized hypergeometric sum
///   sum_{m=0}^{n} [prod_i (a_i)_m / prod_j (b_j)_m] arg^m / m!.
/// One numerator parameter must equal -n (within 1e-9); throws InvariantError
/// otherwise and PoleError if a denominator hits a non-positive integer
/// before termination. Kahan-compensated accumulation.
Complex hyp_terminating(const std::vector<Complex>& numerators,
                        const std::vector<Complex>& denominators,
                        Complex arg, int n);

/// Real-parameter convenience overload.
double hyp_terminating(const std::vector<double>& numerators,
                       const std::vector<double>& denominators,
                       double arg, int n);

/// Half-integer Bessel function J_{l+1/2}(x), x > 0, via the closed
/// trigonometric forms for l = 0, 1 and upward/downward (Miller) recurrence
/// beyond; downward is used for x < l to preserve stability.
double bessel_j_half(int l, double x);

}  // namespace tridspec::specfun
