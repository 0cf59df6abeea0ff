#pragma once

#include "tridspec/systems.hpp"

namespace tridspec::wavefunctions {

using recursion::InitialValues;

struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  double tail_estimate = 0.0;
};

/// Continuum wavefunction series f_0(E) sum_n P_n^{(alpha,beta)}(z) phi_n(lambda x).
/// Plain accumulation stops once 8 consecutive terms each contribute below
/// tol relative to the running value; conditionally convergent series fall
/// back to Abel summation with Richardson extrapolation in the Abel parameter.
/// Throws ConvergenceError past the term cap.
SeriesResult psi_continuous(const systems::SystemClass& c, InitialValues iv, double energy,
                            double x, double tol, int n_cap = 200000);

/// Bound-state series. At the reference initial values the closed-form z_j is
/// used with g_0 = sqrt(omega_j). At modified values z_j comes from the
/// row-replaced Hamiltonian spectrum, the coefficients are the matching
/// orthonormal family, and the state is L2-normalized via Parseval.
/// Slowly convergent (near-threshold) series are resummed by iterated
/// full-period Cesaro averaging.
SeriesResult psi_discrete(const systems::SystemClass& c, InitialValues iv, int j, double x,
                          double tol, int n_cap = 200000);

/// Closed-form reference wavefunctions for oracle comparison (reference
/// initial values only): cos/sin(kx), sqrt(kr) J_{l+1/2}(kr).
double reference_closed_form_continuous(const systems::SystemClass& c, double energy, double x);

/// Bound-state closed forms: normalized oscillator eigenfunction; Morse bound
/// state with the finite Bessel polynomial.
double reference_closed_form_discrete(const systems::SystemClass& c, int j, double x);

}  // namespace tridspec::wavefunctions
