#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tridspec/recursion.hpp"

namespace tridspec::systems {

// ---------------------------------------------------------------------------
// The five implemented classes plus the bounded test class. All quantities in
// atomic units (hbar = m = 1); lambda is the basis scale (inverse length).
// ---------------------------------------------------------------------------

struct Free1DEven {
  double lambda;
};
struct Free1DOdd {
  double lambda;
};
struct Free3D {
  double lambda;
  int l;
};
struct Oscillator3D {
  double lambda;
  int l;
  double kappa;  ///< oscillator frequency; requires lambda^2 < kappa
  double sigma;  ///< (kappa - lambda^2) / (kappa + lambda^2), cached
};
struct Morse1D {
  double lambda;
  double mu;  ///< potential strength; bound states exist for mu < -1
  double nu;  ///< basis parameter; nu > 0, and nu > -(mu+1) when mu < -1
  int n_max;  ///< largest j of a bound state, or -1 when none
};
struct ChebyshevTest {};

using SystemClass =
    std::variant<Free1DEven, Free1DOdd, Free3D, Oscillator3D, Morse1D, ChebyshevTest>;

// Validating factories.
SystemClass make_free1d_even(double lambda);
SystemClass make_free1d_odd(double lambda);
SystemClass make_free3d(double lambda, int l);
SystemClass make_oscillator3d(double lambda, int l, double kappa);
SystemClass make_morse1d(double lambda, double mu, double nu);
SystemClass make_chebyshev_test();

std::string class_name(const SystemClass& c);
double scale_lambda(const SystemClass& c);  ///< lambda (1 for ChebyshevTest)

/// z = 2E / lambda^2.
double spectral_z(const SystemClass& c, double energy);
double energy_of_z(const SystemClass& c, double z);

/// Recursion coefficients (a_n, b_n) with alpha_hat = 1/b_0, beta_hat = a_0/b_0.
/// limit_hint is set to (0, 1/2) for ChebyshevTest only.
recursion::CoefficientStream coefficient_stream(const SystemClass& c);

/// Basis element phi_n(lambda x) evaluated by stable normalized recurrences.
double basis_value(const SystemClass& c, int n, double x);

/// phi_0..phi_{n_max} at fixed x (one recurrence sweep).
std::vector<double> basis_values(const SystemClass& c, int n_max, double x);

/// Analytic reference continuous weight rho^{(ahat,bhat)}(z); returns 0
/// outside the continuous support. Throws DomainError for Oscillator3D
/// (pure discrete spectrum).
double reference_weight(const SystemClass& c, double z);

struct DiscreteLevel {
  double energy;
  double weight;  ///< normalized spectral mass omega_j
};

/// Number of discrete levels: -1 for countably infinite (Oscillator3D),
/// 0 for none, n_max+1 for Morse with mu < -1.
int discrete_count(const SystemClass& c);

/// Closed-form E_j and omega_j. Throws for classes without a discrete
/// spectrum or j out of range. (Morse weights use the corrected Pochhammer
/// form; see morse_printed_weight for the literal one.)
DiscreteLevel discrete_spectrum(const SystemClass& c, int j);

/// The literal printed Morse mixed-spectrum weight expression (typo-prone;
/// surfaced for the diagnostics report, never used downstream).
double morse_printed_weight(const SystemClass& c, int j);

/// Closed-form reference spectral polynomial P_n^{(ahat,bhat)} at continuous z.
double closed_form_p(const SystemClass& c, int n, double z);

/// Same at the j-th discrete point z_j.
double closed_form_p_level(const SystemClass& c, int n, int j);

/// Continuum energy normalization f_0(E) from the identity
/// f_0^2 = C/lambda * sqrt(z) rho(z) with C = 2*pi (1D classes) or 2 (3D).
/// For Morse scattering the same 1D form is used; `heuristic` (when given)
/// is set true in that case.
double f0(const SystemClass& c, double energy, bool* heuristic = nullptr);

/// Bound-state normalization g_0(E_j) = sqrt(omega_j).
double g0(const SystemClass& c, int j);

/// Reference potential of the class (0 for free classes and ChebyshevTest;
/// the centrifugal term is part of the kinetic reference and not included).
double reference_potential(const SystemClass& c, double x);

// ---------------------------------------------------------------------------
// Natural quadrature variable y(x): (lambda x)^2 for the 1D parity classes,
// (lambda r)^2 in 3D, e^{-lambda x} for Morse, x itself for ChebyshevTest.
// ---------------------------------------------------------------------------
struct QuadBasisInfo {
  double nu;             ///< Laguerre parameter of q_n, NaN for ChebyshevTest
  double domain_factor;  ///< 2 for the 1D parity classes (both-sided measure), else 1
  bool has_exact_f;      ///< closed-form F_m available
};

QuadBasisInfo quad_basis_info(const SystemClass& c);
double jacobi_diag(const SystemClass& c, int n);     ///< K x K quadrature matrix diagonal
double jacobi_offdiag(const SystemClass& c, int n);  ///< and off-diagonal
double natural_y(const SystemClass& c, double x);
double x_of_y(const SystemClass& c, double y);
double yprime(const SystemClass& c, double y);  ///< dy/dx expressed through y
double xi_weight(const SystemClass& c, double y);
double q_ortho(const SystemClass& c, int n, double y);  ///< orthonormal q_n(y)

/// Exact F_m = integral of phi_m over the class domain (with the completeness
/// factor 2 for the 1D parity classes). Throws for ChebyshevTest.
double exact_basis_integral(const SystemClass& c, int m);

}  // namespace tridspec::systems
