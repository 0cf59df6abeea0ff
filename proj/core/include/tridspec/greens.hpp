#pragma once

#include <complex>

#include "tridspec/recursion.hpp"

namespace tridspec::greens {

using Complex = std::complex<double>;
using recursion::CoefficientStream;
using recursion::InitialValues;

/// Contractive/Herglotz branch of the continued-fraction tail
///   T(z) = (z - a_inf)/2 +- (1/2) sqrt((z - a_inf)^2 - 4 b_inf^2).
/// Off the support the root with |T| <= |b_inf| is taken; on the support the
/// branch gives Im T <= 0 for Im z >= 0 so that each CF level preserves
/// Im G >= 0. Throws on b_inf = 0.
Complex terminator(double a_inf, double b_inf, Complex z);

/// Reference Green's function by bottom-up continued fraction with `depth`
/// levels. The terminator uses the stream's limit_hint when present, else the
/// rough (a_N, b_N) approximation.
Complex green_reference(const CoefficientStream& s, Complex z, int depth);

/// Resolvent (0,0) element of the row-replaced matrix (diag_0 = beta/alpha,
/// offdiag_0 = 1/alpha): the spectra-side Green's function whose spectral
/// measure is a probability measure.
Complex green_row_replaced(const CoefficientStream& s, InitialValues iv, Complex z, int depth);

/// Modified (co-recursive) Green's function. Two algebraically equivalent
/// routes are evaluated: path A = G_ref / (1 + W G_ref) and path B = the
/// alternative continued fraction with a_0 -> beta/alpha, b_0^2 -> b_0/alpha
/// scaled by 1/(alpha b_0). They must agree to 1e-8 relative (a disagreement
/// signals pole proximity); path B is returned.
Complex green_modified(const CoefficientStream& s, InitialValues iv, Complex z, int depth);

/// rho = Im(g) / pi.
double weight_from_green(Complex g);

/// Continuous weight of the co-recursive measure via the Wronskian transform
///   rho^{(a,b)}(z) = rho_ref(z) / |1 + W(z) G_ref(z + i eps)|^2,
/// given the analytic reference weight. Raises a diagnostic error when the
/// computed weight is negative.
double weight_modified_analytic(const CoefficientStream& s, InitialValues iv, double z,
                                double rho_ref, int depth, double eps = 1e-9);

/// Same weight with the reference density also taken from the continued
/// fraction (used when no analytic reference is available).
double weight_modified_numeric(const CoefficientStream& s, InitialValues iv, double z, int depth,
                               double eps = 1e-7);

/// On-support spectral density of an unbounded (a_n, b_n ~ n^gamma) stream:
/// Im G / pi averaged over one reflection period in depth (the rough
/// terminator leaves an O(1/sqrt(N)) oscillation in N that the average
/// removes). `samples` CF evaluations are spread over the window.
double rho_reference_depth_averaged(const CoefficientStream& s, double z, int base_depth,
                                    double eps = 1e-7, int samples = 48);

enum class MassPointFamily {
  kCoRecursive,  ///< measure of the co-recursive polynomials (kernel has alpha*b0 on P_0^2)
  kRowReplaced,  ///< measure of the row-replaced matrix (plain kernel)
};

struct MassPointResult {
  double weight;
  int n_star;      ///< optimal truncation index
  double quality;  ///< min-term / sum at truncation (convergence figure)
};

/// Mass (spectral weight) of an isolated point z_point, via the reciprocal
/// Christoffel kernel sum with optimal truncation at the minimum term.
/// Throws ConvergenceError when no plateau forms (z_point is not an atom).
MassPointResult mass_point_weight(const CoefficientStream& s, InitialValues iv, double z_point,
                                  int n_cap = 20000,
                                  MassPointFamily family = MassPointFamily::kRowReplaced);

}  // namespace tridspec::greens
