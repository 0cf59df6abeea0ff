#pragma once

#include <string>
#include <vector>

#include "tridspec/quadrature.hpp"
#include "tridspec/systems.hpp"

namespace tridspec::potentials {

using recursion::InitialValues;

/// The only non-zero induced-potential matrix elements:
///   v00 = (lambda^2/2)(beta/alpha - a_0), v01 = (lambda^2/2)(1/alpha - b_0).
struct PotentialMatrixElements {
  double v00;
  double v01;
};

PotentialMatrixElements matrix_elements(const systems::SystemClass& c, InitialValues iv);

enum class PotentialMode { kExact, kQuadrature };

/// Induced potential assembled from the three matrix elements:
///   V(x) = v00 F_0 phi_0(x) + v01 [F_0 phi_1(x) + F_1 phi_0(x)],
/// with exact F_m (mode kExact) or the K-point quadrature G_m^K. Classes
/// without closed-form F fall back to quadrature in exact mode;
/// `quadrature_fallback`, when given, reports that.
double induced_potential(const systems::SystemClass& c, InitialValues iv, double x,
                         PotentialMode mode, int order = 64,
                         bool* quadrature_fallback = nullptr);

/// Literal printed closed forms of the induced potential for the five
/// physical classes (cross-check only; the assembly is normative).
double printed_closed_form(const systems::SystemClass& c, InitialValues iv, double x);

/// Reference potential of the class plus the induced part.
double total_potential(const systems::SystemClass& c, InitialValues iv, double x);

struct Discrepancy {
  std::string equation;       ///< which printed formula
  double max_abs_difference;  ///< against the exact assembly on the probe grid
  bool expected_mismatch;     ///< true for the odd-parity printed form
};

/// Compare the printed closed form against the exact assembly over a grid.
Discrepancy closed_form_discrepancy(const systems::SystemClass& c, InitialValues iv,
                                    const std::vector<double>& grid);

}  // namespace tridspec::potentials
