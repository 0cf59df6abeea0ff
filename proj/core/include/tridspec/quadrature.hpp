#pragma once

#include <optional>
#include <vector>

#include "tridspec/systems.hpp"
#include "tridspec/tridiag.hpp"

namespace tridspec::quadrature {

/// Gauss rule in the class's natural variable y; weights are with respect to
/// the normalized measure xi(y) dy (sum to 1).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

/// K-point rule from the K x K truncated Jacobi matrix of the class's basis
/// polynomial family; weights via the eigenvalue-only deletion formula.
/// Results are cached per (class, K); the cache is safe for concurrent reads.
GaussRule gauss_rule(const systems::SystemClass& c, int order);

struct BasisIntegrals {
  std::optional<std::vector<double>> exact;  ///< F_m when closed forms exist
  std::vector<double> approx;                ///< G_m^K
  int order = 0;
};

/// F_m (exact, when available) and the K-point quadrature approximations
/// G_m^K of the basis integrals over the class domain, m = 0..m_max.
BasisIntegrals basis_integrals(const systems::SystemClass& c, int m_max, int order);

/// Quadrature of an integrand given in configuration space:
/// integral of f(x) dx over the class domain, computed as
/// domain_factor * sum_k w_k f(x(tau_k)) / (xi(tau_k) y'(tau_k)).
double integrate_configuration(const systems::SystemClass& c, const GaussRule& rule,
                               const std::function<double(double)>& f);

}  // namespace tridspec::quadrature
