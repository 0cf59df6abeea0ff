#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tridspec/systems.hpp"
#include "tridspec/tridiag.hpp"

namespace tridspec::spectra {

using recursion::InitialValues;

/// N x N total-Hamiltonian matrix: diag_n = (lambda^2/2) a_n,
/// offdiag_n = (lambda^2/2) b_n, with the row-0 replacement
/// diag_0 = (lambda^2/2)(beta/alpha), offdiag_0 = (lambda^2/2)(1/alpha).
tridiag::TridiagonalMatrix hamiltonian_matrix(const systems::SystemClass& c, InitialValues iv,
                                              int n);

struct BoundState {
  double energy;
  bool converged;
};

struct SpectrumReport {
  int matrix_size = 0;
  std::vector<double> eigenvalues;  ///< ascending; possibly windowed (see energy_window)
  std::vector<BoundState> bound_states;
  double continuum_edge = 0.0;
  std::optional<std::pair<double, double>> resonance_candidate;  ///< (energy, drift per unit alpha)
  double alpha = 0.0;                                            ///< sweep frames record alpha
};

/// Eigenvalues of the truncated Hamiltonian at N, classified against the 2N
/// truncation: entries whose nearest 2N partner moved less than
/// tol * max(1, |E|) are flagged converged. Discrete states below the
/// continuum edge become bound_states. An energy window may restrict the
/// report (sweeps); the full spectrum is reported when absent.
SpectrumReport energy_spectrum(const systems::SystemClass& c, InitialValues iv, int n,
                               double tol = 1e-6,
                               std::optional<std::pair<double, double>> energy_window = {});

/// Converged eigenvalues below -delta (delta = 1e-6 lambda^2), stable under
/// N -> 2N, paired with their spectral masses from the row-replaced kernel.
std::vector<std::pair<double, double>> find_induced_bound_states(const systems::SystemClass& c,
                                                                 InitialValues iv, int n);

struct CriticalAlphaStudy {
  std::vector<int> sizes;
  std::vector<double> alpha_cr;  ///< estimate at each size
};

/// Critical alpha above which no bound state is induced (beta fixed at
/// beta_hat): bisection on "find_induced_bound_states non-empty" at matrix
/// size `n`. When `study` is given, the estimate is repeated at n/4, n/2, n.
double critical_alpha(const systems::SystemClass& c, std::pair<double, double> search_interval,
                      double tol = 1e-4, int n = 4000, CriticalAlphaStudy* study = nullptr);

/// Per-alpha spectrum frames over [range.first, range.second] with
/// `steps` points; the drifting-outlier eigenvalue (index-tracked between
/// consecutive frames against the locally stationary continuum lattice) is
/// flagged as the resonance candidate. Frames too close to alpha = 0 are
/// skipped (the row replacement is singular there).
std::vector<SpectrumReport> sweep_alpha(const systems::SystemClass& c, double beta,
                                        std::pair<double, double> range, int steps, int n,
                                        double energy_cap = 200.0);

}  // namespace tridspec::spectra
