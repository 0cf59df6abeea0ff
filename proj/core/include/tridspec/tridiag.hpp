#pragma once

#include <vector>

#include "tridspec/errors.hpp"

namespace tridspec::tridiag {

/// Real symmetric tridiagonal matrix; only one off-diagonal stored.
struct TridiagonalMatrix {
  std::vector<double> diag;     ///< length N
  std::vector<double> offdiag;  ///< length N-1
};

struct EigenDecomposition {
  std::vector<double> values;            ///< ascending
  std::vector<double> first_components;  ///< first row of the orthonormal eigenvector matrix
};

/// Max-absolute Gershgorin bound (the ||m|| used by the accuracy contract).
double gershgorin_norm(const TridiagonalMatrix& m);

/// Number of eigenvalues strictly below x (Sturm sequence sign count).
int count_below(const TridiagonalMatrix& m, double x);

/// k-th smallest eigenvalue (0-based) by bisection, accurate to
/// ~1e-13 * max(1, ||m||).
double eigenvalue_at(const TridiagonalMatrix& m, int k);

/// All eigenvalues, ascending. Bisection on Sturm counts; parallel over
/// index ranges for large N.
std::vector<double> eigenvalues(const TridiagonalMatrix& m);

/// Eigenvalues in (lo, hi], ascending.
std::vector<double> eigenvalues_in(const TridiagonalMatrix& m, double lo, double hi);

/// Eigenvalues with indices [k_lo, k_hi] (0-based, inclusive), ascending.
std::vector<double> eigenvalues_index_range(const TridiagonalMatrix& m, int k_lo, int k_hi);

/// Implicit-shift QL with eigenvector accumulation; returns eigenvalues
/// ascending plus first components of the normalized eigenvectors.
/// Intended for moderate N (quadrature orders).
EigenDecomposition eigen_with_first_components(const TridiagonalMatrix& m);

/// Squared first components via the eigenvalue-only deletion formula
///   w_k = prod_m (tau_k - tilde_tau_m) / prod_{n != k} (tau_k - tau_n),
/// with tilde_tau the eigenvalues of the matrix with row/column 0 removed.
/// Log-space accumulation. Throws on (nearly) degenerate eigenvalues.
std::vector<double> first_components_by_deletion(const TridiagonalMatrix& m);

}  // namespace tridspec::tridiag
