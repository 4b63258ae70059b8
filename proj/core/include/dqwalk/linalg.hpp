#pragma once

#include "dqwalk/matrix.hpp"

#include <vector>

namespace dqw {

struct EigenPair {
  double value = 0.0;
  int multiplicity = 0;
  Matrix projector;  // symmetric idempotent onto the clustered eigenspace
};

struct SpectralDecomposition {
  Matrix source;
  std::vector<EigenPair> pairs;  // sorted by eigenvalue, largest first
  double cluster_tol = 0.0;      // effective clustering tolerance used
};

// 1e-8 * max(1, ||m||_inf); spectra at this scale are well separated.
double default_cluster_tol(const Matrix& m);

// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations,
// with nearby eigenvalues merged into one projector. cluster_tol <= 0 picks
// the default rule. Deterministic: identical input gives identical output.
SpectralDecomposition symmetric_eig(const Matrix& m, double cluster_tol = 0.0);

// exp(t*s) for skew-symmetric s, by scaling and squaring with a truncated
// Taylor series. The result is orthogonal with determinant 1.
Matrix expm_skew(const Matrix& s, double t);

struct BasisExpansion {
  std::vector<double> coefficients;
  double residual = 0.0;
  int gram_rank = 0;
};

// Least-squares expansion of k in a (possibly linearly dependent) matrix
// basis under the trace inner product. Solves the Gram system with pivoted
// elimination, dropping pivots below 1e-10 of the largest; coefficients on
// dropped directions are zero.
BasisExpansion expand_in_basis(const Matrix& k, const std::vector<Matrix>& basis);

// Principal logarithm of a real orthogonal matrix: the unique skew-symmetric
// K with exp(K) = q and spectrum in i*(-pi, pi). Refuses matrices with an
// eigenvalue at -1, where the principal branch is undefined. Computed from
// the spectral decomposition of the symmetric part of q.
Matrix principal_log_orthogonal(const Matrix& q);

}  // namespace dqw
