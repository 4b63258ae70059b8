#pragma once

#include "dqwalk/arc_space.hpp"
#include "dqwalk/graph.hpp"
#include "dqwalk/linalg.hpp"
#include "dqwalk/matrix.hpp"

#include <vector>

namespace dqw {

// Lift of one adjacency eigenpair (|lambda| < k) to the pair of walk
// eigenprojections at e^{+-i*theta}, lambda = k*cos(theta), theta in (0,pi).
struct WalkEigenpair {
  double lambda = 0.0;
  double theta = 0.0;
  int multiplicity = 0;
  ComplexMatrix projection_plus;   // eigenprojection at e^{i*theta}
  ComplexMatrix projection_minus;  // eigenprojection at e^{-i*theta}
};

WalkEigenpair walk_eigenprojections(const EigenPair& pair, int degree, const ArcSpace& space);

// Checks walk * F_+ = e^{i*theta} F_+ (and the conjugate equation) for every
// listed pair, plus mutual orthogonality of all listed projections.
bool verify_walk_projections(const std::vector<WalkEigenpair>& pairs, const Matrix& walk);

// The real skew-symmetric lift tail^T E head - head^T E tail of an adjacency
// eigenprojection. For |lambda| < k this equals (k sin theta / i) times the
// difference of the two walk eigenprojections; that identity is re-verified
// numerically on every call.
struct SkewLambda {
  double lambda = 0.0;
  Matrix skew;
};

SkewLambda skew_lambda(const EigenPair& pair, const ArcSpace& space);

// Coefficients q[r][i] expressing each eigenprojection as
// (1/n) * sum_i q[r][i] * A_i; rows follow the decomposition's pair order.
// Entries of a projection must be constant on each distance class, which
// itself certifies distance regularity of the input.
struct DualEigenvalues {
  std::vector<std::vector<double>> q;
};

DualEigenvalues dual_eigenvalues(const SpectralDecomposition& dec, const DistanceMatrixSet& dm);

// Expands the skew lift in {S(Y_1)..S(Y_d)} (d = graph diameter); a residual
// at or above 1e-9 is a theorem violation and throws.
BasisExpansion verify_span_membership(const SkewLambda& lift, const DistanceDigraphFamily& family);

}  // namespace dqw
