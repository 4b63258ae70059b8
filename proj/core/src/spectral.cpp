#include "dqwalk/spectral.hpp"

#include "dqwalk/errors.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace dqw {

namespace {

using complex = std::complex<double>;

// Relative margin separating "equals +-k" from "strictly inside the circle".
bool is_extreme_eigenvalue(double lambda, int degree) {
  return degree - std::abs(lambda) <= 1e-8 * degree;
}

ComplexMatrix incidence_combination(const ArcSpace& space, complex head_weight) {
  // tail_incidence - head_weight * head_incidence, as a complex matrix.
  ComplexMatrix w(space.graph.n, static_cast<std::size_t>(space.arc_count()));
  for (int a = 0; a < space.arc_count(); ++a) {
    w(space.arcs[a].tail, a) += 1.0;
    w(space.arcs[a].head, a) -= head_weight;
  }
  return w;
}

ComplexMatrix lifted_projection(const ArcSpace& space, const Matrix& projector, double scale,
                                complex head_weight) {
  const ComplexMatrix combo = incidence_combination(space, head_weight);
  ComplexMatrix f = combo.adjoint() * projector.to_complex() * combo;
  f *= complex(scale, 0.0);
  return f;
}

}  // namespace

WalkEigenpair walk_eigenprojections(const EigenPair& pair, int degree, const ArcSpace& space) {
  if (is_extreme_eigenvalue(pair.value, degree))
    throw ValidationError("walk_eigenprojections: eigenvalue " + std::to_string(pair.value) +
                          " equals +-degree; the lift requires |lambda| < k");

  WalkEigenpair walk;
  walk.lambda = pair.value;
  walk.multiplicity = pair.multiplicity;
  walk.theta = std::acos(std::clamp(pair.value / degree, -1.0, 1.0));
  const double sin_theta = std::sin(walk.theta);
  const double scale = 1.0 / (2.0 * degree * sin_theta * sin_theta);
  const complex phase = std::polar(1.0, walk.theta);

  // F_+ = scale * (Dt - e^{i theta} Dh)^T E (Dt - e^{-i theta} Dh). With real
  // incidence matrices the transposed left factor is exactly the adjoint of
  // the right factor, so each projection is adjoint(W) * E * W for one W.
  walk.projection_plus = lifted_projection(space, pair.projector, scale, std::conj(phase));
  walk.projection_minus = lifted_projection(space, pair.projector, scale, phase);

  const ComplexMatrix& plus = walk.projection_plus;
  if ((plus - plus.adjoint()).frobenius() > 1e-9)
    throw ConsistencyError("walk eigenprojection is not Hermitian");
  if ((plus * plus - plus).frobenius() > 1e-9)
    throw ConsistencyError("walk eigenprojection is not idempotent");
  if ((walk.projection_minus - plus.conjugate()).frobenius() > 1e-12)
    throw ConsistencyError("walk eigenprojections are not conjugates of each other");
  if (std::abs(plus.trace() - complex(pair.multiplicity, 0.0)) > 1e-8)
    throw ConsistencyError("walk eigenprojection trace does not match the multiplicity");
  return walk;
}

bool verify_walk_projections(const std::vector<WalkEigenpair>& pairs, const Matrix& walk) {
  const ComplexMatrix u = walk.to_complex();
  std::vector<const ComplexMatrix*> all;
  for (const WalkEigenpair& pair : pairs) {
    const complex phase = std::polar(1.0, pair.theta);
    if ((u * pair.projection_plus - phase * pair.projection_plus).frobenius() > 1e-9) return false;
    if ((u * pair.projection_minus - std::conj(phase) * pair.projection_minus).frobenius() > 1e-9)
      return false;
    all.push_back(&pair.projection_plus);
    all.push_back(&pair.projection_minus);
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b)
      if (a != b && (*all[a] * *all[b]).frobenius() > 1e-9) return false;
  return true;
}

SkewLambda skew_lambda(const EigenPair& pair, const ArcSpace& space) {
  const Matrix tail = space.tail_incidence.to_real();
  const Matrix head = space.head_incidence.to_real();
  // head^T E tail is exactly the transpose of tail^T E head, so building the
  // lift as m - m^T keeps it skew-symmetric to the last bit.
  const Matrix m = tail.transpose() * pair.projector * head;
  SkewLambda lift;
  lift.lambda = pair.value;
  lift.skew = m - m.transpose();

  const int degree = space.graph.degree;
  if (!is_extreme_eigenvalue(pair.value, degree)) {
    const WalkEigenpair walk = walk_eigenprojections(pair, degree, space);
    // Expanding the two projection displays leaves only the cross terms:
    // F_+ - F_- = (i / (k sin theta)) * lift. The factor is re-verified here
    // because only "imaginary scalar multiple" is guaranteed a priori.
    ComplexMatrix difference = walk.projection_plus - walk.projection_minus;
    const complex factor(0.0, 1.0 / (degree * std::sin(walk.theta)));
    difference -= factor * lift.skew.to_complex();
    if (difference.frobenius() > 1e-9)
      throw ConsistencyError("projection difference is not i/(k sin theta) times the skew lift");
  }
  return lift;
}

DualEigenvalues dual_eigenvalues(const SpectralDecomposition& dec, const DistanceMatrixSet& dm) {
  const std::size_t n = dec.source.rows();
  DualEigenvalues dual;
  for (const EigenPair& pair : dec.pairs) {
    std::vector<double> row;
    for (const IntMatrix& cls : dm.classes) {
      bool found = false;
      double reference = 0.0;
      for (std::size_t u = 0; u < n && !found; ++u)
        for (std::size_t v = 0; v < n && !found; ++v)
          if (cls(u, v) != 0) {
            reference = pair.projector(u, v);
            found = true;
          }
      if (!found) throw ConsistencyError("empty distance class");
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (cls(u, v) != 0 && std::abs(pair.projector(u, v) - reference) > 1e-9)
            throw ValidationError(
                "eigenprojection entries are not constant on a distance class; the graph is not "
                "distance-regular (or clustering failed)");
      row.push_back(static_cast<double>(n) * reference);
    }
    dual.q.push_back(std::move(row));
  }

  for (std::size_t r = 0; r < dec.pairs.size(); ++r) {
    Matrix reconstructed(n, n);
    for (std::size_t i = 0; i < dm.classes.size(); ++i)
      reconstructed += (dual.q[r][i] / static_cast<double>(n)) * dm.classes[i].to_real();
    if ((reconstructed - dec.pairs[r].projector).frobenius() > 1e-9)
      throw ConsistencyError("dual eigenvalues do not reconstruct the projector");
  }
  return dual;
}

BasisExpansion verify_span_membership(const SkewLambda& lift,
                                      const DistanceDigraphFamily& family) {
  const int diameter = family.max_index() - 1;
  std::vector<Matrix> basis;
  for (int i = 1; i <= diameter; ++i) basis.push_back(family.skew[i].to_real());
  BasisExpansion expansion = expand_in_basis(lift.skew, basis);
  if (expansion.residual >= 1e-9)
    throw ConsistencyError("skew lift is not in the span of S(Y_1)..S(Y_d): residual " +
                           std::to_string(expansion.residual));
  return expansion;
}

}  // namespace dqw
