#include "dqwalk/linalg.hpp"

#include "dqwalk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dqw {

namespace {

constexpr int kMaxJacobiSweeps = 60;
constexpr int kTaylorTerms = 18;

double offdiag_frobenius(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

void require_symmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw ValidationError("symmetric_eig requires a square matrix");
  if (!m.all_finite()) throw ValidationError("symmetric_eig requires finite entries");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
  if (worst > tol)
    throw ValidationError("symmetric_eig: input deviates from its transpose by " +
                          std::to_string(worst));
}

// One two-sided rotation in the (p,q) plane annihilating a(p,q), with the
// eigenvector accumulator updated on the right.
void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {  // columns p, q of a
    const double aip = a(i, p), aiq = a(i, q);
    a(i, p) = c * aip - s * aiq;
    a(i, q) = s * aip + c * aiq;
  }
  for (std::size_t j = 0; j < n; ++j) {  // rows p, q of a
    const double apj = a(p, j), aqj = a(q, j);
    a(p, j) = c * apj - s * aqj;
    a(q, j) = s * apj + c * aqj;
  }
  for (std::size_t i = 0; i < n; ++i) {  // columns p, q of v
    const double vip = v(i, p), viq = v(i, q);
    v(i, p) = c * vip - s * viq;
    v(i, q) = s * vip + c * viq;
  }
}

}  // namespace

double default_cluster_tol(const Matrix& m) { return 1e-8 * std::max(1.0, m.norm_inf()); }

SpectralDecomposition symmetric_eig(const Matrix& m, double cluster_tol) {
  require_symmetric(m, 1e-12);
  const std::size_t n = m.rows();
  const double tol = cluster_tol > 0.0 ? cluster_tol : default_cluster_tol(m);

  Matrix a = m;
  Matrix v = Matrix::identity(n);
  const double target = 1e-13 * m.frobenius();
  bool converged = offdiag_frobenius(a) <= target;
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    converged = offdiag_frobenius(a) <= target;
  }
  if (!converged) throw ConsistencyError("symmetric_eig: Jacobi iteration did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SpectralDecomposition dec;
  dec.source = m;
  dec.cluster_tol = tol;

  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && a(order[stop], order[stop]) - a(order[stop - 1], order[stop - 1]) <= tol)
      ++stop;
    EigenPair pair;
    pair.multiplicity = static_cast<int>(stop - start);
    double sum = 0.0;
    Matrix projector(n, n);
    for (std::size_t r = start; r < stop; ++r) {
      const std::size_t col = order[r];
      sum += a(col, col);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) projector(i, j) += v(i, col) * v(j, col);
    }
    pair.value = sum / static_cast<double>(pair.multiplicity);
    pair.projector = std::move(projector);
    dec.pairs.push_back(std::move(pair));
    start = stop;
  }
  std::reverse(dec.pairs.begin(), dec.pairs.end());  // largest eigenvalue first

  for (const EigenPair& pair : dec.pairs) {
    if ((pair.projector * pair.projector - pair.projector).frobenius() > 1e-9)
      throw ConsistencyError("symmetric_eig: projector is not idempotent");
    if (std::abs(pair.projector.trace() - pair.multiplicity) > 1e-8)
      throw ConsistencyError("symmetric_eig: projector trace does not match multiplicity");
  }
  Matrix id_sum(n, n);
  Matrix reconstructed(n, n);
  for (const EigenPair& pair : dec.pairs) {
    id_sum += pair.projector;
    reconstructed += pair.value * pair.projector;
  }
  if ((id_sum - Matrix::identity(n)).frobenius() > 1e-9)
    throw ConsistencyError("symmetric_eig: projectors do not sum to the identity");
  if ((reconstructed - m).frobenius() > 1e-9 * (1.0 + m.frobenius()))
    throw ConsistencyError("symmetric_eig: spectral reconstruction failed");
  for (std::size_t r = 0; r < dec.pairs.size(); ++r)
    for (std::size_t s = r + 1; s < dec.pairs.size(); ++s)
      if ((dec.pairs[r].projector * dec.pairs[s].projector).frobenius() > 1e-9)
        throw ConsistencyError("symmetric_eig: projectors are not mutually orthogonal");

  return dec;
}

Matrix expm_skew(const Matrix& s, double t) {
  if (s.rows() != s.cols()) throw ValidationError("expm_skew requires a square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = i; j < s.cols(); ++j)
      worst = std::max(worst, std::abs(s(i, j) + s(j, i)));
  if (worst > 1e-12)
    throw ValidationError("expm_skew: input deviates from skew symmetry by " +
                          std::to_string(worst));

  const std::size_t n = s.rows();
  Matrix x = t * s;
  int squarings = 0;
  double eta = x.norm_1();
  while (eta > 0.5) {
    eta *= 0.5;
    ++squarings;
  }
  x *= std::ldexp(1.0, -squarings);

  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int j = 1; j <= kTaylorTerms; ++j) {
    term = (1.0 / static_cast<double>(j)) * (term * x);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;

  if ((result.transpose() * result - Matrix::identity(n)).frobenius() > 1e-10)
    throw ConsistencyError("expm_skew: result is not orthogonal");
  if (std::abs(determinant(result) - 1.0) > 1e-8)
    throw ConsistencyError("expm_skew: result determinant is not 1");
  return result;
}

BasisExpansion expand_in_basis(const Matrix& k, const std::vector<Matrix>& basis) {
  if (basis.empty()) throw ValidationError("expand_in_basis: empty basis");
  for (const Matrix& b : basis)
    if (b.rows() != k.rows() || b.cols() != k.cols())
      throw ValidationError("expand_in_basis: basis element shape mismatch");

  const std::size_t b = basis.size();
  Matrix gram(b, b);
  std::vector<double> rhs(b);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i; j < b; ++j) {
      const double g = trace_inner(basis[i], basis[j]);
      gram(i, j) = g;
      gram(j, i) = g;
    }
    rhs[i] = trace_inner(basis[i], k);
  }

  // Gaussian elimination with complete pivoting; pivots below 1e-10 of the
  // largest are treated as rank deficiency and their columns stay at zero.
  std::vector<std::size_t> col_of(b);
  std::iota(col_of.begin(), col_of.end(), 0);
  std::size_t rank = 0;
  double pivot_floor = -1.0;
  for (std::size_t step = 0; step < b; ++step) {
    std::size_t pi = step, pj = step;
    double best = -1.0;
    for (std::size_t i = step; i < b; ++i)
      for (std::size_t j = step; j < b; ++j)
        if (std::abs(gram(i, j)) > best) {
          best = std::abs(gram(i, j));
          pi = i;
          pj = j;
        }
    if (pivot_floor < 0.0) pivot_floor = 1e-10 * best;
    if (best <= pivot_floor || best == 0.0) break;
    if (pi != step) {
      for (std::size_t j = 0; j < b; ++j) std::swap(gram(pi, j), gram(step, j));
      std::swap(rhs[pi], rhs[step]);
    }
    if (pj != step) {
      for (std::size_t i = 0; i < b; ++i) std::swap(gram(i, pj), gram(i, step));
      std::swap(col_of[pj], col_of[step]);
    }
    for (std::size_t i = step + 1; i < b; ++i) {
      const double f = gram(i, step) / gram(step, step);
      if (f == 0.0) continue;
      for (std::size_t j = step; j < b; ++j) gram(i, j) -= f * gram(step, j);
      rhs[i] -= f * rhs[step];
    }
    ++rank;
  }

  std::vector<double> pivoted(b, 0.0);
  for (std::size_t r = rank; r-- > 0;) {
    double acc = rhs[r];
    for (std::size_t j = r + 1; j < rank; ++j) acc -= gram(r, j) * pivoted[j];
    pivoted[r] = acc / gram(r, r);
  }

  BasisExpansion out;
  out.coefficients.assign(b, 0.0);
  for (std::size_t r = 0; r < rank; ++r) out.coefficients[col_of[r]] = pivoted[r];
  out.gram_rank = static_cast<int>(rank);

  Matrix diff = k;
  for (std::size_t i = 0; i < b; ++i)
    if (out.coefficients[i] != 0.0) diff -= out.coefficients[i] * basis[i];
  out.residual = diff.frobenius();
  return out;
}

Matrix principal_log_orthogonal(const Matrix& q) {
  if (q.rows() != q.cols()) throw ValidationError("principal_log_orthogonal: square input required");
  const std::size_t n = q.rows();
  if ((q.transpose() * q - Matrix::identity(n)).frobenius() > 1e-10)
    throw ValidationError("principal_log_orthogonal: input is not orthogonal");

  // An orthogonal matrix splits into planar rotations. The symmetric part
  // carries cos(angle) on each plane, the skew part sin(angle); rescaling
  // the skew part on each eigenspace of the symmetric part yields the log.
  Matrix sym = q;
  sym += q.transpose();
  sym *= 0.5;
  Matrix skew = q;
  skew -= q.transpose();
  skew *= 0.5;

  const SpectralDecomposition dec = symmetric_eig(sym);
  Matrix log(n, n);
  for (const EigenPair& pair : dec.pairs) {
    const double c = std::clamp(pair.value, -1.0, 1.0);
    if (c >= 1.0 - 1e-12) continue;  // angle 0, no contribution
    if (c <= -1.0 + 1e-8)
      throw ValidationError(
          "principal_log_orthogonal: eigenvalue -1, principal branch undefined");
    const double angle = std::acos(c);
    log += (angle / std::sin(angle)) * (pair.projector * skew * pair.projector);
  }
  log = 0.5 * (log - log.transpose());  // exact skew symmetry

  if ((expm_skew(log, 1.0) - q).frobenius() > 1e-9)
    throw ConsistencyError("principal_log_orthogonal: exp(log) does not reproduce the input");
  return log;
}

}  // namespace dqw
