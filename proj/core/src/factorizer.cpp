#include "dqwalk/factorizer.hpp"

#include "dqwalk/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace dqw {

GroverWalk grover_walk(const ArcSpace& space) {
  const int k = space.graph.degree;
  if (k < 2) throw ValidationError("grover_walk: degree must be at least 2");
  const int arcs = space.arc_count();

  Matrix u = (2.0 / k) * line_digraph_adjacency(space).to_real();
  u -= space.reversal.to_real();

  // Same matrix through the reversal * coin form; the coin groups arcs by
  // their tail.
  const Matrix tail = space.tail_incidence.to_real();
  Matrix coin = (2.0 / k) * (tail.transpose() * tail);
  coin -= Matrix::identity(arcs);
  const Matrix via_coin = space.reversal.to_real() * coin;
  if ((u - via_coin).frobenius() > 1e-12)
    throw ConsistencyError("grover_walk: the two defining expressions disagree");
  if ((u.transpose() * u - Matrix::identity(arcs)).frobenius() > 1e-12)
    throw ConsistencyError("grover_walk: transition matrix is not orthogonal");

  GroverWalk walk;
  walk.degree = k;
  walk.transition = std::move(u);
  return walk;
}

bool invertibility_gate(const Graph& g, const SpectralDecomposition& dec) {
  for (const EigenPair& pair : dec.pairs)
    if (std::abs(pair.value) <= 1e-8 * g.degree) return false;
  return true;
}

Generator build_generator(const SpectralDecomposition& dec, const ArcSpace& space) {
  const int k = space.graph.degree;
  if (!invertibility_gate(space.graph, dec))
    throw ValidationError("adjacency matrix singular: the squared walk has no principal logarithm");

  const int arcs = space.arc_count();
  Generator gen;
  gen.skew = Matrix(arcs, arcs);
  for (const EigenPair& pair : dec.pairs) {
    if (k - std::abs(pair.value) <= 1e-8 * k) continue;  // theta in {0, pi} contributes nothing
    const double theta = std::acos(std::clamp(pair.value / k, -1.0, 1.0));
    const double coefficient = 2.0 * theta / (k * std::sin(theta));
    gen.skew -= coefficient * skew_lambda(pair, space).skew;
    gen.contributions.push_back(GeneratorContribution{pair.value, theta, coefficient});
  }
  gen.skew = 0.5 * (gen.skew - gen.skew.transpose());  // exact skew symmetry

  const GroverWalk walk = grover_walk(space);
  const Matrix squared = walk.transition * walk.transition;
  if ((expm_skew(gen.skew, 1.0) - squared).frobenius() > 1e-9)
    throw ConsistencyError("generator does not exponentiate to the squared walk");
  if ((gen.skew - generator_log_oracle(dec, space)).frobenius() > 1e-9)
    throw ConsistencyError("generator disagrees with the projection-log oracle");
  return gen;
}

Matrix generator_log_oracle(const SpectralDecomposition& dec, const ArcSpace& space) {
  const int k = space.graph.degree;
  const int arcs = space.arc_count();
  ComplexMatrix sum(arcs, arcs);
  for (const EigenPair& pair : dec.pairs) {
    if (k - std::abs(pair.value) <= 1e-8 * k) continue;
    const WalkEigenpair walk = walk_eigenprojections(pair, k, space);
    ComplexMatrix difference = walk.projection_plus - walk.projection_minus;
    difference *= std::complex<double>(0.0, 2.0 * walk.theta);
    sum += difference;
  }
  if (sum.imag_part().max_abs() > 1e-12)
    throw ConsistencyError("projection-log oracle produced a non-real generator");
  Matrix log = sum.real_part();
  return 0.5 * (log - log.transpose());
}

namespace {

// Each eigenvalue contribution generates a closed one-parameter subgroup:
// the skew lift has eigenvalues exactly +-i*k*sin(theta), so shifting its
// coefficient by 2*pi/(k*sin(theta)) leaves the exponential fixed. When an
// integer combination of such shifts yields a strictly sparser coefficient
// vector, the squared walk factors through fewer distance digraphs; adopt
// that representative. The 3-cube collapses from two factors to the single
// exp(t S(Y_2)) this way, while graphs with no sparser representative (the
// complete graphs, the Petersen graph) keep the analytic coefficients.
void reduce_branches(const FactorizationOutcome& out, const std::vector<Matrix>& basis,
                     FactorizationResult& result) {
  const int contributions = static_cast<int>(out.generator.contributions.size());
  if (contributions < 1 || contributions > 4) return;
  const int k = out.graph.degree;

  std::vector<Matrix> lattice;                 // one period matrix per contribution
  std::vector<std::vector<double>> lattice_t;  // its expansion in the skew basis
  std::size_t next = 0;
  for (const EigenPair& pair : out.decomposition.pairs) {
    if (k - std::abs(pair.value) <= 1e-8 * k) continue;
    const GeneratorContribution& c = out.generator.contributions[next++];
    Matrix period = (2.0 * M_PI / (k * std::sin(c.theta))) * skew_lambda(pair, out.space).skew;
    const BasisExpansion step = expand_in_basis(period, basis);
    if (step.residual >= 1e-9)
      throw ConsistencyError("branch lattice generator left the skew span");
    lattice.push_back(std::move(period));
    lattice_t.push_back(step.coefficients);
  }

  const auto support = [](const std::vector<double>& t) {
    int s = 0;
    for (double v : t) s += std::abs(v) > 1e-9 ? 1 : 0;
    return s;
  };
  const auto norm2 = [](const std::vector<double>& t) {
    double s = 0.0;
    for (double v : t) s += v * v;
    return s;
  };

  // A shifted representative is adopted only when strictly sparser than the
  // analytic one; among those, the smallest coefficient vector wins.
  const int analytic_support = support(result.coefficients);
  std::vector<int> best_shift(contributions, 0);
  std::vector<double> best_t = result.coefficients;
  int best_support = analytic_support;
  double best_norm = norm2(best_t);

  std::vector<int> shift(contributions, -2);
  while (true) {
    std::vector<double> t = result.coefficients;
    for (int c = 0; c < contributions; ++c)
      for (std::size_t i = 0; i < t.size(); ++i) t[i] -= shift[c] * lattice_t[c][i];
    const int s = support(t);
    if (s < analytic_support && (s < best_support || (s == best_support && norm2(t) < best_norm))) {
      best_support = s;
      best_norm = norm2(t);
      best_t = std::move(t);
      best_shift = shift;
    }
    int c = 0;
    while (c < contributions && ++shift[c] > 2) shift[c++] = -2;
    if (c == contributions) break;
  }

  if (best_shift == std::vector<int>(contributions, 0)) return;
  Matrix reduced = out.generator.skew;
  for (int c = 0; c < contributions; ++c)
    if (best_shift[c] != 0) reduced -= static_cast<double>(best_shift[c]) * lattice[c];
  Matrix diff = reduced;
  for (std::size_t i = 0; i < best_t.size(); ++i)
    if (best_t[i] != 0.0) diff -= best_t[i] * basis[i];
  result.coefficients = std::move(best_t);
  result.residual = diff.frobenius();
  if (result.residual >= 1e-9)
    throw ConsistencyError("branch-reduced generator is not in the skew span");
}

}  // namespace

FactorizationOutcome run_factorization(const Graph& g) {
  FactorizationOutcome out;
  out.graph = g;
  out.distance_set = distance_matrices(g);

  DrgVerdict verdict = check_distance_regular(g);
  if (!verdict.is_drg) {
    const DrgWitness& w = *verdict.witness;
    throw ValidationError(
        "graph is not distance-regular: pairs (" + std::to_string(w.u_ref) + "," +
        std::to_string(w.v_ref) + ") and (" + std::to_string(w.u) + "," + std::to_string(w.v) +
        ") at distance " + std::to_string(w.dist) + " see " + std::to_string(w.count_ref) +
        " vs " + std::to_string(w.count) + " vertices with distance profile (" +
        std::to_string(w.i) + "," + std::to_string(w.j) + ")");
  }
  out.intersection_numbers = std::move(*verdict.numbers);

  out.decomposition = symmetric_eig(g.adjacency.to_real());
  if (!invertibility_gate(g, out.decomposition))
    throw ValidationError("adjacency matrix singular: factorization hypothesis not met");

  out.space = build_arc_space(g);
  out.family = distance_digraphs_formula(out.distance_set, out.space);
  out.walk = grover_walk(out.space);
  out.generator = build_generator(out.decomposition, out.space);

  const int d = out.distance_set.diameter;
  std::vector<Matrix> basis;
  for (int i = 1; i <= d; ++i) basis.push_back(out.family.skew[i].to_real());
  const BasisExpansion expansion = expand_in_basis(out.generator.skew, basis);
  if (expansion.residual >= 1e-9)
    throw ConsistencyError("generator is not in the span of S(Y_1)..S(Y_d): residual " +
                           std::to_string(expansion.residual));

  FactorizationResult result;
  result.coefficients = expansion.coefficients;
  result.gram_rank = expansion.gram_rank;
  result.residual = expansion.residual;
  reduce_branches(out, basis, result);
  for (int i = 0; i < d; ++i)
    result.factors.push_back(expm_skew(basis[i], result.coefficients[i]));

  for (std::size_t i = 0; i < result.factors.size(); ++i)
    for (std::size_t j = i + 1; j < result.factors.size(); ++j) {
      const Matrix ab = result.factors[i] * result.factors[j];
      const Matrix ba = result.factors[j] * result.factors[i];
      if ((ab - ba).frobenius() > 1e-9)
        throw ConsistencyError("factorization factors do not commute");
    }

  Matrix product = Matrix::identity(out.space.arc_count());
  for (const Matrix& factor : result.factors) product = product * factor;
  const Matrix squared = out.walk.transition * out.walk.transition;
  result.product_error = (squared - product).frobenius();
  if (result.product_error >= 1e-8)
    throw ConsistencyError("factorization product misses U^2 by " +
                           std::to_string(result.product_error));

  out.result = std::move(result);
  return out;
}

FactorizationResult factorize(const Graph& g) { return run_factorization(g).result; }

bool verify_strongly_regular_claim(const Graph& g, const FactorizationResult& result) {
  if (distance_matrices(g).diameter != 2)
    throw ValidationError("verify_strongly_regular_claim: graph diameter is not 2");
  return result.coefficients.size() <= 2 && result.product_error < 1e-8;
}

}  // namespace dqw
