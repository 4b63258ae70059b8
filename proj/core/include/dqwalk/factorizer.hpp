#pragma once

#include "dqwalk/arc_space.hpp"
#include "dqwalk/graph.hpp"
#include "dqwalk/linalg.hpp"
#include "dqwalk/spectral.hpp"

#include <vector>

namespace dqw {

// Grover walk transition matrix (2/k) * A(LD) - R on the arcs of a regular
// graph. Orthogonal; rows index source arcs, columns target arcs, so states
// evolve as row vectors.
struct GroverWalk {
  int degree = 0;
  Matrix transition;
};

GroverWalk grover_walk(const ArcSpace& space);

// True iff no clustered adjacency eigenvalue sits within 1e-8 * k of zero.
// A singular adjacency matrix puts -1 in the spectrum of the squared walk,
// where the principal logarithm (and hence the factorization) breaks down.
bool invertibility_gate(const Graph& g, const SpectralDecomposition& dec);

struct GeneratorContribution {
  double lambda = 0.0;
  double theta = 0.0;
  double coefficient = 0.0;  // 2*theta / (k*sin(theta))
};

// Real skew generator with exp(K) = U^2, assembled analytically as
// -sum coefficient * skew_lambda over eigenvalues strictly inside (-k, k),
// then cross-checked against the principal logarithm of U^2.
struct Generator {
  Matrix skew;
  std::vector<GeneratorContribution> contributions;
};

Generator build_generator(const SpectralDecomposition& dec, const ArcSpace& space);

// Independent route to the generator: diagonalize U^2 through the complex
// walk eigenprojections and take the logarithm with angle 2*theta on each
// pair, theta = arccos(lambda/k) in (0,pi). Never touches the skew lifts, so
// it cross-checks the analytic construction.
Matrix generator_log_oracle(const SpectralDecomposition& dec, const ArcSpace& space);

struct FactorizationResult {
  std::vector<double> coefficients;  // t_1 .. t_d on S(Y_1) .. S(Y_d)
  int gram_rank = 0;
  double residual = 0.0;       // ||K - sum t_i S(Y_i)||_F
  std::vector<Matrix> factors; // exp(t_i S(Y_i))
  double product_error = 0.0;  // ||U^2 - prod factors||_F
};

// Everything the pipeline produced, for reporting.
struct FactorizationOutcome {
  Graph graph;
  DistanceMatrixSet distance_set;
  IntersectionNumbers intersection_numbers;
  SpectralDecomposition decomposition;
  ArcSpace space;
  DistanceDigraphFamily family;
  GroverWalk walk;
  Generator generator;
  FactorizationResult result;
};

FactorizationOutcome run_factorization(const Graph& g);

// U^2 = exp(t_1 S(Y_1)) ... exp(t_d S(Y_d)) for a distance-regular graph
// with invertible adjacency matrix.
FactorizationResult factorize(const Graph& g);

// Diameter-2 case: the square of the walk splits into at most two commuting
// continuous walks.
bool verify_strongly_regular_claim(const Graph& g, const FactorizationResult& result);

}  // namespace dqw
