#pragma once

#include "dqwalk/factorizer.hpp"
#include "dqwalk/matrix.hpp"

#include <complex>
#include <vector>

namespace dqw {

// Unit-norm amplitude vector over the arcs. States are row vectors: one walk
// step multiplies by the transition matrix on the right, so amplitude moves
// along the arcs of the line digraph.
struct ArcState {
  std::vector<std::complex<double>> amplitudes;
  double norm() const;
};

ArcState make_single_arc_state(int arc_count, int arc);
ArcState make_uniform_state(int arc_count);

// psi * U^steps.
ArcState discrete_evolve(const GroverWalk& walk, const ArcState& psi, int steps);

// psi * prod_i exp(t_i S(Y_i))^m, using the precomputed factor matrices.
ArcState continuous_evolve(const FactorizationResult& result, const ArcState& psi, int m);

// || psi * U^{2m} - continuous_evolve(result, psi, m) ||_2
double compare_evolutions(const GroverWalk& walk, const FactorizationResult& result,
                          const ArcState& psi, int m);

}  // namespace dqw
