#pragma once

// Test-side oracles, independent of the library code paths they check.

#include "dqwalk/arc_space.hpp"
#include "dqwalk/matrix.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace oracles {

// Characteristic polynomial of an integer matrix by the Faddeev-LeVerrier
// recurrence, exact in 64-bit arithmetic. Coefficients ascending: the
// returned vector c satisfies p(x) = sum_i c[i] x^i with c.back() = 1.
std::vector<std::int64_t> char_poly(const dqw::IntMatrix& a);

// Expand prod (x - root)^multiplicity into ascending coefficients.
std::vector<std::int64_t> poly_from_roots(
    const std::vector<std::pair<std::int64_t, int>>& root_multiplicities);

// Directed BFS distances between arcs of the line digraph, built straight
// from the adjacency rule head(a) == tail(b) without touching the incidence
// matrices.
dqw::IntMatrix ld_bfs_distances(const dqw::ArcSpace& space);

}  // namespace oracles
