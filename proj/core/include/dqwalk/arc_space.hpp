#pragma once

#include "dqwalk/graph.hpp"
#include "dqwalk/matrix.hpp"

#include <vector>

namespace dqw {

struct Arc {
  int tail = 0;
  int head = 0;
};

// Every edge {a,b} replaced by the two arcs (a,b), (b,a); arcs are ordered by
// (tail, head) so indices, the reversal permutation and all reports are
// reproducible. All matrices here are exact integer objects.
struct ArcSpace {
  Graph graph;
  std::vector<Arc> arcs;
  IntMatrix tail_incidence;  // n x 2m, (u, a) = 1 iff u is the tail of a
  IntMatrix head_incidence;  // n x 2m, (u, a) = 1 iff u is the head of a
  IntMatrix reversal;        // 2m x 2m permutation swapping (a,b) with (b,a)

  int arc_count() const { return static_cast<int>(arcs.size()); }
  int arc_index(int tail, int head) const;  // -1 if no such arc
  int reverse_of(int arc) const;

private:
  friend ArcSpace build_arc_space(const Graph& g);
  std::vector<int> index_of_;  // tail * n + head -> arc index
};

ArcSpace build_arc_space(const Graph& g);

// The four incidence identities, each checked in exact arithmetic:
// tail_incidence * reversal == head_incidence; both Gram products equal
// degree * I; the cross products equal the adjacency matrix; and
// head_incidence^T * tail_incidence equals the line digraph adjacency built
// from the combinatorial rule.
struct IncidenceReport {
  bool reversal_swaps_tail_head = false;
  bool gram_is_degree_identity = false;
  bool cross_product_is_adjacency = false;
  bool head_tail_is_line_digraph = false;
  bool all() const {
    return reversal_swaps_tail_head && gram_is_degree_identity && cross_product_is_adjacency &&
           head_tail_is_line_digraph;
  }
};

IncidenceReport verify_incidence_identities(const ArcSpace& space);

// 0/1 adjacency of the line digraph: arc (a,b) points to (c,d) iff b == c.
IntMatrix line_digraph_adjacency(const ArcSpace& space);

// Directed BFS hop counts between arcs of the line digraph.
IntMatrix line_digraph_distances(const ArcSpace& space);

// Distance from arc_a to arc_b in the line digraph computed from vertex
// distances alone: dist(head_a, tail_b) - 1 when the arcs coincide, else
// dist(head_a, tail_b) + 1.
int ld_distance_formula(const ArcSpace& space, const IntMatrix& dist_x, int arc_a, int arc_b);

struct DistanceDigraphFamily {
  std::vector<IntMatrix> adjacency;  // distance digraphs 0 .. d+1
  std::vector<IntMatrix> skew;       // adjacency minus its transpose
  int max_index() const { return static_cast<int>(adjacency.size()) - 1; }
};

// Distance digraphs of the line digraph by BFS; indices 0..d+1 where d is the
// graph diameter. The adjacencies partition all ordered arc pairs.
DistanceDigraphFamily distance_digraphs_bfs(const ArcSpace& space);

// Same family via the incidence formula head^T * A_{i-1} * tail (with the
// identity subtracted at index 2), valid for distance-regular graphs only;
// verified entrywise against the BFS family.
DistanceDigraphFamily distance_digraphs_formula(const DistanceMatrixSet& dm,
                                                const ArcSpace& space);

class DigraphIntersectionNumbers {
public:
  DigraphIntersectionNumbers() = default;
  explicit DigraphIntersectionNumbers(int max_index)
      : top_(max_index),
        m_(static_cast<std::size_t>(max_index + 1) * (max_index + 1) * (max_index + 1), 0) {}

  int max_index() const { return top_; }
  std::int64_t& at(int i, int j, int l) { return m_[index(i, j, l)]; }
  std::int64_t at(int i, int j, int l) const { return m_[index(i, j, l)]; }

private:
  std::size_t index(int i, int j, int l) const {
    const std::size_t m = static_cast<std::size_t>(top_ + 1);
    return (static_cast<std::size_t>(i) * m + j) * m + l;
  }
  int top_ = 0;
  std::vector<std::int64_t> m_;
};

// Brute-force digraph intersection numbers of the line digraph; constancy
// over all ordered arc pairs and i/j symmetry are enforced.
DigraphIntersectionNumbers digraph_intersection_numbers(const ArcSpace& space,
                                                        const DistanceDigraphFamily& family);

// Exact pairwise commutation of all skew-adjacency matrices in the family.
bool check_skew_commuting(const DistanceDigraphFamily& family);

}  // namespace dqw
