#pragma once

#include "dqwalk/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dqw {

// Simple connected k-regular graph with 0/1 adjacency, validated on
// construction. Vertex orderings of the named families are fixed so every
// downstream report is byte-reproducible.
struct Graph {
  int n = 0;
  int degree = 0;
  IntMatrix adjacency;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Families: complete [n], cycle [n], hypercube [d], petersen [],
// complete_bipartite [n] (or [n n]), prism [] (= triangular) or [n].
Graph build_family(const std::string& family, const std::vector<int>& params);

// Edges as sorted (min,max) pairs, each once.
std::vector<std::pair<int, int>> edge_list(const Graph& g);

// All-pairs BFS hop counts; rejects disconnected graphs naming two
// unreachable vertices.
IntMatrix graph_distances(const Graph& g);

struct DistanceMatrixSet {
  int diameter = 0;
  std::vector<IntMatrix> classes;  // A_0 .. A_d, (u,v) entry 1 iff dist(u,v)=i
};

DistanceMatrixSet distance_matrices(const Graph& g);

class IntersectionNumbers {
public:
  IntersectionNumbers() = default;
  explicit IntersectionNumbers(int diameter)
      : d_(diameter), p_(static_cast<std::size_t>(diameter + 1) * (diameter + 1) * (diameter + 1), 0) {}

  int diameter() const { return d_; }
  std::int64_t& at(int i, int j, int l) { return p_[index(i, j, l)]; }
  std::int64_t at(int i, int j, int l) const { return p_[index(i, j, l)]; }

private:
  std::size_t index(int i, int j, int l) const {
    const std::size_t m = static_cast<std::size_t>(d_ + 1);
    return (static_cast<std::size_t>(i) * m + j) * m + l;
  }
  int d_ = 0;
  std::vector<std::int64_t> p_;
};

struct DrgWitness {
  int u_ref = 0, v_ref = 0;  // pair that fixed the reference count
  int u = 0, v = 0;          // violating pair at the same distance
  int dist = 0;              // their common distance
  int i = 0, j = 0;          // distance profile being counted
  std::int64_t count_ref = 0, count = 0;
};

struct DrgVerdict {
  bool is_drg = false;
  std::optional<IntersectionNumbers> numbers;  // populated iff is_drg
  std::optional<DrgWitness> witness;           // populated iff !is_drg
};

// Definition check by brute force over all ordered vertex pairs. For every
// pair at distance l the counts |{w : dist(u,w)=i, dist(w,v)=j}| must agree;
// on success the full table p[i][j][l] is returned.
DrgVerdict check_distance_regular(const Graph& g);

// A_i A_j == sum_l p[i][j][l] A_l, checked in exact integer arithmetic.
bool verify_scheme_product(const DistanceMatrixSet& dm, const IntersectionNumbers& p);

// Standard intersection array {b_0,...,b_{d-1}; c_1,...,c_d}.
std::vector<std::int64_t> intersection_array_b(const IntersectionNumbers& p);
std::vector<std::int64_t> intersection_array_c(const IntersectionNumbers& p);

}  // namespace dqw
