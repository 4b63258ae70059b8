#include "dqwalk/graph.hpp"

#include "dqwalk/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace dqw {

namespace {

// Recognition is brute force over all vertex pairs, so keep inputs at desk
// scale where that stays instant.
constexpr int kMaxVertices = 64;

void check_vertex_budget(int n, const std::string& family) {
  if (n > kMaxVertices)
    throw ValidationError(family + ": " + std::to_string(n) + " vertices exceed the supported " +
                          std::to_string(kMaxVertices));
}

Graph from_adjacency(int n, IntMatrix adjacency) {
  Graph g;
  g.n = n;
  g.degree = static_cast<int>(adjacency.row_sum(0));
  g.adjacency = std::move(adjacency);

  for (int u = 0; u < n; ++u) {
    if (g.adjacency(u, u) != 0)
      throw ValidationError("graph has a self-loop at vertex " + std::to_string(u));
    if (g.adjacency.row_sum(u) != g.degree)
      throw ValidationError("graph is not regular: vertex " + std::to_string(u) + " has degree " +
                            std::to_string(g.adjacency.row_sum(u)) + ", vertex 0 has degree " +
                            std::to_string(g.degree));
    for (int v = 0; v < n; ++v) {
      const std::int64_t a = g.adjacency(u, v);
      if (a != 0 && a != 1) throw ValidationError("adjacency entries must be 0 or 1");
      if (a != g.adjacency(v, u)) throw ValidationError("adjacency matrix is not symmetric");
    }
  }
  graph_distances(g);  // rejects disconnected graphs
  return g;
}

}  // namespace

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 0) throw ValidationError("graph needs a positive vertex count");
  check_vertex_budget(n, "graph");
  IntMatrix adjacency(n, n);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ValidationError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") has an out-of-range endpoint for n=" + std::to_string(n));
    if (a == b) throw ValidationError("self-loop at vertex " + std::to_string(a));
    if (adjacency(a, b) != 0)
      throw ValidationError("duplicate edge (" + std::to_string(std::min(a, b)) + "," +
                            std::to_string(std::max(a, b)) + ")");
    adjacency(a, b) = 1;
    adjacency(b, a) = 1;
  }
  return from_adjacency(n, std::move(adjacency));
}

Graph build_family(const std::string& family, const std::vector<int>& params) {
  const auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw ValidationError(family + " expects " + std::to_string(count) + " parameter(s), got " +
                            std::to_string(params.size()));
  };
  std::vector<std::pair<int, int>> edges;

  if (family == "complete") {
    want(1);
    const int n = params[0];
    if (n < 2) throw ValidationError("complete: n must be at least 2");
    check_vertex_budget(n, family);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make_graph(n, edges);
  }
  if (family == "cycle") {
    want(1);
    const int n = params[0];
    if (n < 3) throw ValidationError("cycle: n must be at least 3");
    check_vertex_budget(n, family);
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return make_graph(n, edges);
  }
  if (family == "hypercube") {
    want(1);
    const int d = params[0];
    if (d < 1 || d > 6) throw ValidationError("hypercube: dimension must be between 1 and 6");
    const int n = 1 << d;  // vertices are binary strings in lexicographic order
    for (int u = 0; u < n; ++u)
      for (int bit = 0; bit < d; ++bit) {
        const int v = u ^ (1 << bit);
        if (u < v) edges.emplace_back(u, v);
      }
    return make_graph(n, edges);
  }
  if (family == "petersen") {
    want(0);
    // Outer 5-cycle 0..4, inner pentagram 5..9 with step 2, spokes i--i+5.
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      edges.emplace_back(i, i + 5);
    }
    return make_graph(10, edges);
  }
  if (family == "complete_bipartite") {
    int side = 0;
    if (params.size() == 1) {
      side = params[0];
    } else if (params.size() == 2) {
      if (params[0] != params[1])
        throw ValidationError("complete_bipartite: parts must be equal for a regular graph");
      side = params[0];
    } else {
      throw ValidationError("complete_bipartite expects 1 or 2 parameters");
    }
    if (side < 1) throw ValidationError("complete_bipartite: part size must be positive");
    check_vertex_budget(2 * side, family);
    for (int u = 0; u < side; ++u)
      for (int v = 0; v < side; ++v) edges.emplace_back(u, side + v);
    return make_graph(2 * side, edges);
  }
  if (family == "prism") {
    int n = 3;  // default: the triangular prism
    if (params.size() == 1)
      n = params[0];
    else if (!params.empty())
      throw ValidationError("prism expects at most 1 parameter");
    if (n < 3) throw ValidationError("prism: cycle length must be at least 3");
    check_vertex_budget(2 * n, family);
    for (int u = 0; u < n; ++u) {
      edges.emplace_back(u, (u + 1) % n);
      edges.emplace_back(n + u, n + (u + 1) % n);
      edges.emplace_back(u, n + u);
    }
    return make_graph(2 * n, edges);
  }
  throw ValidationError("unknown family '" + family +
                        "' (expected complete, cycle, hypercube, petersen, complete_bipartite, "
                        "prism)");
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adjacency(u, v) != 0) edges.emplace_back(u, v);
  return edges;
}

IntMatrix graph_distances(const Graph& g) {
  const int n = g.n;
  IntMatrix dist(n, n);
  for (int src = 0; src < n; ++src) {
    std::vector<std::int64_t> d(n, -1);
    std::deque<int> queue{src};
    d[src] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v)
        if (g.adjacency(u, v) != 0 && d[v] < 0) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
    }
    for (int v = 0; v < n; ++v) {
      if (d[v] < 0)
        throw ValidationError("graph is disconnected: vertex " + std::to_string(v) +
                              " is unreachable from vertex " + std::to_string(src));
      dist(src, v) = d[v];
    }
  }
  return dist;
}

DistanceMatrixSet distance_matrices(const Graph& g) {
  const IntMatrix dist = graph_distances(g);
  std::int64_t diameter = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) diameter = std::max(diameter, dist(u, v));

  DistanceMatrixSet dm;
  dm.diameter = static_cast<int>(diameter);
  dm.classes.assign(dm.diameter + 1, IntMatrix(g.n, g.n));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) dm.classes[dist(u, v)](u, v) = 1;

  IntMatrix sum(g.n, g.n);
  for (const IntMatrix& cls : dm.classes) sum = sum + cls;
  if (!(sum == IntMatrix::ones(g.n, g.n)))
    throw ConsistencyError("distance matrices do not partition the vertex pairs");
  if (!(dm.classes[0] == IntMatrix::identity(g.n)))
    throw ConsistencyError("distance class 0 is not the identity");
  return dm;
}

DrgVerdict check_distance_regular(const Graph& g) {
  const IntMatrix dist = graph_distances(g);
  const int n = g.n;
  int diameter = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) diameter = std::max(diameter, static_cast<int>(dist(u, v)));
  const int classes = diameter + 1;

  IntersectionNumbers table(diameter);
  std::vector<bool> seen(classes, false);
  std::vector<std::pair<int, int>> ref_pair(classes);

  std::vector<std::int64_t> counts(static_cast<std::size_t>(classes) * classes);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int l = static_cast<int>(dist(u, v));
      std::fill(counts.begin(), counts.end(), 0);
      for (int w = 0; w < n; ++w)
        ++counts[static_cast<std::size_t>(dist(u, w)) * classes + dist(w, v)];
      if (!seen[l]) {
        seen[l] = true;
        ref_pair[l] = {u, v};
        for (int i = 0; i < classes; ++i)
          for (int j = 0; j < classes; ++j)
            table.at(i, j, l) = counts[static_cast<std::size_t>(i) * classes + j];
        continue;
      }
      for (int i = 0; i < classes; ++i)
        for (int j = 0; j < classes; ++j) {
          const std::int64_t c = counts[static_cast<std::size_t>(i) * classes + j];
          if (c == table.at(i, j, l)) continue;
          DrgVerdict verdict;
          verdict.is_drg = false;
          verdict.witness = DrgWitness{ref_pair[l].first, ref_pair[l].second, u, v,
                                       l,                 i,                  j,
                                       table.at(i, j, l), c};
          return verdict;
        }
    }
  }

  for (int i = 0; i < classes; ++i)
    for (int j = 0; j < classes; ++j)
      for (int l = 0; l < classes; ++l) {
        if (table.at(i, j, l) != table.at(j, i, l))
          throw ConsistencyError("intersection numbers lost i/j symmetry");
        if (i == 0 && table.at(0, j, l) != (j == l ? 1 : 0))
          throw ConsistencyError("intersection numbers p[0][j][l] != delta_jl");
      }

  DrgVerdict verdict;
  verdict.is_drg = true;
  verdict.numbers = std::move(table);
  return verdict;
}

bool verify_scheme_product(const DistanceMatrixSet& dm, const IntersectionNumbers& p) {
  const int d = dm.diameter;
  if (p.diameter() != d) throw ValidationError("intersection numbers do not match the graph");
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      const IntMatrix product = dm.classes[i] * dm.classes[j];
      IntMatrix combo(product.rows(), product.cols());
      for (int l = 0; l <= d; ++l) combo = combo + p.at(i, j, l) * dm.classes[l];
      if (!(product == combo)) return false;
    }
  return true;
}

std::vector<std::int64_t> intersection_array_b(const IntersectionNumbers& p) {
  std::vector<std::int64_t> b;
  for (int i = 0; i < p.diameter(); ++i) b.push_back(p.at(1, i + 1, i));
  return b;
}

std::vector<std::int64_t> intersection_array_c(const IntersectionNumbers& p) {
  std::vector<std::int64_t> c;
  for (int i = 1; i <= p.diameter(); ++i) c.push_back(p.at(1, i - 1, i));
  return c;
}

}  // namespace dqw
