#include "dqwalk/arc_space.hpp"

#include "dqwalk/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace dqw {

int ArcSpace::arc_index(int tail, int head) const {
  if (tail < 0 || head < 0 || tail >= graph.n || head >= graph.n) return -1;
  return index_of_[static_cast<std::size_t>(tail) * graph.n + head];
}

int ArcSpace::reverse_of(int arc) const {
  return arc_index(arcs[arc].head, arcs[arc].tail);
}

ArcSpace build_arc_space(const Graph& g) {
  ArcSpace space;
  space.graph = g;
  space.index_of_.assign(static_cast<std::size_t>(g.n) * g.n, -1);
  // Row-major scan of the adjacency matrix yields the sorted (tail, head)
  // arc order directly.
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.adjacency(u, v) != 0) {
        space.index_of_[static_cast<std::size_t>(u) * g.n + v] = space.arc_count();
        space.arcs.push_back(Arc{u, v});
      }

  const int arcs = space.arc_count();
  space.tail_incidence = IntMatrix(g.n, arcs);
  space.head_incidence = IntMatrix(g.n, arcs);
  space.reversal = IntMatrix(arcs, arcs);
  for (int a = 0; a < arcs; ++a) {
    space.tail_incidence(space.arcs[a].tail, a) = 1;
    space.head_incidence(space.arcs[a].head, a) = 1;
    space.reversal(space.reverse_of(a), a) = 1;
  }

  if (!verify_incidence_identities(space).all())
    throw ConsistencyError("arc space construction violated an incidence identity");
  if (!(space.reversal * space.reversal == IntMatrix::identity(arcs)) ||
      !space.reversal.is_symmetric())
    throw ConsistencyError("arc reversal is not a symmetric involution");
  return space;
}

IncidenceReport verify_incidence_identities(const ArcSpace& space) {
  const int k = space.graph.degree;
  const IntMatrix& dt = space.tail_incidence;
  const IntMatrix& dh = space.head_incidence;

  IncidenceReport report;
  report.reversal_swaps_tail_head = (dt * space.reversal == dh);
  report.gram_is_degree_identity =
      (dt * dt.transpose() == k * IntMatrix::identity(space.graph.n)) &&
      (dh * dh.transpose() == k * IntMatrix::identity(space.graph.n));
  report.cross_product_is_adjacency =
      (dt * dh.transpose() == space.graph.adjacency) &&
      (dh * dt.transpose() == space.graph.adjacency);
  report.head_tail_is_line_digraph =
      (dh.transpose() * dt == line_digraph_adjacency(space));
  return report;
}

IntMatrix line_digraph_adjacency(const ArcSpace& space) {
  const int arcs = space.arc_count();
  IntMatrix adjacency(arcs, arcs);
  for (int a = 0; a < arcs; ++a)
    for (int b = 0; b < arcs; ++b)
      if (space.arcs[a].head == space.arcs[b].tail) adjacency(a, b) = 1;
  return adjacency;
}

IntMatrix line_digraph_distances(const ArcSpace& space) {
  const int arcs = space.arc_count();
  // Out-neighbours of an arc are the arcs leaving its head; group them once.
  std::vector<std::vector<int>> arcs_by_tail(space.graph.n);
  for (int a = 0; a < arcs; ++a) arcs_by_tail[space.arcs[a].tail].push_back(a);

  IntMatrix dist(arcs, arcs);
  for (int src = 0; src < arcs; ++src) {
    std::vector<std::int64_t> d(arcs, -1);
    std::deque<int> queue{src};
    d[src] = 0;
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int b : arcs_by_tail[space.arcs[a].head])
        if (d[b] < 0) {
          d[b] = d[a] + 1;
          queue.push_back(b);
        }
    }
    for (int b = 0; b < arcs; ++b) {
      if (d[b] < 0)
        throw ConsistencyError("line digraph is not strongly connected from arc " +
                               std::to_string(src));
      dist(src, b) = d[b];
    }
  }
  return dist;
}

int ld_distance_formula(const ArcSpace& space, const IntMatrix& dist_x, int arc_a, int arc_b) {
  if (arc_a < 0 || arc_a >= space.arc_count() || arc_b < 0 || arc_b >= space.arc_count())
    throw ValidationError("ld_distance_formula: arc index out of range");
  const Arc& a = space.arcs[arc_a];
  const Arc& b = space.arcs[arc_b];
  const std::int64_t between = dist_x(a.head, b.tail);
  return static_cast<int>(arc_a == arc_b ? between - 1 : between + 1);
}

namespace {

DistanceDigraphFamily family_from_adjacencies(std::vector<IntMatrix> adjacency) {
  DistanceDigraphFamily family;
  family.skew.reserve(adjacency.size());
  for (const IntMatrix& a : adjacency) family.skew.push_back(a - a.transpose());
  family.adjacency = std::move(adjacency);

  const std::size_t arcs = family.adjacency.front().rows();
  if (!(family.adjacency[0] == IntMatrix::identity(arcs)))
    throw ConsistencyError("distance digraph 0 is not the identity");
  IntMatrix adjacency_sum(arcs, arcs);
  IntMatrix skew_sum(arcs, arcs);
  for (std::size_t i = 0; i < family.adjacency.size(); ++i) {
    adjacency_sum = adjacency_sum + family.adjacency[i];
    skew_sum = skew_sum + family.skew[i];
  }
  if (!(adjacency_sum == IntMatrix::ones(arcs, arcs)))
    throw ConsistencyError("distance digraphs do not partition the ordered arc pairs");
  if (!skew_sum.is_zero())
    throw ConsistencyError("skew-adjacency matrices do not sum to zero");
  return family;
}

}  // namespace

DistanceDigraphFamily distance_digraphs_bfs(const ArcSpace& space) {
  const IntMatrix dist_x = graph_distances(space.graph);
  std::int64_t diameter = 0;
  for (int u = 0; u < space.graph.n; ++u)
    for (int v = 0; v < space.graph.n; ++v) diameter = std::max(diameter, dist_x(u, v));

  const int arcs = space.arc_count();
  const int top = static_cast<int>(diameter) + 1;
  const IntMatrix dist = line_digraph_distances(space);

  std::vector<IntMatrix> adjacency(top + 1, IntMatrix(arcs, arcs));
  for (int a = 0; a < arcs; ++a)
    for (int b = 0; b < arcs; ++b) {
      const std::int64_t d = dist(a, b);
      if (d > top)
        throw ConsistencyError("line digraph distance exceeds graph diameter + 1");
      adjacency[d](a, b) = 1;
    }
  return family_from_adjacencies(std::move(adjacency));
}

DistanceDigraphFamily distance_digraphs_formula(const DistanceMatrixSet& dm,
                                                const ArcSpace& space) {
  const DrgVerdict verdict = check_distance_regular(space.graph);
  if (!verdict.is_drg)
    throw ValidationError(
        "distance_digraphs_formula: the incidence formula is only valid for distance-regular "
        "graphs");

  const int arcs = space.arc_count();
  const IntMatrix head_t = space.head_incidence.transpose();
  std::vector<IntMatrix> adjacency;
  adjacency.push_back(IntMatrix::identity(arcs));
  for (int i = 1; i <= dm.diameter + 1; ++i) {
    IntMatrix a = head_t * dm.classes[i - 1] * space.tail_incidence;
    if (i == 2) a = a - IntMatrix::identity(arcs);
    adjacency.push_back(std::move(a));
  }

  DistanceDigraphFamily family = family_from_adjacencies(std::move(adjacency));
  const DistanceDigraphFamily by_bfs = distance_digraphs_bfs(space);
  for (int i = 0; i <= family.max_index(); ++i)
    if (!(family.adjacency[i] == by_bfs.adjacency[i]))
      throw ConsistencyError("incidence formula disagrees with BFS at distance digraph " +
                             std::to_string(i));
  return family;
}

DigraphIntersectionNumbers digraph_intersection_numbers(const ArcSpace& space,
                                                        const DistanceDigraphFamily& family) {
  const int arcs = space.arc_count();
  const int top = family.max_index();
  const int classes = top + 1;
  const IntMatrix dist = line_digraph_distances(space);

  DigraphIntersectionNumbers table(top);
  std::vector<bool> seen(classes, false);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(classes) * classes);
  for (int u = 0; u < arcs; ++u)
    for (int v = 0; v < arcs; ++v) {
      const int l = static_cast<int>(dist(u, v));
      std::fill(counts.begin(), counts.end(), 0);
      for (int w = 0; w < arcs; ++w)
        ++counts[static_cast<std::size_t>(dist(u, w)) * classes + dist(w, v)];
      if (!seen[l]) {
        seen[l] = true;
        for (int i = 0; i < classes; ++i)
          for (int j = 0; j < classes; ++j)
            table.at(i, j, l) = counts[static_cast<std::size_t>(i) * classes + j];
        continue;
      }
      for (int i = 0; i < classes; ++i)
        for (int j = 0; j < classes; ++j)
          if (counts[static_cast<std::size_t>(i) * classes + j] != table.at(i, j, l))
            throw ConsistencyError(
                "line digraph intersection count is not constant: arcs (" + std::to_string(u) +
                "," + std::to_string(v) + ") at distance " + std::to_string(l) + ", profile (" +
                std::to_string(i) + "," + std::to_string(j) + ")");
    }

  for (int i = 0; i < classes; ++i)
    for (int j = 0; j < classes; ++j)
      for (int l = 0; l < classes; ++l)
        if (table.at(i, j, l) != table.at(j, i, l))
          throw ConsistencyError("digraph intersection numbers lost i/j symmetry");
  return table;
}

bool check_skew_commuting(const DistanceDigraphFamily& family) {
  for (std::size_t i = 0; i < family.skew.size(); ++i)
    for (std::size_t j = i + 1; j < family.skew.size(); ++j)
      if (!(family.skew[i] * family.skew[j] == family.skew[j] * family.skew[i])) return false;
  return true;
}

}  // namespace dqw
