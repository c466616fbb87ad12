#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pflab/poly.hpp"

namespace pflab {

inline constexpr std::int64_t kDefaultPathCap = 10'000'000;

// Finite acyclic digraph with polynomial edge weights. Vertices are the
// integers 1..vertex_count. The graph stays acyclic at all times: an edge
// that would close a cycle is rejected when it is added.
class WeightedDag {
public:
  struct Edge {
    int from;
    int to;
    Poly weight;
  };

  explicit WeightedDag(int vertex_count);

  int vertex_count() const { return m_vertex_count; }
  const std::vector<Edge>& edges() const { return m_edges; }

  // Rejects loops and back edges (CycleError), repeated ordered pairs
  // (Error) and endpoints outside 1..vertex_count (IndexOutOfRange).
  void add_edge(int from, int to, const Poly& weight);

  bool has_edge(int from, int to) const;
  const Poly& edge_weight(int from, int to) const;

  // h(u,v): sum of edge-weight products over all directed u-v paths. The
  // empty path makes h(u,u) = 1. Dynamic programming along topological
  // order, linear in the graph size per call.
  Poly path_gf(int u, int v) const;

  // Number of directed u-v paths, exact.
  BigInt path_count(int u, int v) const;

  // Every directed u-v path as a vertex sequence, in a deterministic
  // order. Throws ExplosionGuard if the count exceeds the cap.
  std::vector<std::vector<int>> paths(int u, int v,
                                      std::int64_t cap = kDefaultPathCap) const;

  Poly path_weight(const std::vector<int>& path) const;

private:
  bool reaches(int from, int to) const;

  int m_vertex_count;
  std::vector<Edge> m_edges;
  std::vector<std::vector<int>> m_adjacency; // outgoing edge indices, by vertex
  std::map<std::pair<int, int>, std::size_t> m_edge_index;
};

// F(u,v): n-path generating function without the disjointness condition,
// i.e. the product of the per-pair path sums.
Poly tuple_gf(const WeightedDag& d, const std::vector<int>& u,
              const std::vector<int>& v);

// F0(u,v): sum of the weights of vertex-disjoint path tuples, by brute
// force over the cartesian product of the per-pair path lists. The guard
// bounds that product before anything is enumerated. Empty tuples give 1.
Poly nonintersecting_gf(const WeightedDag& d, const std::vector<int>& u,
                        const std::vector<int>& v,
                        std::int64_t cap = kDefaultPathCap);

// True iff every path u_i -> v_l meets every path u_j -> v_k whenever
// i < j and k < l. Brute force over path pairs.
bool is_compatible(const WeightedDag& d, const std::vector<int>& u,
                   const std::vector<int>& v,
                   std::int64_t cap = kDefaultPathCap);

// sum over all permutations pi of sgn(pi) F0(u^pi, v).
Poly signed_gf(const WeightedDag& d, const std::vector<int>& u,
               const std::vector<int>& v,
               std::int64_t cap = kDefaultPathCap);

// Rectangular lattice: vertices (column, row) with 1 <= column <= width,
// 1 <= row <= height, a step right at row j weighted x_j and a step up
// weighted 1. From (i,1) to (j,height) the path sum is the complete
// homogeneous polynomial h_{j-i}(x_1..x_height).
struct GridDag {
  WeightedDag dag;
  int width;
  int height;

  int at(int column, int row) const;
};
GridDag grid_dag(int width, int height);

// `vertex N` header line, then one `edge u v <poly>` line per edge with
// the weight in compact polynomial text.
std::string dag_to_text(const WeightedDag& d);
WeightedDag dag_from_text(const std::string& text);

} // namespace pflab
