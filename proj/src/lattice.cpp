#include "pflab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pflab/errors.hpp"
#include "pflab/matchings.hpp"
#include "pflab/variables.hpp"

namespace pflab {

namespace {

// Occupancy bitmaps over the vertex set, one word per 64 vertices.
struct VertexMask {
  std::vector<std::uint64_t> words;

  explicit VertexMask(int vertex_count)
      : words(static_cast<std::size_t>(vertex_count + 63) / 64, 0) {}

  void add(int v) { words[static_cast<std::size_t>(v - 1) / 64] |= 1ULL << ((v - 1) % 64); }

  bool intersects(const VertexMask& o) const {
    for (std::size_t k = 0; k < words.size(); ++k)
      if (words[k] & o.words[k]) return true;
    return false;
  }

  void unite(const VertexMask& o) {
    for (std::size_t k = 0; k < words.size(); ++k) words[k] |= o.words[k];
  }
};

VertexMask mask_of(const std::vector<int>& path, int vertex_count) {
  VertexMask m(vertex_count);
  for (int v : path) m.add(v);
  return m;
}

} // namespace

WeightedDag::WeightedDag(int vertex_count) : m_vertex_count(vertex_count) {
  if (vertex_count < 0) throw IndexOutOfRange("negative vertex count");
  m_adjacency.resize(static_cast<std::size_t>(vertex_count) + 1);
}

bool WeightedDag::reaches(int from, int to) const {
  if (from == to) return true;
  std::vector<int> stack = {from};
  std::vector<bool> seen(static_cast<std::size_t>(m_vertex_count) + 1, false);
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    int w = stack.back();
    stack.pop_back();
    for (std::size_t e : m_adjacency[static_cast<std::size_t>(w)]) {
      int t = m_edges[e].to;
      if (t == to) return true;
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        stack.push_back(t);
      }
    }
  }
  return false;
}

void WeightedDag::add_edge(int from, int to, const Poly& weight) {
  if (from < 1 || from > m_vertex_count || to < 1 || to > m_vertex_count)
    throw IndexOutOfRange("edge endpoint outside 1.." + std::to_string(m_vertex_count));
  if (from == to) throw CycleError("loop at vertex " + std::to_string(from));
  if (m_edge_index.count({from, to}))
    throw Error("repeated edge " + std::to_string(from) + " -> " + std::to_string(to));
  if (reaches(to, from))
    throw CycleError("edge " + std::to_string(from) + " -> " + std::to_string(to) +
                     " closes a cycle");
  m_edge_index[{from, to}] = m_edges.size();
  m_adjacency[static_cast<std::size_t>(from)].push_back(m_edges.size());
  m_edges.push_back({from, to, weight});
}

bool WeightedDag::has_edge(int from, int to) const {
  return m_edge_index.count({from, to}) != 0;
}

const Poly& WeightedDag::edge_weight(int from, int to) const {
  auto it = m_edge_index.find({from, to});
  if (it == m_edge_index.end())
    throw Error("no edge " + std::to_string(from) + " -> " + std::to_string(to));
  return m_edges[it->second].weight;
}

Poly WeightedDag::path_gf(int u, int v) const {
  if (u < 1 || u > m_vertex_count || v < 1 || v > m_vertex_count)
    throw IndexOutOfRange("vertex outside 1.." + std::to_string(m_vertex_count));
  // acc[w] = sum of path weights u -> w; vertex ids ascend along every
  // edge? They need not, so run over a topological order.
  std::vector<int> order = [&] {
    std::vector<int> indeg(static_cast<std::size_t>(m_vertex_count) + 1, 0);
    for (const Edge& e : m_edges) ++indeg[static_cast<std::size_t>(e.to)];
    std::vector<int> ready, out;
    for (int w = m_vertex_count; w >= 1; --w)
      if (indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    while (!ready.empty()) {
      int w = ready.back();
      ready.pop_back();
      out.push_back(w);
      for (std::size_t e : m_adjacency[static_cast<std::size_t>(w)])
        if (--indeg[static_cast<std::size_t>(m_edges[e].to)] == 0)
          ready.push_back(m_edges[e].to);
    }
    return out;
  }();

  std::vector<Poly> acc(static_cast<std::size_t>(m_vertex_count) + 1);
  acc[static_cast<std::size_t>(u)] = Poly::one();
  for (int w : order) {
    if (acc[static_cast<std::size_t>(w)].is_zero()) continue;
    for (std::size_t e : m_adjacency[static_cast<std::size_t>(w)])
      acc[static_cast<std::size_t>(m_edges[e].to)] +=
          acc[static_cast<std::size_t>(w)] * m_edges[e].weight;
  }
  return acc[static_cast<std::size_t>(v)];
}

BigInt WeightedDag::path_count(int u, int v) const {
  if (u < 1 || u > m_vertex_count || v < 1 || v > m_vertex_count)
    throw IndexOutOfRange("vertex outside 1.." + std::to_string(m_vertex_count));
  // Counts never decrease along the DP, so a plain forward sweep in any
  // topological order works; reuse path_gf's order by weighting with 1.
  std::vector<BigInt> acc(static_cast<std::size_t>(m_vertex_count) + 1, BigInt(0));
  acc[static_cast<std::size_t>(u)] = 1;
  std::vector<int> indeg(static_cast<std::size_t>(m_vertex_count) + 1, 0);
  for (const Edge& e : m_edges) ++indeg[static_cast<std::size_t>(e.to)];
  std::vector<int> ready, order;
  for (int w = 1; w <= m_vertex_count; ++w)
    if (indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
  while (!ready.empty()) {
    int w = ready.back();
    ready.pop_back();
    order.push_back(w);
    for (std::size_t e : m_adjacency[static_cast<std::size_t>(w)])
      if (--indeg[static_cast<std::size_t>(m_edges[e].to)] == 0)
        ready.push_back(m_edges[e].to);
  }
  for (int w : order) {
    if (acc[static_cast<std::size_t>(w)] == 0) continue;
    for (std::size_t e : m_adjacency[static_cast<std::size_t>(w)])
      acc[static_cast<std::size_t>(m_edges[e].to)] += acc[static_cast<std::size_t>(w)];
  }
  return acc[static_cast<std::size_t>(v)];
}

namespace {

void walk_paths(const WeightedDag& d, int at, int target, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (at == target) {
    out.push_back(current);
    return;
  }
  for (const WeightedDag::Edge& e : d.edges()) {
    if (e.from != at) continue;
    current.push_back(e.to);
    walk_paths(d, e.to, target, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<std::vector<int>> WeightedDag::paths(int u, int v, std::int64_t cap) const {
  if (path_count(u, v) > cap)
    throw ExplosionGuard("more than " + std::to_string(cap) + " paths " +
                         std::to_string(u) + " -> " + std::to_string(v));
  std::vector<std::vector<int>> out;
  std::vector<int> current = {u};
  walk_paths(*this, u, v, current, out);
  return out;
}

Poly WeightedDag::path_weight(const std::vector<int>& path) const {
  Poly w = Poly::one();
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    w *= edge_weight(path[k], path[k + 1]);
  return w;
}

Poly tuple_gf(const WeightedDag& d, const std::vector<int>& u,
              const std::vector<int>& v) {
  if (u.size() != v.size())
    throw LengthMismatch("tuple lengths differ: " + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()));
  Poly out = Poly::one();
  for (std::size_t i = 0; i < u.size(); ++i) out *= d.path_gf(u[i], v[i]);
  return out;
}

Poly nonintersecting_gf(const WeightedDag& d, const std::vector<int>& u,
                        const std::vector<int>& v, std::int64_t cap) {
  if (u.size() != v.size())
    throw LengthMismatch("tuple lengths differ: " + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()));
  const std::size_t m = u.size();
  if (m == 0) return Poly::one();

  BigInt tuples(1);
  for (std::size_t i = 0; i < m; ++i) tuples *= d.path_count(u[i], v[i]);
  if (tuples > cap)
    throw ExplosionGuard("tuple space beyond " + std::to_string(cap));

  std::vector<std::vector<std::vector<int>>> lists;
  std::vector<std::vector<VertexMask>> masks;
  std::vector<std::vector<Poly>> weights;
  for (std::size_t i = 0; i < m; ++i) {
    lists.push_back(d.paths(u[i], v[i], cap));
    masks.emplace_back();
    weights.emplace_back();
    for (const auto& p : lists.back()) {
      masks.back().push_back(mask_of(p, d.vertex_count()));
      weights.back().push_back(d.path_weight(p));
    }
  }

  Poly total;
  std::vector<std::size_t> pick(m, 0);
  const auto descend = [&](auto&& self, std::size_t i, const VertexMask& used) -> void {
    if (i == m) {
      Poly w = Poly::one();
      for (std::size_t k = 0; k < m; ++k) w *= weights[k][pick[k]];
      total += w;
      return;
    }
    for (std::size_t t = 0; t < lists[i].size(); ++t) {
      if (masks[i][t].intersects(used)) continue;
      pick[i] = t;
      VertexMask next = used;
      next.unite(masks[i][t]);
      self(self, i + 1, next);
    }
  };
  descend(descend, 0, VertexMask(d.vertex_count()));
  return total;
}

bool is_compatible(const WeightedDag& d, const std::vector<int>& u,
                   const std::vector<int>& v, std::int64_t cap) {
  // The source and sink tuples may have different lengths; the condition
  // quantifies over index pairs on each side independently.
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      for (std::size_t k = 0; k < v.size(); ++k) {
        for (std::size_t l = k + 1; l < v.size(); ++l) {
          if (d.path_count(u[i], v[l]) * d.path_count(u[j], v[k]) > cap)
            throw ExplosionGuard("pairwise path product beyond " + std::to_string(cap));
          const auto crossing = d.paths(u[i], v[l], cap);
          const auto crossed = d.paths(u[j], v[k], cap);
          for (const auto& p : crossing) {
            const VertexMask pm = mask_of(p, d.vertex_count());
            for (const auto& q : crossed)
              if (!pm.intersects(mask_of(q, d.vertex_count()))) return false;
          }
        }
      }
    }
  }
  return true;
}

Poly signed_gf(const WeightedDag& d, const std::vector<int>& u,
               const std::vector<int>& v, std::int64_t cap) {
  if (u.size() != v.size())
    throw LengthMismatch("tuple lengths differ: " + std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()));
  const std::size_t m = u.size();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  Poly out;
  do {
    std::vector<int> permuted;
    for (std::size_t i = 0; i < m; ++i) permuted.push_back(u[static_cast<std::size_t>(perm[i] - 1)]);
    const Poly f0 = nonintersecting_gf(d, permuted, v, cap);
    if (permutation_sign(perm) > 0)
      out += f0;
    else
      out -= f0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int GridDag::at(int column, int row) const {
  if (column < 1 || column > width || row < 1 || row > height)
    throw IndexOutOfRange("grid position (" + std::to_string(column) + "," +
                          std::to_string(row) + ") outside " + std::to_string(width) +
                          "x" + std::to_string(height));
  return (row - 1) * width + column;
}

GridDag grid_dag(int width, int height) {
  GridDag g{WeightedDag(width * height), width, height};
  for (int row = 1; row <= height; ++row) {
    for (int column = 1; column <= width; ++column) {
      if (column < width)
        g.dag.add_edge(g.at(column, row), g.at(column + 1, row),
                       Poly::variable(vars::x(row)));
      if (row < height)
        g.dag.add_edge(g.at(column, row), g.at(column, row + 1), Poly::one());
    }
  }
  return g;
}

std::string dag_to_text(const WeightedDag& d) {
  std::string out = "vertex " + std::to_string(d.vertex_count()) + "\n";
  for (const WeightedDag::Edge& e : d.edges())
    out += "edge " + std::to_string(e.from) + " " + std::to_string(e.to) + " " +
           e.weight.to_string(true) + "\n";
  return out;
}

WeightedDag dag_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string keyword;
  if (!(in >> keyword) || keyword != "vertex")
    throw ParseError("expected `vertex N` header");
  long long count;
  if (!(in >> count) || count < 0) throw ParseError("bad vertex count");
  WeightedDag d(static_cast<int>(count));
  while (in >> keyword) {
    if (keyword != "edge") throw ParseError("expected `edge`, got `" + keyword + "`");
    long long from, to;
    std::string weight;
    if (!(in >> from >> to >> weight)) throw ParseError("truncated edge line");
    d.add_edge(static_cast<int>(from), static_cast<int>(to), Poly::parse(weight));
  }
  return d;
}

} // namespace pflab
