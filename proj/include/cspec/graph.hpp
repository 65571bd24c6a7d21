#pragma once

// Simple undirected graphs on at most 64 vertices, stored as one adjacency
// bitmask per vertex, plus the distance-based queries used throughout.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cspec {

using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet all_vertices(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : vertex_bit(n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("graph order must lie in [0, 64], got " + std::to_string(n));
    }
  }

  int order() const { return n_; }

  VertexSet vertices() const { return all_vertices(n_); }

  bool adjacent(int u, int v) const { return contains(rows_[static_cast<std::size_t>(u)], v); }

  VertexSet neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  int min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    rows_[static_cast<std::size_t>(v)] |= vertex_bit(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u)] &= ~vertex_bit(v);
    rows_[static_cast<std::size_t>(v)] &= ~vertex_bit(u);
  }

  Graph with_edge(int u, int v) const {
    Graph h = *this;
    h.add_edge(u, v);
    return h;
  }

  Graph without_edge(int u, int v) const {
    Graph h = *this;
    h.remove_edge(u, v);
    return h;
  }

  /// Edges as (u, v) with u < v, ordered by v then u.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v < n_; ++v) {
      for (int u = 0; u < v; ++u) {
        if (adjacent(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw std::out_of_range("vertex index out of range");
    }
    if (u == v) throw std::invalid_argument("loops are not allowed");
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
};

// ---------------------------------------------------------------- builders

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

/// K_{x,y} with parts [0, x) and [x, x + y).
inline Graph complete_bipartite(int x, int y) {
  Graph g(x + y);
  for (int u = 0; u < x; ++u)
    for (int v = x; v < x + y; ++v) g.add_edge(u, v);
  return g;
}

/// Vertices of `b` are shifted past those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

/// Subgraph induced by `keep`, relabeled to 0..|keep|-1 in increasing order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  const std::vector<int> kept = members(keep);
  Graph h(static_cast<int>(kept.size()));
  for (std::size_t j = 1; j < kept.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (g.adjacent(kept[i], kept[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int v = 1; v < g.order(); ++v)
    for (int u = 0; u < v; ++u)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

// ---------------------------------------------------------------- traversal

/// Vertices reachable from `start` without leaving `allowed`.
inline VertexSet reachable_within(const Graph& g, int start, VertexSet allowed) {
  VertexSet seen = vertex_bit(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// True when the subgraph induced by `allowed` is connected; the empty set counts as connected.
inline bool is_connected_within(const Graph& g, VertexSet allowed) {
  allowed &= g.vertices();
  if (allowed == 0) return true;
  return reachable_within(g, std::countr_zero(allowed), allowed) == allowed;
}

inline bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

/// Connected components of the subgraph induced by `allowed`, ordered by smallest member.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet allowed) {
  std::vector<VertexSet> out;
  allowed &= g.vertices();
  while (allowed != 0) {
    const VertexSet comp = reachable_within(g, std::countr_zero(allowed), allowed);
    out.push_back(comp);
    allowed &= ~comp;
  }
  return out;
}

inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(what) + ": graph is disconnected");
}

/// BFS distances from `source`; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen = vertex_bit(source);
  VertexSet frontier = seen;
  int level = 0;
  while (frontier != 0) {
    for (VertexSet f = frontier; f != 0; f &= f - 1) dist[static_cast<std::size_t>(std::countr_zero(f))] = level;
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= ~seen;
    seen |= next;
    frontier = next;
    ++level;
  }
  return dist;
}

inline int diameter(const Graph& g) {
  require_connected(g, "diameter");
  int best = 0;
  for (int v = 0; v < g.order(); ++v)
    for (int d : bfs_distances(g, v)) best = std::max(best, d);
  return best;
}

/// Sum of shortest-path distances over unordered vertex pairs.
inline long long transmission(const Graph& g) {
  require_connected(g, "transmission");
  long long twice = 0;
  for (int v = 0; v < g.order(); ++v)
    for (int d : bfs_distances(g, v)) twice += d;
  return twice / 2;
}

/// A two-colouring (side of the lowest vertex of each component first), or nothing.
inline std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Graph& g) {
  VertexSet left = 0;
  VertexSet right = 0;
  VertexSet unseen = g.vertices();
  while (unseen != 0) {
    VertexSet frontier = vertex_bit(std::countr_zero(unseen));
    bool on_left = true;
    while (frontier != 0) {
      (on_left ? left : right) |= frontier;
      unseen &= ~frontier;
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      // an edge inside the current layer means an odd cycle
      if ((next & frontier) != 0) return std::nullopt;
      next &= unseen;
      frontier = next;
      on_left = !on_left;
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet same = contains(left, v) ? left : right;
    if ((g.neighbors(v) & same) != 0) return std::nullopt;
  }
  return std::make_pair(left, right);
}

}  // namespace cspec
