#pragma once

// Vertex connectivity, minimum vertex cuts and the component split around a cut.

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "cspec/graph.hpp"

namespace cspec {

/// Exhaustive search is used up to this order; larger graphs go through max-flow.
inline constexpr int kExhaustiveCutLimit = 12;

inline bool is_complete(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

/// True when removing `cut` leaves at least two components.
inline bool is_vertex_cut(const Graph& g, VertexSet cut) {
  const VertexSet rest = g.vertices() & ~cut;
  if (set_size(rest) < 2) return false;
  return !is_connected_within(g, rest);
}

namespace detail {

// Calls fn(subset) for every k-subset of the first n vertices in increasing
// numeric order; stops early when fn returns true.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  if (k == 0) return fn(VertexSet{0});
  if (k > n) return false;
  VertexSet s = all_vertices(k);
  const VertexSet limit = all_vertices(n);
  while (true) {
    if (fn(s)) return true;
    // Gosper's hack
    const VertexSet c = s & (~s + 1);
    const VertexSet r = s + c;
    if (r == 0 || (r & ~limit) != 0) return false;
    s = (((r ^ s) >> 2) / c) | r;
    if ((s & ~limit) != 0) return false;
  }
}

}  // namespace detail

/// Exhaustive subset search. Complete graphs return n - 1.
inline int vertex_connectivity_exhaustive(const Graph& g) {
  require_connected(g, "vertex_connectivity");
  const int n = g.order();
  if (is_complete(g)) return std::max(n - 1, 0);
  // a non-complete graph always has a cut of size min degree
  const int delta = g.min_degree();
  for (int k = 1; k < delta; ++k) {
    if (detail::for_each_subset(n, k, [&](VertexSet s) { return is_vertex_cut(g, s); })) return k;
  }
  return delta;
}

namespace detail {

// Unit-capacity max flow on the split-vertex digraph: vertex v becomes
// v_in = 2v, v_out = 2v + 1 with an arc of capacity one between them.
class VertexFlow {
 public:
  explicit VertexFlow(const Graph& g) : n_(g.order()), cap_(static_cast<std::size_t>(4 * n_ * n_), 0) {
    for (int v = 0; v < n_; ++v) arc(2 * v, 2 * v + 1) = 1;
    for (auto [u, v] : g.edges()) {
      arc(2 * u + 1, 2 * v) = kInfinite;
      arc(2 * v + 1, 2 * u) = kInfinite;
    }
  }

  /// Number of internally vertex-disjoint paths between two non-adjacent vertices, capped at `bound`.
  int disjoint_paths(int source, int sink, int bound) const {
    std::vector<int> cap = cap_;
    const int nodes = 2 * n_;
    const int from = 2 * source + 1;
    const int to = 2 * sink;
    int flow = 0;
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    while (flow < bound) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[static_cast<std::size_t>(from)] = from;
      std::queue<int> q;
      q.push(from);
      while (!q.empty() && parent[static_cast<std::size_t>(to)] < 0) {
        const int a = q.front();
        q.pop();
        for (int b = 0; b < nodes; ++b) {
          if (parent[static_cast<std::size_t>(b)] < 0 && cap[index(a, b)] > 0) {
            parent[static_cast<std::size_t>(b)] = a;
            q.push(b);
          }
        }
      }
      if (parent[static_cast<std::size_t>(to)] < 0) break;
      for (int b = to; b != from; b = parent[static_cast<std::size_t>(b)]) {
        const int a = parent[static_cast<std::size_t>(b)];
        cap[index(a, b)] -= 1;
        cap[index(b, a)] += 1;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a * 2 * n_ + b); }
  int& arc(int a, int b) { return cap_[index(a, b)]; }

  int n_;
  std::vector<int> cap_;
};

}  // namespace detail

/// Menger: minimum over non-adjacent pairs of the number of vertex-disjoint paths.
inline int vertex_connectivity_flow(const Graph& g) {
  require_connected(g, "vertex_connectivity");
  const int n = g.order();
  if (is_complete(g)) return std::max(n - 1, 0);
  const detail::VertexFlow flow(g);
  int best = g.min_degree();
  for (int u = 0; u < n; ++u) {
    // some vertex among the first best + 1 lies outside any minimum cut
    if (u > best) break;
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) best = std::min(best, flow.disjoint_paths(u, v, best));
    }
  }
  return best;
}

inline int vertex_connectivity(const Graph& g) {
  return g.order() <= kExhaustiveCutLimit ? vertex_connectivity_exhaustive(g) : vertex_connectivity_flow(g);
}

/// Every vertex set of size kappa(g) whose removal disconnects g, in increasing numeric order.
inline std::vector<VertexSet> all_minimum_cuts(const Graph& g) {
  if (g.order() > kExhaustiveCutLimit) {
    throw std::invalid_argument("all_minimum_cuts: exhaustive search limited to 12 vertices");
  }
  if (is_complete(g)) throw std::invalid_argument("all_minimum_cuts: complete graphs have no vertex cut");
  const int kappa = vertex_connectivity_exhaustive(g);
  std::vector<VertexSet> cuts;
  detail::for_each_subset(g.order(), kappa, [&](VertexSet s) {
    if (is_vertex_cut(g, s)) cuts.push_back(s);
    return false;
  });
  return cuts;
}

/// A minimum vertex cut together with the way the remaining vertices are split.
///
/// `small_side` is the component called G_s: the smallest component, or when a
/// detached vertex exists, the smallest component not containing it.
/// `large_side` (G_t) is the union of every other component. `detached` is a
/// vertex outside the cut with no neighbour in the cut, if one exists.
struct CutProfile {
  VertexSet cut = 0;
  std::vector<VertexSet> components;
  VertexSet small_side = 0;
  VertexSet large_side = 0;
  std::optional<int> detached;

  int cut_size() const { return set_size(cut); }
  int s() const { return set_size(small_side); }
  int t() const { return set_size(large_side); }
};

/// Ties between equally small components go to the one holding the lowest vertex index.
inline CutProfile cut_profile(const Graph& g, VertexSet cut) {
  cut &= g.vertices();
  if (!is_vertex_cut(g, cut)) throw std::invalid_argument("cut_profile: set does not disconnect the graph");
  if (set_size(cut) != vertex_connectivity(g)) {
    throw std::invalid_argument("cut_profile: cut is not of minimum size");
  }
  CutProfile p;
  p.cut = cut;
  p.components = components_within(g, g.vertices() & ~cut);

  for (int v = 0; v < g.order(); ++v) {
    if (!contains(cut, v) && (g.neighbors(v) & cut) == 0) {
      p.detached = v;
      break;
    }
  }

  std::optional<std::size_t> home;
  if (p.detached) {
    for (std::size_t i = 0; i < p.components.size(); ++i)
      if (contains(p.components[i], *p.detached)) home = i;
  }
  std::optional<std::size_t> smallest;
  for (std::size_t i = 0; i < p.components.size(); ++i) {
    if (home && i == *home) continue;
    // components are ordered by lowest member, so strict < keeps the lexicographic tie-break
    if (!smallest || set_size(p.components[i]) < set_size(p.components[*smallest])) smallest = i;
  }
  p.small_side = p.components[*smallest];
  p.large_side = g.vertices() & ~cut & ~p.small_side;
  return p;
}

}  // namespace cspec
