#pragma once

// Exhaustive enumeration of labeled graphs on n <= 8 vertices.
//
// A labeled graph is identified with an edge mask: bit b is the b-th vertex
// pair in graph6 column order (0,1), (0,2), (1,2), (0,3), ... Masks are
// visited in ascending order; a shard is a half-open mask range.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cspec/connectivity.hpp"
#include "cspec/graph.hpp"
#include "cspec/io.hpp"

namespace cspec {

inline constexpr int kEnumerationMaxOrder = 8;

using EdgeMask = std::uint64_t;

enum class DiameterRule { any, exactly_two, at_least_three };

inline const char* to_string(DiameterRule r) {
  switch (r) {
    case DiameterRule::any: return "any";
    case DiameterRule::exactly_two: return "2";
    case DiameterRule::at_least_three: return "ge3";
  }
  return "?";
}

inline DiameterRule parse_diameter_rule(const std::string& s) {
  if (s == "any") return DiameterRule::any;
  if (s == "2") return DiameterRule::exactly_two;
  if (s == "ge3") return DiameterRule::at_least_three;
  throw std::invalid_argument("unknown diameter rule '" + s + "' (expected 2, ge3 or any)");
}

struct ClassFilter {
  int n = 1;
  int kappa = 0;
  DiameterRule rule = DiameterRule::any;
};

inline void validate_filter(const ClassFilter& f) {
  if (f.n < 2 || f.n > kEnumerationMaxOrder) {
    throw std::invalid_argument("enumeration supports 2 <= n <= 8, got n = " + std::to_string(f.n));
  }
  if (f.kappa < 1 || f.kappa > f.n - 1) throw std::invalid_argument("1 <= kappa <= n-1 required");
}

struct Shard {
  EdgeMask lo = 0;
  EdgeMask hi = 0;
};

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline EdgeMask mask_limit(int n) { return EdgeMask{1} << pair_count(n); }

/// Contiguous, near-equal split of [0, 2^(n(n-1)/2)).
inline std::vector<Shard> split_masks(int n, int shards) {
  shards = std::max(shards, 1);
  const EdgeMask total = mask_limit(n);
  std::vector<Shard> out;
  for (int i = 0; i < shards; ++i) {
    const EdgeMask lo = total * static_cast<EdgeMask>(i) / static_cast<EdgeMask>(shards);
    const EdgeMask hi = total * static_cast<EdgeMask>(i + 1) / static_cast<EdgeMask>(shards);
    if (lo < hi) out.push_back({lo, hi});
  }
  return out;
}

/// Translates between edge masks and graphs for a fixed order.
class MaskCodec {
 public:
  explicit MaskCodec(int n) : n_(n) {
    if (n < 0 || n > kEnumerationMaxOrder) throw std::invalid_argument("mask codec supports n <= 8");
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  }

  int order() const { return n_; }

  Graph decode(EdgeMask mask) const {
    Graph g(n_);
    for (std::size_t b = 0; b < pairs_.size(); ++b)
      if ((mask >> b) & 1U) g.add_edge(pairs_[b].first, pairs_[b].second);
    return g;
  }

  EdgeMask encode(const Graph& g) const {
    EdgeMask mask = 0;
    for (std::size_t b = 0; b < pairs_.size(); ++b)
      if (g.adjacent(pairs_[b].first, pairs_[b].second)) mask |= EdgeMask{1} << b;
    return mask;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

/// Diameter classification for a connected graph, without full BFS distances.
inline bool diameter_at_most_two(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    VertexSet reach = g.neighbors(v) | vertex_bit(v);
    for (VertexSet f = g.neighbors(v); f != 0; f &= f - 1) reach |= g.neighbors(std::countr_zero(f));
    if (reach != g.vertices()) return false;
  }
  return true;
}

inline bool passes_diameter_rule(const Graph& g, DiameterRule rule) {
  switch (rule) {
    case DiameterRule::any: return true;
    case DiameterRule::exactly_two: return !is_complete(g) && diameter_at_most_two(g);
    case DiameterRule::at_least_three: return !diameter_at_most_two(g);
  }
  return false;
}

/// Calls fn(graph, mask) for every class member with mask in [shard.lo, shard.hi).
template <class Fn>
void enumerate_shard(const ClassFilter& f, Shard shard, Fn&& fn) {
  validate_filter(f);
  const MaskCodec codec(f.n);
  for (EdgeMask mask = shard.lo; mask < shard.hi; ++mask) {
    // fewer than n-1 edges cannot be connected; fewer than n*kappa/2 cannot be kappa-connected
    if (2 * std::popcount(mask) < f.n * f.kappa) continue;
    const Graph g = codec.decode(mask);
    if (g.min_degree() < f.kappa || !is_connected(g)) continue;
    if (vertex_connectivity_exhaustive(g) != f.kappa) continue;
    if (!passes_diameter_rule(g, f.rule)) continue;
    fn(g, mask);
  }
}

template <class Fn>
void enumerate_class(const ClassFilter& f, Fn&& fn) {
  validate_filter(f);
  enumerate_shard(f, Shard{0, mask_limit(f.n)}, std::forward<Fn>(fn));
}

inline std::vector<Graph> collect_class(const ClassFilter& f) {
  std::vector<Graph> out;
  enumerate_class(f, [&](const Graph& g, EdgeMask) { out.push_back(g); });
  return out;
}

/// Runs `body(state, shard)` on each shard, one thread per shard when jobs > 1,
/// then folds the shard states left to right with `merge(into, from)`.
template <class State, class Body, class Merge>
State parallel_fold(const std::vector<Shard>& shards, int jobs, Body&& body, Merge&& merge) {
  std::vector<State> states(shards.size());
  if (jobs <= 1 || shards.size() <= 1) {
    for (std::size_t i = 0; i < shards.size(); ++i) body(states[i], shards[i]);
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    // at most `jobs` threads in flight, shards taken in order
    while (next < shards.size()) {
      const std::size_t batch_end = std::min(shards.size(), next + static_cast<std::size_t>(jobs));
      for (std::size_t i = next; i < batch_end; ++i) pool.emplace_back([&, i] { body(states[i], shards[i]); });
      for (auto& t : pool) t.join();
      pool.clear();
      next = batch_end;
    }
  }
  State total{};
  for (auto& s : states) merge(total, s);
  return total;
}

// ---------------------------------------------------------------- isomorphism

namespace detail {

// Smallest upper-triangle bit string over all relabelings, as an integer
// whose most significant bit is the first pair in graph6 order.
inline EdgeMask canonical_bits(const Graph& g) {
  const int n = g.order();
  const int bits = pair_count(n);
  std::array<int, kEnumerationMaxOrder> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  EdgeMask best = ~EdgeMask{0};
  do {
    EdgeMask key = 0;
    int used = 0;
    bool worse = false;
    for (int j = 1; j < n && !worse; ++j) {
      const VertexSet row = g.neighbors(perm[static_cast<std::size_t>(j)]);
      for (int i = 0; i < j; ++i) {
        key = (key << 1) | ((row >> perm[static_cast<std::size_t>(i)]) & 1U);
        ++used;
      }
      // prune once the prefix already exceeds the best prefix
      if (best != ~EdgeMask{0}) {
        const EdgeMask best_prefix = best >> (bits - used);
        if (key > best_prefix) worse = true;
      }
    }
    if (!worse && key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

}  // namespace detail

/// Relabeling of g with the smallest graph6 body; equal for isomorphic graphs.
inline Graph canonical_graph(const Graph& g) {
  if (g.order() > kEnumerationMaxOrder) throw std::invalid_argument("canonical_form supports n <= 8");
  const int n = g.order();
  const EdgeMask bits = detail::canonical_bits(g);
  const int total = pair_count(n);
  Graph h(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((bits >> (total - 1 - k)) & 1U) h.add_edge(i, j);
  return h;
}

inline std::string canonical_form(const Graph& g) { return graph6_encode(canonical_graph(g)); }

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

/// Keeps the first representative of each isomorphism class, in input order.
inline std::vector<Graph> dedup_isomorphs(const std::vector<Graph>& graphs) {
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (const auto& g : graphs)
    if (seen.insert(canonical_form(g)).second) out.push_back(g);
  return out;
}

}  // namespace cspec
