#pragma once

// The three parametric extremal families.
//
//  * three-clique join (s, t, k): cliques S, T, C of sizes s, t, k; C is
//    joined completely to S and to T; no S-T edges. Its complement is
//    K_{s,t} plus k isolated vertices. Diameter 2.
//  * detached join (s, t, k): as above, except one vertex v of T has no
//    neighbour in C. Diameter 3.
//  * linked cliques (n1, n2, k): cliques K_{n1}, K_{n2} with k vertices U of
//    the first linked to k vertices W of the second, either by the complete
//    join U-W or by a perfect matching U[i]-W[i].
//
// Vertex layout (fixed, so that graph6 output is reproducible):
//   three-clique / detached join: [0, s) = S, [s, s+t) = T with v = s+t-1,
//                                 [s+t, n) = C
//   linked cliques: [0, n1) first clique with U = [0, k),
//                   [n1, n) second clique with W = [n1, n1+k)

#include <stdexcept>
#include <string>

#include "cspec/connectivity.hpp"
#include "cspec/graph.hpp"

namespace cspec {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct JoinParams {
  int s = 1;
  int t = 2;
  int k = 1;

  int order() const { return s + t + k; }
};

enum class LinkVariant { join, matching };

inline const char* to_string(LinkVariant v) { return v == LinkVariant::join ? "join" : "matching"; }

inline LinkVariant parse_link_variant(const std::string& s) {
  if (s == "join") return LinkVariant::join;
  if (s == "matching") return LinkVariant::matching;
  throw ParameterError("unknown link variant '" + s + "' (expected join or matching)");
}

struct LinkParams {
  int n1 = 1;
  int n2 = 1;
  int k = 1;
  LinkVariant variant = LinkVariant::join;

  int order() const { return n1 + n2; }
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

inline void add_clique(Graph& g, int begin, int end) {
  for (int v = begin + 1; v < end; ++v)
    for (int u = begin; u < v; ++u) g.add_edge(u, v);
}

inline void add_join(Graph& g, VertexSet a, VertexSet b) {
  for (int u : members(a))
    for (int v : members(b))
      if (u != v) g.add_edge(u, v);
}

inline VertexSet range_set(int begin, int end) { return all_vertices(end) & ~all_vertices(begin); }

}  // namespace detail

/// Only positivity and the order cap are required here.
inline void validate_three_clique(const JoinParams& p) {
  detail::require(p.s >= 1, "s >= 1 required");
  detail::require(p.t >= 1, "t >= 1 required");
  detail::require(p.k >= 1, "kappa >= 1 required");
  detail::require(p.order() <= kMaxVertices, "s + t + kappa <= 64 required");
}

inline void validate_detached(const JoinParams& p) {
  detail::require(p.s >= 1, "s >= 1 required");
  detail::require(p.t >= 2, "t >= 2 required for family B");
  detail::require(p.k >= 1, "kappa >= 1 required");
  detail::require(p.t - 1 >= p.k, "t-1 >= kappa required for family B");
  detail::require(p.s <= p.t, "s <= t required for family B");
  detail::require(p.order() <= kMaxVertices, "s + t + kappa <= 64 required");
}

inline void validate_linked(const LinkParams& p) {
  detail::require(p.k >= 1, "kappa >= 1 required");
  detail::require(p.n1 >= p.k && p.n2 >= p.k, "n1 >= kappa and n2 >= kappa required");
  detail::require(p.n1 + p.n2 > 2 * p.k, "n1 + n2 > 2 kappa required");
  detail::require(p.n1 >= p.n2, "n1 >= n2 required");
  detail::require(p.order() <= kMaxVertices, "n1 + n2 <= 64 required");
}

inline Graph build_three_clique_join(const JoinParams& p) {
  validate_three_clique(p);
  Graph g(p.order());
  const int s_end = p.s;
  const int t_end = p.s + p.t;
  detail::add_clique(g, 0, s_end);
  detail::add_clique(g, s_end, t_end);
  detail::add_clique(g, t_end, p.order());
  const VertexSet cut = detail::range_set(t_end, p.order());
  detail::add_join(g, detail::range_set(0, s_end), cut);
  detail::add_join(g, detail::range_set(s_end, t_end), cut);
  return g;
}

inline int detached_vertex(const JoinParams& p) { return p.s + p.t - 1; }

inline Graph build_detached_join(const JoinParams& p) {
  validate_detached(p);
  Graph g(p.order());
  const int s_end = p.s;
  const int t_end = p.s + p.t;
  detail::add_clique(g, 0, s_end);
  detail::add_clique(g, s_end, t_end);
  detail::add_clique(g, t_end, p.order());
  const VertexSet cut = detail::range_set(t_end, p.order());
  detail::add_join(g, detail::range_set(0, s_end), cut);
  detail::add_join(g, detail::range_set(s_end, t_end - 1), cut);
  return g;
}

inline Graph build_linked_cliques(const LinkParams& p) {
  validate_linked(p);
  Graph g(p.order());
  detail::add_clique(g, 0, p.n1);
  detail::add_clique(g, p.n1, p.order());
  if (p.variant == LinkVariant::join) {
    detail::add_join(g, detail::range_set(0, p.k), detail::range_set(p.n1, p.n1 + p.k));
  } else {
    for (int i = 0; i < p.k; ++i) g.add_edge(i, p.n1 + i);
  }
  return g;
}

/// Saturates g around a cut profile, in g's own labeling: cliques on the small
/// side, the large side and the cut; the cut joined to the small side and to
/// the large side minus the detached vertex (if any). The result contains g
/// and is a relabeled detached join, or a three-clique join when the profile
/// has no detached vertex.
inline Graph saturate_around_cut(const Graph& g, const CutProfile& p) {
  Graph h(g.order());
  auto clique = [&](VertexSet part) {
    const auto vs = members(part);
    for (std::size_t j = 1; j < vs.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) h.add_edge(vs[i], vs[j]);
  };
  clique(p.small_side);
  clique(p.large_side);
  clique(p.cut);
  detail::add_join(h, p.small_side, p.cut);
  VertexSet attached = p.large_side;
  if (p.detached) attached &= ~vertex_bit(*p.detached);
  detail::add_join(h, attached, p.cut);
  return h;
}

/// Membership in the class of connected graphs on n vertices with connectivity kappa.
inline bool validate_membership(const Graph& g, int n, int kappa) {
  if (g.order() != n || !is_connected(g)) return false;
  return vertex_connectivity(g) == kappa;
}

}  // namespace cspec
