#include <gtest/gtest.h>

#include "cspec/connectivity.hpp"
#include "cspec/constructions.hpp"
#include "cspec/enumeration.hpp"
#include "cspec/graph.hpp"
#include "oracles.hpp"

using namespace cspec;

TEST(ThreeCliqueJoin, ComplementAndDiameter) {
  EXPECT_TRUE(isomorphic(complement(build_three_clique_join({1, 4, 2})),
                         disjoint_union(complete_bipartite(1, 4), empty_graph(2))));
  for (int s = 1; s <= 4; ++s)
    for (int t = 1; t <= 4; ++t)
      for (int k = 1; k <= 3; ++k) {
        const auto m = oracle::to_matrix(build_three_clique_join({s, t, k}));
        EXPECT_EQ(oracle::diameter(m), 2);
        EXPECT_EQ(oracle::connectivity(m), k);
      }
}

TEST(DetachedJoin, SmallInstance) {
  const Graph g = build_detached_join({1, 3, 2});
  const auto m = oracle::to_matrix(g);
  EXPECT_EQ(oracle::connectivity(m), 2);
  EXPECT_EQ(oracle::diameter(m), 3);
  // complement: 0 ~ {1, 2, 3}, v = 3 ~ {4, 5}
  Graph tree(6);
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}}) tree.add_edge(u, v);
  EXPECT_EQ(complement(g), tree);
}

TEST(DetachedJoin, ConnectivityAndDiameterSweep) {
  for (int s = 1; s <= 4; ++s)
    for (int t = std::max(s, 2); t <= 6; ++t)
      for (int k = 1; k <= t - 1 && s + t + k <= 11; ++k) {
        const auto m = oracle::to_matrix(build_detached_join({s, t, k}));
        EXPECT_EQ(oracle::connectivity(m), k) << s << ' ' << t << ' ' << k;
        EXPECT_EQ(oracle::diameter(m), 3);
      }
}

TEST(DetachedJoin, InvalidParameters) {
  try {
    build_detached_join({1, 2, 2});
    FAIL() << "expected ParameterError";
  } catch (const ParameterError& e) {
    EXPECT_STREQ(e.what(), "t-1 >= kappa required for family B");
  }
  EXPECT_THROW(build_detached_join({3, 2, 1}), ParameterError);
  EXPECT_THROW(build_detached_join({0, 3, 1}), ParameterError);
  EXPECT_THROW(build_detached_join({1, 1, 1}), ParameterError);
  EXPECT_THROW(build_three_clique_join({30, 30, 5}), ParameterError);
}

TEST(LinkedCliques, JoinVariant) {
  const Graph g = build_linked_cliques({3, 3, 1, LinkVariant::join});
  EXPECT_EQ(oracle::connectivity(oracle::to_matrix(g)), 1);
  const Graph gc = complement(g);
  EXPECT_EQ(gc.edge_count(), 8);
  EXPECT_TRUE(is_bipartite(gc));
  EXPECT_EQ(gc, complete_bipartite(3, 3).without_edge(0, 3));
}

TEST(LinkedCliques, VariantsCoincideForSingleLink) {
  for (int n1 = 2; n1 <= 5; ++n1)
    for (int n2 = 1; n2 <= n1; ++n2)
      EXPECT_EQ(build_linked_cliques({n1, n2, 1, LinkVariant::join}),
                build_linked_cliques({n1, n2, 1, LinkVariant::matching}));
}

TEST(LinkedCliques, ConnectivityEqualsLinkSize) {
  for (auto variant : {LinkVariant::join, LinkVariant::matching})
    for (int n1 = 1; n1 <= 6; ++n1)
      for (int n2 = 1; n2 <= n1; ++n2)
        for (int k = 1; k <= n2; ++k) {
          if (n1 + n2 <= 2 * k) continue;
          const auto m = oracle::to_matrix(build_linked_cliques({n1, n2, k, variant}));
          EXPECT_EQ(oracle::connectivity(m), k) << n1 << ' ' << n2 << ' ' << k << ' ' << to_string(variant);
        }
}

TEST(LinkedCliques, InvalidParameters) {
  EXPECT_THROW(build_linked_cliques({2, 2, 2, LinkVariant::join}), ParameterError);
  EXPECT_THROW(build_linked_cliques({3, 4, 1, LinkVariant::join}), ParameterError);
  EXPECT_THROW(build_linked_cliques({3, 1, 2, LinkVariant::join}), ParameterError);
  EXPECT_THROW(parse_link_variant("star"), ParameterError);
  EXPECT_EQ(parse_link_variant("matching"), LinkVariant::matching);
}

TEST(Membership, Examples) {
  EXPECT_TRUE(validate_membership(build_detached_join({1, 3, 2}), 6, 2));
  EXPECT_TRUE(validate_membership(build_linked_cliques({3, 3, 1, LinkVariant::join}), 6, 1));
  EXPECT_FALSE(validate_membership(cycle_graph(6), 6, 1));
  EXPECT_FALSE(validate_membership(empty_graph(6), 6, 0));
}

TEST(Saturation, ContainsGraphAndIsDetachedJoin) {
  const Graph c6 = cycle_graph(6);
  const CutProfile p = cut_profile(c6, vertex_bit(1) | vertex_bit(5));
  const Graph h = saturate_around_cut(c6, p);
  for (auto [u, v] : c6.edges()) EXPECT_TRUE(h.adjacent(u, v));
  EXPECT_TRUE(isomorphic(h, build_detached_join({1, 3, 2})));
}
