#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cspec/enumeration.hpp"
#include "cspec/graph.hpp"
#include "oracles.hpp"

using namespace cspec;

namespace {

std::size_t class_size(int n, int kappa, DiameterRule rule = DiameterRule::any) {
  std::size_t count = 0;
  enumerate_class({n, kappa, rule}, [&](const Graph&, EdgeMask) { ++count; });
  return count;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return h;
}

}  // namespace

TEST(Enumerate, SmallClasses) {
  EXPECT_EQ(class_size(4, 3), 1U);
  // connected labeled graphs on 4 vertices
  std::size_t total = 0;
  for (int k = 1; k <= 3; ++k) total += class_size(4, k);
  EXPECT_EQ(total, 38U);
}

TEST(Enumerate, ConnectedLabeledCounts) {
  // OEIS A001187
  const std::map<int, std::size_t> known{{2, 1}, {3, 4}, {4, 38}, {5, 728}, {6, 26704}};
  for (auto [n, want] : known) {
    std::size_t total = 0;
    for (int k = 1; k < n; ++k) total += class_size(n, k);
    EXPECT_EQ(total, want) << "n = " << n;
  }
}

TEST(Enumerate, ClassSizesMatchDefinitionRecount) {
  for (int n = 3; n <= 5; ++n) {
    std::map<int, std::size_t> by_kappa;
    oracle::for_each_labeled(n, [&](const oracle::Matrix& m) {
      if (oracle::connected(m)) ++by_kappa[oracle::connectivity(m)];
    });
    for (int k = 1; k < n; ++k) EXPECT_EQ(class_size(n, k), by_kappa[k]) << n << ' ' << k;
  }
}

TEST(Enumerate, DiameterRulesPartitionTheClass) {
  for (int n = 4; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      const std::size_t all = class_size(n, k);
      const std::size_t two = class_size(n, k, DiameterRule::exactly_two);
      const std::size_t far = class_size(n, k, DiameterRule::at_least_three);
      const std::size_t complete = k == n - 1 ? 1U : 0U;
      EXPECT_EQ(all, two + far + complete);
    }
  enumerate_class({6, 2, DiameterRule::at_least_three},
                  [](const Graph& g, EdgeMask) { EXPECT_GE(oracle::diameter(oracle::to_matrix(g)), 3); });
}

TEST(Enumerate, MasksAscendAndRoundTrip) {
  const MaskCodec codec(5);
  EdgeMask last = 0;
  bool first = true;
  enumerate_class({5, 2, DiameterRule::any}, [&](const Graph& g, EdgeMask m) {
    if (!first) EXPECT_GT(m, last);
    first = false;
    last = m;
    EXPECT_EQ(codec.encode(g), m);
    EXPECT_EQ(codec.decode(m), g);
  });
}

TEST(Enumerate, ShardsCoverTheRange) {
  for (int shards : {1, 2, 3, 8, 1000}) {
    const auto parts = split_masks(5, shards);
    EXPECT_EQ(parts.front().lo, 0U);
    EXPECT_EQ(parts.back().hi, mask_limit(5));
    for (std::size_t i = 1; i < parts.size(); ++i) EXPECT_EQ(parts[i].lo, parts[i - 1].hi);
    std::size_t total = 0;
    for (const auto& p : parts) enumerate_shard({5, 1, DiameterRule::any}, p, [&](const Graph&, EdgeMask) { ++total; });
    EXPECT_EQ(total, class_size(5, 1));
  }
}

TEST(Enumerate, ParallelFoldIsJobIndependent) {
  auto count = [](int jobs, int shards) {
    return parallel_fold<std::vector<EdgeMask>>(
        split_masks(6, shards), jobs,
        [](std::vector<EdgeMask>& st, Shard s) {
          enumerate_shard({6, 2, DiameterRule::exactly_two}, s, [&](const Graph&, EdgeMask m) { st.push_back(m); });
        },
        [](std::vector<EdgeMask>& into, const std::vector<EdgeMask>& from) {
          into.insert(into.end(), from.begin(), from.end());
        });
  };
  const auto base = count(1, 1);
  EXPECT_EQ(count(4, 4), base);
  EXPECT_EQ(count(2, 7), base);
}

TEST(Enumerate, RejectsBadFilters) {
  EXPECT_THROW(validate_filter({9, 1, DiameterRule::any}), std::invalid_argument);
  EXPECT_THROW(validate_filter({1, 1, DiameterRule::any}), std::invalid_argument);
  EXPECT_THROW(validate_filter({5, 5, DiameterRule::any}), std::invalid_argument);
  EXPECT_THROW(validate_filter({5, 0, DiameterRule::any}), std::invalid_argument);
  EXPECT_THROW(parse_diameter_rule("3"), std::invalid_argument);
  EXPECT_EQ(parse_diameter_rule("ge3"), DiameterRule::at_least_three);
}

TEST(Canonical, RelabelingInvariance) {
  std::mt19937_64 rng(17);
  const Graph p4 = path_graph(4);
  std::vector<int> perm{0, 1, 2, 3};
  do {
    EXPECT_EQ(canonical_form(relabel(p4, perm)), canonical_form(p4));
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_NE(canonical_form(p4), canonical_form(complete_bipartite(1, 3)));
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::to_graph(oracle::random_matrix(7, 0.5, rng));
    std::vector<int> p(7);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_TRUE(isomorphic(g, relabel(g, p)));
    EXPECT_EQ(canonical_graph(g).edge_count(), g.edge_count());
  }
}

TEST(Canonical, IsomorphismClassesOnSixVertices) {
  std::vector<Graph> connected;
  std::set<std::string> certificates;
  oracle::for_each_labeled(6, [&](const oracle::Matrix& m) {
    if (!oracle::connected(m)) return;
    connected.push_back(oracle::to_graph(m));
    certificates.insert(oracle::certificate(m));
  });
  // OEIS A001349
  EXPECT_EQ(certificates.size(), 112U);
  EXPECT_EQ(dedup_isomorphs(connected).size(), 112U);
  std::vector<Graph> reversed(connected.rbegin(), connected.rend());
  EXPECT_EQ(dedup_isomorphs(reversed).size(), 112U);
  EXPECT_TRUE(dedup_isomorphs({}).empty());
}
