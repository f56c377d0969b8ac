#include "tvoronoi/constructions.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tvoronoi/reachability.hpp"

namespace tvoronoi {
namespace {

TemporalGraph static_graph(std::size_t n, EdgeSet edges) {
  return TemporalGraph(n, {std::move(edges)});
}

EdgeSet complete_bipartite(std::size_t a, std::size_t b) {
  EdgeSet out;
  for (Vertex u = 1; u <= a; ++u) {
    for (Vertex v = static_cast<Vertex>(a + 1); v <= a + b; ++v) out.push_back({u, v});
  }
  return out;
}

TEST(Instances, AllBuildAndAreValid) {
  for (const auto& id : instance_ids()) {
    const auto inst = build_instance(id);
    EXPECT_EQ(inst.id, id);
    EXPECT_TRUE(is_valid(inst.graph)) << id;
    EXPECT_FALSE(inst.expected.empty()) << id;
  }
  EXPECT_THROW(build_instance("nope"), std::invalid_argument);
}

TEST(TreeNe, Star) {
  const auto g = static_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  EXPECT_EQ(tree_ne(g), (Profile{1, 2}));
  EXPECT_TRUE(VoronoiGame(g, GameKind::rvor).is_nash(tree_ne(g)).is_nash);
}

TEST(TreeNe, ShortPath) {
  EXPECT_EQ(tree_ne(static_graph(3, {{1, 2}, {2, 3}})), (Profile{2, 1}));
  EXPECT_EQ(tree_ne(static_graph(2, {{1, 2}})), (Profile{1, 2}));
  EXPECT_EQ(tree_ne(static_graph(1, {})), (Profile{1, 1}));
}

TEST(TreeNe, RejectsNonTreesAndDisconnectedTrees) {
  EXPECT_THROW(tree_ne(static_graph(3, complete_edges(3))), std::invalid_argument);
  // Path whose middle edge is gone before the first edge appears.
  const TemporalGraph g(3, {{{2, 3}}, {{1, 2}}});
  EXPECT_FALSE(is_temporally_connected(g, all_pairs(g)));
  EXPECT_THROW(tree_ne(g), std::invalid_argument);
}

TEST(TreeNe, RandomTemporallyConnectedTrees) {
  std::mt19937_64 rng(123);
  int checked = 0;
  for (int i = 0; i < 3000 && checked < 300; ++i) {
    const std::size_t n = 1 + i % 12;
    const std::size_t tau = 1 + i % 4;
    const auto tree = testing::random_tree_edges(rng, n);
    std::bernoulli_distribution keep(0.7);
    std::vector<EdgeSet> layers(tau);
    for (const Edge& e : tree) {
      bool any = false;
      for (std::size_t t = 0; t < tau; ++t) {
        if (keep(rng)) {
          layers[t].push_back(e);
          any = true;
        }
      }
      if (!any) layers[tau - 1].push_back(e);
    }
    const TemporalGraph g(n, layers);
    if (!is_temporally_connected(g, all_pairs(g))) continue;
    const auto s = tree_ne(g);
    const auto d = all_pairs(g);
    const auto eq = testing::brute_force_nash(d, GameKind::rvor);
    EXPECT_TRUE(std::binary_search(eq.begin(), eq.end(), s)) << "i=" << i;
    if (n >= 2) {
      const std::size_t u1 = testing::definition_payoff(d, GameKind::rvor, s.p1, s.p2);
      const std::size_t u2 = testing::definition_payoff(d, GameKind::rvor, s.p2, s.p1);
      EXPECT_GE(2 * u1, n);
      EXPECT_LE(2 * u2, n);
    }
    ++checked;
  }
  EXPECT_GE(checked, 200);
}

TEST(KPartiteShrink, CompleteBipartite) {
  const auto g = static_graph(5, complete_bipartite(2, 3));
  const auto s = kpartite_shrink_ne(g);
  EXPECT_EQ(s, (Profile{1, 3}));
  const VoronoiGame game(g, GameKind::rvor);
  EXPECT_EQ(game.payoff(s).u1(), 3u);
  EXPECT_EQ(game.payoff(s).u2(), 2u);
  EXPECT_TRUE(game.is_nash(s).is_nash);
}

TEST(KPartiteShrink, SingleEdgeAndShrinkingK33) {
  EXPECT_EQ(kpartite_shrink_ne(static_graph(2, {{1, 2}})), (Profile{1, 2}));
  const EdgeSet full = complete_bipartite(3, 3);
  const TemporalGraph g(6, {full, edge_difference(full, {{1, 4}, {2, 5}})});
  const auto s = kpartite_shrink_ne(g);
  EXPECT_TRUE(VoronoiGame(g, GameKind::rvor).is_nash(s).is_nash);
}

TEST(KPartiteShrink, RejectsGrowingInput) {
  const EdgeSet full = complete_bipartite(2, 2);
  const TemporalGraph g(4, {{{1, 3}}, full});
  EXPECT_THROW(kpartite_shrink_ne(g), std::invalid_argument);
}

TEST(ThresholdShrink, StarAndEdgeless) {
  const auto star = static_graph(4, {{2, 1}, {2, 3}, {2, 4}});
  EXPECT_EQ(threshold_shrink_ne(star), (Profile{2, 1}));
  EXPECT_TRUE(VoronoiGame(star, GameKind::rvor).is_nash({2, 1}).is_nash);
  EXPECT_EQ(threshold_shrink_ne(static_graph(3, {})), (Profile{1, 2}));
  EXPECT_TRUE(VoronoiGame(static_graph(3, {}), GameKind::rvor).is_nash({1, 2}).is_nash);
}

TEST(ThresholdShrink, RejectsSplitNonThreshold) {
  EXPECT_THROW(threshold_shrink_ne(build_instance("shrink_split_8").graph), std::invalid_argument);
}

TEST(ShrinkingFamilies, RandomKPartiteAndThreshold) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    // Complete k-partite with random part sizes and vertex labels.
    const std::size_t n = 2 + i % 11;
    std::uniform_int_distribution<std::size_t> kdist(2, std::min<std::size_t>(4, n));
    const std::size_t k = kdist(rng);
    std::vector<std::size_t> part(n);
    for (std::size_t v = 0; v < n; ++v) part[v] = v < k ? v : std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    std::shuffle(part.begin(), part.end(), rng);
    EdgeSet edges;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        if (part[u - 1] != part[v - 1]) edges.push_back({u, v});
      }
    }
    const auto g = testing::random_shrinking(rng, n, edges, 1 + i % 3);
    const auto s = kpartite_shrink_ne(g);
    const auto eq = testing::brute_force_nash(all_pairs(g), GameKind::rvor);
    EXPECT_TRUE(std::binary_search(eq.begin(), eq.end(), s)) << "k-partite i=" << i;

    // Threshold graph from a random creation sequence.
    EdgeSet th;
    std::bernoulli_distribution dominating(0.5);
    for (Vertex v = 2; v <= n; ++v) {
      if (dominating(rng)) {
        for (Vertex u = 1; u < v; ++u) th.push_back({u, v});
      }
    }
    const auto h = testing::random_shrinking(rng, n, th, 1 + i % 3);
    const auto t = threshold_shrink_ne(h);
    const auto heq = testing::brute_force_nash(all_pairs(h), GameKind::rvor);
    EXPECT_TRUE(std::binary_search(heq.begin(), heq.end(), t)) << "threshold i=" << i;
  }
}

TEST(SplitShrink, SmallExamples) {
  // C = {1,2}, I = {3} with 3 adjacent to 1 only.
  const auto g = static_graph(3, {{1, 2}, {1, 3}});
  const auto r = vor_split_shrink_ne(g);
  EXPECT_TRUE(VoronoiGame(g, GameKind::vor).is_nash(r.profile).is_nash);
  const auto k3 = static_graph(3, complete_edges(3));
  EXPECT_TRUE(VoronoiGame(k3, GameKind::vor).is_nash(vor_split_shrink_ne(k3).profile).is_nash);
}

TEST(SplitShrink, PaperInstance) {
  const auto g = build_instance("shrink_split_8").graph;
  const auto r = vor_split_shrink_ne(g);
  EXPECT_TRUE(VoronoiGame(g, GameKind::vor).is_nash(r.profile).is_nash);
  EXPECT_EQ(r.partition.clique, (std::vector<Vertex>{4, 5, 6, 7}));
}

TEST(SplitShrink, PotentialRisesAlongDynamics) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + i % 9;
    const std::size_t c = std::uniform_int_distribution<std::size_t>(2, n)(rng);
    EdgeSet edges = complete_edges(c);
    std::bernoulli_distribution attach(0.4);
    for (Vertex v = static_cast<Vertex>(c + 1); v <= n; ++v) {
      for (Vertex u = 1; u <= c; ++u) {
        if (attach(rng)) edges.push_back({u, v});
      }
    }
    std::sort(edges.begin(), edges.end());
    const auto g = testing::random_shrinking(rng, n, edges, 1 + i % 3);
    const auto r = vor_split_shrink_ne(g);
    const auto eq = testing::brute_force_nash(all_pairs(g), GameKind::vor);
    EXPECT_TRUE(std::binary_search(eq.begin(), eq.end(), r.profile)) << "i=" << i;
    const StaticGraph first(n, g.layer(1));
    std::size_t previous = split_potential(first, r.partition, {r.partition.clique[0], r.partition.clique[1]});
    for (const auto& step : r.dynamics.trace) {
      const std::size_t now = split_potential(first, r.partition, step.profile);
      EXPECT_GT(now, previous) << "i=" << i;
      previous = now;
    }
  }
}

TEST(Completion, CliqueCompletionKeepsDistancesAndNoEquilibrium) {
  for (const std::string id : {"grow_cycle_7", "grow_grid_6"}) {
    const auto g = build_instance(id).graph;
    const auto c = clique_completion(g);
    EXPECT_TRUE(is_monotone(c).growing) << id;
    EXPECT_EQ(underlying(c), StaticGraph(g.vertex_count(), complete_edges(g.vertex_count())));
    EXPECT_EQ(all_pairs(c), all_pairs(g));
    EXPECT_TRUE(VoronoiGame(c, GameKind::rvor).enumerate_nash().empty()) << id;
  }
  EXPECT_THROW(clique_completion(build_instance("shrink_path_9").graph), std::invalid_argument);
}

TEST(Completion, KPartiteCompletion) {
  const auto g = build_instance("grow_grid_6").graph;
  for (std::size_t k : {2, 3, 4}) {
    const auto c = kpartite_completion(g, k);
    EXPECT_EQ(c.vertex_count(), 4 + k);
    const auto parts = multipartite_parts(underlying(c));
    ASSERT_TRUE(parts.has_value());
    EXPECT_EQ(parts->size(), k);
    const VoronoiGame game(c, GameKind::rvor);
    EXPECT_TRUE(game.enumerate_nash().empty()) << "k=" << k;
    // A late universal vertex only wins itself against any original seat.
    for (Vertex extra = 7; extra <= 4 + k; ++extra) {
      for (Vertex v = 1; v <= 6; ++v) EXPECT_EQ(game.payoff({extra, v}).u1(), 1u);
    }
  }
  EXPECT_THROW(kpartite_completion(g, 1), std::invalid_argument);
  EXPECT_THROW(kpartite_completion(build_instance("grow_cycle_7").graph, 3),
               std::invalid_argument);
}

}  // namespace
}  // namespace tvoronoi
