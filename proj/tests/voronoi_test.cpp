#include "tvoronoi/voronoi.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.hpp"
#include "tvoronoi/constructions.hpp"

namespace tvoronoi {
namespace {

constexpr GameKind kKinds[] = {GameKind::vor, GameKind::rvor};

std::vector<Vertex> range(Vertex lo, Vertex hi) {
  std::vector<Vertex> out;
  for (Vertex v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

TEST(Payoff, SetsPartitionTheVertices) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 9;
    const auto g = testing::random_temporal_graph(rng, n, 1 + i % 3, 0.3);
    for (GameKind kind : kKinds) {
      const VoronoiGame game(g, kind);
      for (Vertex a = 1; a <= n; ++a) {
        for (Vertex b = 1; b <= n; ++b) {
          const auto r = game.payoff({a, b});
          std::vector<Vertex> all;
          all.insert(all.end(), r.won1.begin(), r.won1.end());
          all.insert(all.end(), r.won2.begin(), r.won2.end());
          all.insert(all.end(), r.unclaimed.begin(), r.unclaimed.end());
          std::sort(all.begin(), all.end());
          ASSERT_EQ(all, range(1, static_cast<Vertex>(n)));
          EXPECT_EQ(r.u1(), testing::definition_payoff(game.distances(), kind, a, b));
          EXPECT_EQ(r.u2(), testing::definition_payoff(game.distances(), kind, b, a));
          EXPECT_EQ(game.payoff_of(Player::first, {a, b}), r.u1());
          EXPECT_EQ(game.payoff_of(Player::second, {a, b}), r.u2());
          // Swapping seats swaps the won sets.
          const auto swapped = game.payoff({b, a});
          EXPECT_EQ(swapped.won1, r.won2);
          EXPECT_EQ(swapped.won2, r.won1);
          if (a != b) {
            EXPECT_TRUE(std::binary_search(r.won1.begin(), r.won1.end(), a));
            EXPECT_TRUE(std::binary_search(r.won2.begin(), r.won2.end(), b));
          } else {
            EXPECT_EQ(r.u1(), 0u);
            EXPECT_EQ(r.u2(), 0u);
          }
        }
      }
    }
  }
}

TEST(Payoff, RVorTiesStayUnclaimed) {
  // The middle vertex of a static path reaches both ends at step 1.
  const VoronoiGame game(TemporalGraph(3, {{{1, 2}, {2, 3}}}), GameKind::rvor);
  const auto r = game.payoff({1, 3});
  EXPECT_EQ(r.won1, (std::vector<Vertex>{1}));
  EXPECT_EQ(r.won2, (std::vector<Vertex>{3}));
  EXPECT_EQ(r.unclaimed, (std::vector<Vertex>{2}));
}

TEST(Payoff, AsymmetricDistances) {
  // 1 reaches 3 at step 2, while 3 reaches 1 only at step 4 after waiting.
  const TemporalGraph g(3, {{{1, 2}}, {{2, 3}}, {}, {{1, 2}}});
  const VoronoiGame vor(g, GameKind::vor), rvor(g, GameKind::rvor);
  EXPECT_EQ(vor.distances().at(1, 3), 2u);
  EXPECT_EQ(vor.distances().at(3, 1), 4u);
  EXPECT_EQ(vor.payoff({1, 2}).u1(), 1u);
  EXPECT_EQ(rvor.payoff({1, 2}).u1(), 1u);
  EXPECT_EQ(vor.payoff({1, 3}).won1, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(vor.payoff({1, 3}).won2, (std::vector<Vertex>{3}));
  // 1 reaches 3 first, but 3 is reached first by itself in both games.
  EXPECT_EQ(rvor.payoff({3, 1}).won1, (std::vector<Vertex>{3}));
}

TEST(Payoff, GrowingCycleRVorProofRows) {
  const VoronoiGame game(build_instance("grow_cycle_7").graph, GameKind::rvor);
  EXPECT_EQ(game.payoff({2, 5}).won2, (std::vector<Vertex>{4, 5, 6, 7}));
  EXPECT_EQ(game.payoff({3, 4}).won2, range(4, 7));
  EXPECT_EQ(game.payoff({4, 7}).won2, (std::vector<Vertex>{1, 2, 6, 7}));
  EXPECT_EQ(game.payoff({5, 4}).won2, range(1, 4));
}

TEST(Payoff, RejectsOutOfRangePositions) {
  const VoronoiGame game(TemporalGraph(3, {{}}), GameKind::vor);
  EXPECT_THROW(game.payoff({0, 1}), std::out_of_range);
  EXPECT_THROW(game.payoff({1, 4}), std::out_of_range);
}

TEST(Nash, EnumerationMatchesBruteForce) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 10;
    const auto g = testing::random_temporal_graph(rng, n, 1 + i % 3, 0.15 + 0.05 * (i % 7));
    for (GameKind kind : kKinds) {
      const VoronoiGame game(g, kind);
      const auto expected = testing::brute_force_nash(game.distances(), kind);
      ASSERT_EQ(game.enumerate_nash(), expected) << "i=" << i;
      for (Vertex a = 1; a <= n; ++a) {
        for (Vertex b = 1; b <= n; ++b) {
          const bool stable = std::binary_search(expected.begin(), expected.end(), Profile{a, b});
          const auto check = game.is_nash({a, b});
          ASSERT_EQ(check.is_nash, stable);
          ASSERT_EQ(check.deviation.has_value(), !stable);
          if (check.deviation) {
            const auto& dev = *check.deviation;
            const Profile moved = Profile{a, b}.with(dev.player, dev.to);
            EXPECT_EQ(game.payoff_of(dev.player, moved), dev.new_payoff);
            EXPECT_EQ(game.payoff_of(dev.player, {a, b}), dev.old_payoff);
            EXPECT_GT(dev.new_payoff, dev.old_payoff);
          }
        }
      }
    }
  }
}

TEST(Nash, PaperInstancesHaveTheRecordedVerdicts) {
  for (const auto& id : instance_ids()) {
    const auto inst = build_instance(id);
    for (const auto& expected : inst.expected) {
      const VoronoiGame game(inst.graph, expected.kind);
      const auto ne = game.enumerate_nash();
      EXPECT_EQ(!ne.empty(), expected.has_equilibrium) << id << " " << to_string(expected.kind);
      for (const auto& w : expected.witnesses) EXPECT_TRUE(game.is_nash(w).is_nash) << id;
    }
  }
}

TEST(BestResponse, TwoVertexEdge) {
  const VoronoiGame game(TemporalGraph(2, {{{1, 2}}}), GameKind::vor);
  const auto brg = game.best_response_graph();
  // Against an opponent on v the best move is the other vertex, worth 1.
  EXPECT_EQ(brg.responses(Player::first, 1).vertices, (std::vector<Vertex>{2}));
  EXPECT_EQ(brg.responses(Player::second, 2).vertices, (std::vector<Vertex>{1}));
  EXPECT_EQ(brg.responses(Player::first, 1).payoff, 1u);
  EXPECT_TRUE(brg.has_arc(Player::first, 1, 2));
  EXPECT_FALSE(brg.has_arc(Player::first, 1, 1));
  EXPECT_EQ(game.enumerate_nash(), (std::vector<Profile>{{1, 2}, {2, 1}}));
}

TEST(BestResponse, VorGridResponsesOfPlayerTwo) {
  const VoronoiGame game(build_instance("vor_grow_grid_12").graph, GameKind::vor);
  const std::vector<std::pair<std::vector<Vertex>, std::size_t>> expected{
      {{6}, 10},      {{6}, 5},  {{6, 7}, 8}, {{3}, 9},  {{2, 6, 10}, 9}, {{8}, 3},
      {{2, 6, 10}, 6}, {{7}, 9}, {{6}, 10},   {{6}, 5},  {{6, 7}, 8},     {{11}, 9}};
  for (Vertex v = 1; v <= 12; ++v) {
    const auto r = game.best_responses(Player::second, v);
    EXPECT_EQ(r.vertices, expected[v - 1].first) << "p1=" << v;
    EXPECT_EQ(r.payoff, expected[v - 1].second) << "p1=" << v;
  }
}

TEST(BestResponse, RestrictedCandidates) {
  const VoronoiGame game(build_instance("vor_grow_grid_12").graph, GameKind::vor);
  const std::vector<Vertex> corners{1, 4, 9, 12};
  const auto r = game.best_responses(Player::second, 6, corners);
  for (Vertex v : r.vertices) {
    EXPECT_NE(std::find(corners.begin(), corners.end(), v), corners.end());
  }
  std::size_t best = 0;
  for (Vertex c : corners) best = std::max(best, game.payoff_of(Player::second, {6, c}));
  EXPECT_EQ(r.payoff, best);
}

TEST(Dynamics, StartingAtEquilibriumTakesNoSteps) {
  const VoronoiGame game(TemporalGraph(2, {{{1, 2}}}), GameKind::vor);
  const auto r = game.best_response_dynamics({1, 2}, 10);
  EXPECT_EQ(r.outcome, DynamicsOutcome::equilibrium);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.final_profile, (Profile{1, 2}));
}

TEST(Dynamics, EndsAtAnEquilibriumOrCycles) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + i % 8;
    const auto g = testing::random_temporal_graph(rng, n, 1 + i % 3, 0.3);
    for (GameKind kind : kKinds) {
      const VoronoiGame game(g, kind);
      const auto r = game.best_response_dynamics({1, 1}, 4 * n * n + 4);
      ASSERT_NE(r.outcome, DynamicsOutcome::step_limit);
      if (r.outcome == DynamicsOutcome::equilibrium) {
        EXPECT_TRUE(game.is_nash(r.final_profile).is_nash);
      } else {
        ASSERT_FALSE(r.cycle.empty());
        for (const auto& step : r.cycle) {
          const Vertex opp = step.profile.position(other(step.mover));
          const auto br = game.best_responses(step.mover, opp);
          EXPECT_TRUE(std::binary_search(br.vertices.begin(), br.vertices.end(),
                                         step.profile.position(step.mover)));
        }
      }
      for (const auto& step : r.trace) {
        EXPECT_EQ(step.u1, game.payoff_of(Player::first, step.profile));
        EXPECT_EQ(step.u2, game.payoff_of(Player::second, step.profile));
      }
    }
  }
}

TEST(Dynamics, VorGridCycleContainsSixEightSeven) {
  const VoronoiGame game(build_instance("vor_grow_grid_12").graph, GameKind::vor);
  const auto r = game.best_response_dynamics({1, 1}, 1000);
  ASSERT_EQ(r.outcome, DynamicsOutcome::cycle);
  auto pos = r.cycle_positions();
  const std::size_t k = pos.size();
  bool found = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (pos[i] == 6 && pos[(i + 1) % k] == 8 && pos[(i + 2) % k] == 7) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Dynamics, StepLimit) {
  const VoronoiGame game(build_instance("vor_grow_grid_12").graph, GameKind::vor);
  const auto r = game.best_response_dynamics({1, 1}, 2);
  EXPECT_EQ(r.outcome, DynamicsOutcome::step_limit);
}

TEST(GameKind, ParsesBothSpellings) {
  EXPECT_EQ(parse_game_kind("rVor"), GameKind::rvor);
  EXPECT_EQ(parse_game_kind("vor"), GameKind::vor);
  EXPECT_FALSE(parse_game_kind("voronoi").has_value());
}

}  // namespace
}  // namespace tvoronoi
