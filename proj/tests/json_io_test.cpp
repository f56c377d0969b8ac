#include "tvoronoi/json_io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tvoronoi/constructions.hpp"

namespace tvoronoi {
namespace {

TEST(GraphJson, RoundTripIsCanonical) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto g = testing::random_temporal_graph(rng, 1 + i % 7, 1 + i % 3, 0.4);
    const std::string text = canonical_string(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(canonical_string(parse_graph(text)), text);
  }
}

TEST(GraphJson, OrientationAndOrderAreNormalized) {
  const auto g = parse_graph(R"({"layers": [[[3,2],[1,2]]], "n": 3})");
  EXPECT_EQ(canonical_string(g), R"({"n":3,"layers":[[[1,2],[2,3]]]})");
}

TEST(GraphJson, Errors) {
  EXPECT_THROW(parse_graph("{"), GraphParseError);
  EXPECT_THROW(parse_graph("[]"), GraphParseError);
  EXPECT_THROW(parse_graph(R"({"n": 3})"), GraphParseError);
  EXPECT_THROW(parse_graph(R"({"n": -1, "layers": []})"), GraphParseError);
  EXPECT_THROW(parse_graph(R"({"n": 3, "layers": [[[1,2,3]]]})"), GraphParseError);
  EXPECT_THROW(parse_graph(R"({"n": 3, "layers": [[[1,-2]]]})"), GraphParseError);
  EXPECT_THROW(parse_graph(R"({"n": 3, "layers": [[[1,"2"]]]})"), GraphParseError);
  // Well-formed but invalid graphs parse; validation is separate.
  EXPECT_FALSE(is_valid(parse_graph(R"({"n": 3, "layers": [[[1,1]]]})")));
}

TEST(ReportJson, DistancesUseInf) {
  const auto d = all_pairs(TemporalGraph(2, {{}}));
  EXPECT_EQ(to_json(d).dump(), R"([[0,"inf"],["inf",0]])");
}

TEST(ReportJson, PayoffAndNash) {
  const VoronoiGame game(build_instance("grow_cycle_7").graph, GameKind::rvor);
  const auto j = to_json(game.payoff({5, 4}));
  EXPECT_EQ(j["U2"], Json::array({1, 2, 3, 4}));
  EXPECT_EQ(j["u2"], 4);
  const auto nash = to_json(game.is_nash({5, 4}));
  EXPECT_EQ(nash["is_nash"], false);
  EXPECT_TRUE(nash.contains("deviation"));
}

}  // namespace
}  // namespace tvoronoi
