#include "claims.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "tvoronoi/constructions.hpp"
#include "tvoronoi/explorer.hpp"
#include "tvoronoi/reachability.hpp"
#include "tvoronoi/voronoi.hpp"

namespace tvoronoi::cli {
namespace {

// Collects failed expectations of one claim.
class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    ++checks_;
    if (!condition) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  Json finish(Json details) const {
    details["checks"] = checks_;
    Json failures = Json::array();
    // Long failure lists are truncated to keep reports readable.
    for (std::size_t i = 0; i < failures_.size() && i < 20; ++i) failures.push_back(failures_[i]);
    details["failures"] = std::move(failures);
    details["failure_count"] = failures_.size();
    return details;
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::string profile_string(Profile s) {
  return "(" + std::to_string(s.p1) + "," + std::to_string(s.p2) + ")";
}

std::vector<Vertex> interval(Vertex lo, Vertex hi) {
  std::vector<Vertex> out;
  for (Vertex v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

bool subset(const std::vector<Vertex>& small, const std::vector<Vertex>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

struct SetRow {
  Player player;
  Profile profile;
  std::vector<Vertex> expected;
  bool exact;  // equality rather than inclusion
};

void check_set_rows(Checker& c, const VoronoiGame& game, const std::vector<SetRow>& rows) {
  for (const auto& row : rows) {
    const auto won = game.payoff(row.profile).won(row.player);
    const bool ok = row.exact ? won == row.expected : subset(row.expected, won);
    c.expect(ok, "U" + std::to_string(index(row.player)) + profile_string(row.profile) +
                     " does not match the proof");
  }
}

struct CountRow {
  Player player;
  Profile profile;
  std::size_t expected;
};

void check_count_rows(Checker& c, const VoronoiGame& game, const std::vector<CountRow>& rows) {
  for (const auto& row : rows) {
    const std::size_t got = game.payoff_of(row.player, row.profile);
    c.expect(got == row.expected, "u" + std::to_string(index(row.player)) +
                                      profile_string(row.profile) + " = " + std::to_string(got) +
                                      ", expected " + std::to_string(row.expected));
  }
}

// The equilibrium set over all n^2 profiles must be empty.
Json expect_no_equilibrium(Checker& c, const VoronoiGame& game) {
  const auto ne = game.enumerate_nash();
  c.expect(ne.empty(), "found " + std::to_string(ne.size()) + " equilibria");
  Json out;
  out["profiles"] = game.vertex_count() * game.vertex_count();
  out["equilibria"] = to_json(ne);
  return out;
}

void expect_nash(Checker& c, const VoronoiGame& game, Profile s) {
  const auto check = game.is_nash(s);
  c.expect(check.is_nash, profile_string(s) + " is not an equilibrium");
}

bool cycle_contains(const std::vector<Vertex>& positions, const std::vector<Vertex>& run) {
  const std::size_t k = positions.size();
  if (k == 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    bool match = true;
    for (std::size_t j = 0; j < run.size() && match; ++j) match = positions[(i + j) % k] == run[j];
    if (match) return true;
  }
  return false;
}

// Random generators for the property claims.

EdgeSet random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> label = interval(1, static_cast<Vertex>(n));
  std::shuffle(label.begin(), label.end(), rng);
  EdgeSet edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    edges.push_back(make_edge(label[i], label[parent(rng)]));
  }
  return edges;
}

// Every edge gets a random nonempty presence pattern over tau layers.
TemporalGraph random_presence(std::mt19937_64& rng, std::size_t n, const EdgeSet& edges,
                              std::size_t tau) {
  std::uniform_int_distribution<std::uint32_t> pattern(1, (1U << tau) - 1);
  std::vector<EdgeSet> layers(tau);
  for (const Edge& e : edges) {
    const std::uint32_t bits = pattern(rng);
    for (std::size_t t = 0; t < tau; ++t) {
      if ((bits >> t) & 1U) layers[t].push_back(e);
    }
  }
  return TemporalGraph(n, std::move(layers));
}

// Every edge is present from step 1 up to a random last step.
TemporalGraph random_shrinking(std::mt19937_64& rng, std::size_t n, const EdgeSet& edges,
                               std::size_t tau) {
  std::uniform_int_distribution<std::size_t> last(1, tau);
  std::vector<EdgeSet> layers(tau);
  for (const Edge& e : edges) {
    const std::size_t until = last(rng);
    for (std::size_t t = 0; t < until; ++t) layers[t].push_back(e);
  }
  return TemporalGraph(n, std::move(layers));
}

EdgeSet random_kpartite(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> part(n);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (std::size_t v = 0; v < n; ++v) part[v] = v < k ? v : pick(rng);
  std::shuffle(part.begin(), part.end(), rng);
  EdgeSet edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (part[u - 1] != part[v - 1]) edges.push_back({u, v});
    }
  }
  return edges;
}

// Creation sequence: each new vertex enters isolated or dominating, then a
// random relabeling.
EdgeSet random_threshold(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> label = interval(1, static_cast<Vertex>(n));
  std::shuffle(label.begin(), label.end(), rng);
  std::bernoulli_distribution dominating(0.5);
  EdgeSet edges;
  for (std::size_t v = 1; v < n; ++v) {
    if (!dominating(rng)) continue;
    for (std::size_t u = 0; u < v; ++u) edges.push_back(make_edge(label[u], label[v]));
  }
  return edges;
}

EdgeSet random_split(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> clique(2, n);
  const std::size_t c = clique(rng);
  std::vector<Vertex> label = interval(1, static_cast<Vertex>(n));
  std::shuffle(label.begin(), label.end(), rng);
  std::bernoulli_distribution attach(0.4);
  EdgeSet edges;
  for (std::size_t u = 0; u < c; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (v < c || attach(rng)) edges.push_back(make_edge(label[u], label[v]));
    }
  }
  return edges;
}

std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Claims.

ClaimResult rvor_growing_cycle(std::uint64_t) {
  Checker c;
  const VoronoiGame game(build_instance("grow_cycle_7").graph, GameKind::rvor);
  Json d;
  d["nash"] = expect_no_equilibrium(c, game);
  check_set_rows(c, game,
                 {{Player::second, {2, 5}, interval(4, 7), false},
                  {Player::second, {3, 4}, interval(4, 7), false},
                  {Player::second, {4, 7}, {1, 2, 6, 7}, false},
                  {Player::second, {5, 4}, interval(1, 4), false}});
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult vor_growing_cycle(std::uint64_t) {
  Checker c;
  const VoronoiGame game(build_instance("grow_cycle_7").graph, GameKind::vor);
  expect_nash(c, game, {5, 4});
  const auto r = game.payoff({5, 4});
  c.expect(r.u1() == 3 && r.u2() == 3, "payoffs at (5,4) are not 3 and 3");
  Json d;
  d["profile"] = to_json(Profile{5, 4});
  d["payoff"] = to_json(r);
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult rvor_growing_grid(std::uint64_t) {
  Checker c;
  const VoronoiGame game(build_instance("grow_grid_6").graph, GameKind::rvor);
  Json d;
  d["nash"] = expect_no_equilibrium(c, game);
  check_set_rows(c, game,
                 {{Player::first, {1, 2}, {1, 4}, true},
                  {Player::second, {1, 2}, {2, 3, 5, 6}, true},
                  {Player::first, {6, 2}, {3, 5, 6}, true},
                  {Player::first, {2, 6}, {1, 2, 4}, true},
                  {Player::first, {5, 6}, {1, 2, 4, 5}, true}});
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult vor_growing_grid(std::uint64_t) {
  Checker c;
  const VoronoiGame game(build_instance("grow_grid_6").graph, GameKind::vor);
  expect_nash(c, game, {1, 6});
  Json d;
  d["profile"] = to_json(Profile{1, 6});
  d["payoff"] = to_json(game.payoff({1, 6}));
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult rvor_shrinking_path(std::uint64_t) {
  Checker c;
  const VoronoiGame game(build_instance("shrink_path_9").graph, GameKind::rvor);
  Json d;
  d["nash"] = expect_no_equilibrium(c, game);
  check_count_rows(c, game,
                   {{Player::first, {4, 5}, 2},
                    {Player::first, {6, 5}, 4},
                    {Player::first, {5, 6}, 3},
                    {Player::first, {3, 6}, 4}});
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult rvor_shrinking_cycle(std::uint64_t) {
  Checker c;
  const VoronoiGame game(build_instance("shrink_cycle_10").graph, GameKind::rvor);
  Json d;
  d["nash"] = expect_no_equilibrium(c, game);
  check_count_rows(c, game,
                   {{Player::first, {6, 7}, 4},
                    {Player::first, {2, 7}, 5},
                    {Player::second, {7, 8}, 4},
                    {Player::second, {7, 2}, 5}});
  check_set_rows(c, game,
                 {{Player::second, {2, 4}, interval(4, 9), true},
                  {Player::second, {1, 4}, interval(3, 9), true}});
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult rvor_shrinking_split(std::uint64_t) {
  Checker c;
  const VoronoiGame game(build_instance("shrink_split_8").graph, GameKind::rvor);
  Json d;
  d["nash"] = expect_no_equilibrium(c, game);
  check_set_rows(c, game,
                 {{Player::first, {7, 4}, {3, 7, 8}, true},
                  {Player::first, {4, 7}, {1, 2, 4}, true},
                  {Player::first, {5, 7}, {1, 2, 3, 5}, true},
                  {Player::first, {5, 6}, {2, 3, 5}, true},
                  {Player::first, {2, 4}, {2, 3}, true},
                  {Player::first, {6, 4}, {6, 8}, true}});
  return {"", "", c.ok(), c.finish(std::move(d))};
}

// Checks vor_split_shrink_ne on one graph: equilibrium plus a strictly
// rising potential along the dynamics.
void check_split_builder(Checker& c, const TemporalGraph& g, const std::string& label) {
  const auto r = vor_split_shrink_ne(g);
  const VoronoiGame game(g, GameKind::vor);
  c.expect(game.is_nash(r.profile).is_nash, label + ": result is not an equilibrium");
  const StaticGraph first(g.vertex_count(), g.layer(1));
  std::size_t previous =
      split_potential(first, r.partition, {r.partition.clique[0], r.partition.clique[1]});
  for (const auto& step : r.dynamics.trace) {
    const std::size_t now = split_potential(first, r.partition, step.profile);
    c.expect(now > previous, label + ": potential did not increase");
    previous = now;
  }
}

ClaimResult vor_shrinking_split(std::uint64_t seed) {
  Checker c;
  const auto g = build_instance("shrink_split_8").graph;
  const VoronoiGame game(g, GameKind::vor);
  expect_nash(c, game, {4, 5});
  const auto r = vor_split_shrink_ne(g);
  check_split_builder(c, g, "shrink_split_8");
  std::mt19937_64 rng(seed);
  constexpr std::size_t kSamples = 200;
  for (std::size_t i = 0; i < kSamples; ++i) {
    const std::size_t n = random_size(rng, 2, 12);
    const auto h = random_shrinking(rng, n, random_split(rng, n), random_size(rng, 1, 4));
    check_split_builder(c, h, "random split #" + std::to_string(i));
  }
  Json d;
  d["profile"] = to_json(Profile{4, 5});
  d["builder_profile"] = to_json(r.profile);
  d["builder_steps"] = r.dynamics.trace.size();
  d["random_instances"] = kSamples;
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult vor_grid_3x4(std::uint64_t) {
  Checker c;
  const VoronoiGame game(build_instance("vor_grow_grid_12").graph, GameKind::vor);
  Json d;
  d["nash"] = expect_no_equilibrium(c, game);
  const std::map<Vertex, std::pair<std::vector<Vertex>, std::size_t>> rows{
      {1, {{6}, 10}},     {2, {{6}, 5}}, {3, {{6, 7}, 8}},      {4, {{3}, 9}},
      {5, {{2, 6, 10}, 9}}, {6, {{8}, 3}}, {7, {{2, 6, 10}, 6}}, {8, {{7}, 9}}};
  for (const auto& [p1, expected] : rows) {
    const auto br = game.best_responses(Player::second, p1);
    c.expect(subset(expected.first, br.vertices) && br.payoff == expected.second,
             "best response to p1=" + std::to_string(p1) + " does not match the proof");
  }
  std::size_t starts = 0;
  for (Vertex a = 1; a <= 12; ++a) {
    for (Vertex b = 1; b <= 12; ++b) {
      const auto r = game.best_response_dynamics({a, b}, 4 * 144 + 4);
      ++starts;
      c.expect(r.outcome == DynamicsOutcome::cycle && cycle_contains(r.cycle_positions(), {6, 8, 7}),
               "dynamics from " + profile_string({a, b}) + " miss the cycle 6->8->7");
    }
  }
  d["dynamics_starts"] = starts;
  d["cycle_from_1_1"] = game.best_response_dynamics({1, 1}, 580).cycle_positions();
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult rvor_trees(std::uint64_t seed) {
  Checker c;
  std::mt19937_64 rng(seed);
  constexpr std::size_t kWanted = 200;
  std::size_t accepted = 0, attempts = 0;
  while (accepted < kWanted && attempts < 100 * kWanted) {
    ++attempts;
    // A single vertex is shared by both players, so the payoff bound needs n >= 2.
    const std::size_t n = random_size(rng, 2, 12);
    const std::size_t tau = random_size(rng, 1, 4);
    const auto g = random_presence(rng, n, random_tree(rng, n), tau);
    const VoronoiGame game(g, GameKind::rvor);
    if (!game.distances().all_finite()) continue;
    ++accepted;
    const Profile s = tree_ne(g);
    const auto r = game.payoff(s);
    c.expect(game.is_nash(s).is_nash, "tree #" + std::to_string(accepted) + ": not an equilibrium");
    c.expect(2 * r.u1() >= n && n >= 2 * r.u2(),
             "tree #" + std::to_string(accepted) + ": payoffs " + std::to_string(r.u1()) + "," +
                 std::to_string(r.u2()) + " on " + std::to_string(n) + " vertices");
  }
  c.expect(accepted == kWanted, "too few temporally connected trees sampled");
  Json d;
  d["instances"] = accepted;
  d["attempts"] = attempts;
  d["seed"] = seed;
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult rvor_kpartite_threshold(std::uint64_t seed) {
  Checker c;
  std::mt19937_64 rng(seed);
  constexpr std::size_t kEach = 200;
  for (std::size_t i = 0; i < kEach; ++i) {
    const std::size_t k = random_size(rng, 2, 4);
    const std::size_t n = random_size(rng, k, 12);
    const auto g = random_shrinking(rng, n, random_kpartite(rng, n, k), random_size(rng, 1, 4));
    const VoronoiGame game(g, GameKind::rvor);
    c.expect(game.is_nash(kpartite_shrink_ne(g)).is_nash,
             "k-partite #" + std::to_string(i) + ": not an equilibrium");
  }
  for (std::size_t i = 0; i < kEach; ++i) {
    const std::size_t n = random_size(rng, 1, 12);
    const auto g = random_shrinking(rng, n, random_threshold(rng, n), random_size(rng, 1, 4));
    const VoronoiGame game(g, GameKind::rvor);
    c.expect(game.is_nash(threshold_shrink_ne(g)).is_nash,
             "threshold #" + std::to_string(i) + ": not an equilibrium");
  }
  Json d;
  d["kpartite_instances"] = kEach;
  d["threshold_instances"] = kEach;
  d["seed"] = seed;
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult rvor_completions(std::uint64_t) {
  Checker c;
  Json d;
  const auto cycle = build_instance("grow_cycle_7").graph;
  const auto clique = clique_completion(cycle);
  const std::size_t n = cycle.vertex_count();
  c.expect(is_monotone(clique).growing, "clique completion is not growing");
  c.expect(is_clique(underlying(clique)), "clique completion is not a clique");
  c.expect(all_pairs(clique) == all_pairs(cycle), "clique completion changed distances");
  const auto clique_ne = VoronoiGame(clique, GameKind::rvor).enumerate_nash();
  c.expect(clique_ne.empty(), "clique completion has an equilibrium");
  d["clique"] = {{"n", n}, {"lifetime", clique.lifetime()}, {"equilibria", clique_ne.size()}};

  const auto grid = build_instance("grow_grid_6").graph;
  const auto before = all_pairs(grid);
  Json kp = Json::array();
  for (std::size_t k = 2; k <= 4; ++k) {
    const auto g = kpartite_completion(grid, k);
    const auto parts = multipartite_parts(underlying(g));
    c.expect(is_monotone(g).growing, "k=" + std::to_string(k) + ": not growing");
    c.expect(parts && parts->size() == k, "k=" + std::to_string(k) + ": wrong part count");
    const auto after = all_pairs(g);
    bool same = true;
    for (Vertex u = 1; u <= 6; ++u) {
      for (Vertex v = 1; v <= 6; ++v) same = same && before.at(u, v) == after.at(u, v);
    }
    c.expect(same, "k=" + std::to_string(k) + ": distances among [6] changed");
    const auto ne = VoronoiGame(g, GameKind::rvor).enumerate_nash();
    c.expect(ne.empty(), "k=" + std::to_string(k) + ": has an equilibrium");
    kp.push_back({{"k", k}, {"n", g.vertex_count()}, {"equilibria", ne.size()}});
  }
  d["kpartite"] = std::move(kp);
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult reachability_oracle(std::uint64_t seed) {
  Checker c;
  std::mt19937_64 rng(seed);
  constexpr std::size_t kInstances = 1000;
  std::size_t sources = 0;
  for (std::size_t i = 0; i < kInstances; ++i) {
    const std::size_t n = random_size(rng, 1, 9);
    const std::size_t tau = random_size(rng, 1, 3);
    const double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    std::bernoulli_distribution keep(density);
    std::vector<EdgeSet> layers(tau);
    for (auto& layer : layers) {
      for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
          if (keep(rng)) layer.push_back({u, v});
        }
      }
    }
    const TemporalGraph g(n, std::move(layers));
    for (Vertex s = 1; s <= n; ++s) {
      ++sources;
      c.expect(earliest_arrivals(g, s) == oracle_arrivals(g, s),
               "instance #" + std::to_string(i) + " source " + std::to_string(s));
    }
  }
  Json d;
  d["instances"] = kInstances;
  d["sources"] = sources;
  d["seed"] = seed;
  return {"", "", c.ok(), c.finish(std::move(d))};
}

ClaimResult cycle_one_change(std::uint64_t) {
  Checker c;
  FamilySpec spec;
  spec.base_class = ClassKind::cycle;
  spec.n_min = 3;
  spec.n_max = 9;
  spec.tau_min = 1;
  spec.tau_max = 3;
  spec.max_edge_changes = 1;
  const GameKind kinds[] = {GameKind::rvor};
  const auto summary = sweep(spec, kinds);
  c.expect(summary.games[0].without_equilibrium == 0,
           std::to_string(summary.games[0].without_equilibrium) + " instances without equilibrium");
  Json d = to_json(summary);
  return {"", "", c.ok(), c.finish(std::move(d))};
}

struct ClaimDef {
  std::string id;
  std::string title;
  std::vector<std::string> instances;
  std::function<ClaimResult(std::uint64_t)> run;
};

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> defs = {
      {"rvor-growing-cycle", "rVor on the growing 7-cycle has no equilibrium",
       {"grow_cycle_7"}, rvor_growing_cycle},
      {"vor-growing-cycle", "Vor on the growing 7-cycle: (5,4) is an equilibrium with u1 = u2 = 3",
       {"grow_cycle_7"}, vor_growing_cycle},
      {"rvor-growing-grid", "rVor on the growing 2x3 grid has no equilibrium",
       {"grow_grid_6"}, rvor_growing_grid},
      {"vor-growing-grid", "Vor on the growing 2x3 grid: (1,6) is an equilibrium",
       {"grow_grid_6"}, vor_growing_grid},
      {"rvor-shrinking-path", "rVor on the shrinking 9-path has no equilibrium",
       {"shrink_path_9"}, rvor_shrinking_path},
      {"rvor-shrinking-cycle", "rVor on the shrinking 10-cycle has no equilibrium",
       {"shrink_cycle_10"}, rvor_shrinking_cycle},
      {"rvor-shrinking-split", "rVor on the shrinking split graph has no equilibrium",
       {"shrink_split_8"}, rvor_shrinking_split},
      {"vor-shrinking-split",
       "Vor on shrinking split graphs: clique-restricted dynamics reach an equilibrium",
       {"shrink_split_8"}, vor_shrinking_split},
      {"vor-growing-grid-3x4", "Vor on the growing 3x4 grid has no equilibrium",
       {"vor_grow_grid_12"}, vor_grid_3x4},
      {"rvor-temporal-trees", "rVor on temporally connected trees: the centroid profile is stable",
       {}, rvor_trees},
      {"rvor-shrinking-kpartite-threshold",
       "rVor on shrinking complete k-partite and threshold graphs has an equilibrium", {},
       rvor_kpartite_threshold},
      {"rvor-completions", "Clique and k-partite completions keep rVor without equilibrium",
       {"grow_cycle_7", "grow_grid_6"}, rvor_completions},
      {"reachability-oracle", "Foremost arrivals agree with the time-expanded search", {},
       reachability_oracle},
      {"cycle-one-change", "rVor on cycles with at most one edge change always has an equilibrium",
       {}, cycle_one_change},
  };
  return defs;
}

const ClaimDef& find(const std::string& id) {
  for (const auto& def : registry()) {
    if (def.id == id) return def;
  }
  throw std::invalid_argument("unknown claim id: " + id);
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& def : registry()) out.push_back(def.id);
    return out;
  }();
  return ids;
}

std::vector<std::string> claim_instances(const std::string& id) { return find(id).instances; }

ClaimResult run_claim(const std::string& id, std::uint64_t seed) {
  const ClaimDef& def = find(id);
  ClaimResult result;
  try {
    result = def.run(seed);
  } catch (const std::exception& e) {
    result.passed = false;
    result.details = {{"error", e.what()}};
  }
  result.id = def.id;
  result.title = def.title;
  return result;
}

FixtureCheck check_fixture(const std::string& instance) {
  const PaperInstance inst = build_instance(instance);
  FixtureCheck out;
  out.instance = instance;
  out.passed = true;
  Json verdicts = Json::array();
  for (const auto& expected : inst.expected) {
    const VoronoiGame game(inst.graph, expected.kind);
    const auto ne = game.enumerate_nash();
    bool ok = ne.empty() != expected.has_equilibrium;
    Json v;
    v["game"] = to_string(expected.kind);
    v["expected_ne"] = expected.has_equilibrium;
    v["has_ne"] = !ne.empty();
    v["ne_count"] = ne.size();
    Json witnesses = Json::array();
    for (const auto& w : expected.witnesses) {
      const bool stable = game.is_nash(w).is_nash;
      ok = ok && stable;
      witnesses.push_back({{"profile", to_json(w)}, {"is_nash", stable}});
    }
    v["witnesses"] = std::move(witnesses);
    if (ne.empty()) {
      const std::size_t n = game.vertex_count();
      const auto dyn = game.best_response_dynamics({1, 1}, 4 * n * n + 4);
      v["dynamics_outcome"] = to_string(dyn.outcome);
      if (dyn.outcome == DynamicsOutcome::cycle) v["cycle_positions"] = dyn.cycle_positions();
    }
    v["pass"] = ok;
    out.passed = out.passed && ok;
    verdicts.push_back(std::move(v));
  }
  out.details = {{"verdicts", std::move(verdicts)}};
  return out;
}

}  // namespace tvoronoi::cli
