#include "tvoronoi/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "tvoronoi/graph_classes.hpp"
#include "tvoronoi/reachability.hpp"

namespace tvoronoi {
namespace {

EdgeSet cycle_edges(std::size_t n) {
  EdgeSet out;
  for (Vertex i = 1; i < n; ++i) out.push_back({i, i + 1});
  out.push_back(make_edge(static_cast<Vertex>(n), 1));
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet path_edges(std::size_t n) {
  EdgeSet out;
  for (Vertex i = 1; i < n; ++i) out.push_back({i, i + 1});
  return out;
}

// Row-major rows x cols grid on 1..rows*cols.
EdgeSet grid_edges(std::size_t rows, std::size_t cols) {
  EdgeSet out;
  auto id = [cols](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * cols + j + 1); };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j + 1 < cols) out.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < rows) out.push_back({id(i, j), id(i + 1, j)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet sorted(EdgeSet edges) {
  for (auto& e : edges) e = make_edge(e.a, e.b);
  std::sort(edges.begin(), edges.end());
  return edges;
}

PaperInstance grow_cycle_7() {
  // Layer 1 is the 7-cycle without {2,3} and {7,1}; both appear at t = 2.
  const EdgeSet e2 = cycle_edges(7);
  const EdgeSet e1 = edge_difference(e2, sorted({{2, 3}, {1, 7}}));
  return {"grow_cycle_7",
          "monotonically growing temporal cycle on 7 vertices",
          TemporalGraph(7, {e1, e2}),
          {{GameKind::rvor, false, {}}, {GameKind::vor, true, {{5, 4}}}}};
}

PaperInstance grow_grid_6() {
  const EdgeSet e1 = sorted({{1, 2}, {1, 4}, {3, 6}, {5, 6}});
  const EdgeSet e2 = edge_union(e1, sorted({{2, 3}, {2, 5}, {4, 5}}));
  return {"grow_grid_6",
          "monotonically growing temporal 2x3 grid",
          TemporalGraph(6, {e1, e2}),
          {{GameKind::rvor, false, {}}, {GameKind::vor, true, {{1, 6}}}}};
}

PaperInstance shrink_path_9() {
  const EdgeSet e1 = path_edges(9);
  const EdgeSet e2 = edge_difference(e1, {{3, 4}});
  return {"shrink_path_9",
          "monotonically shrinking temporal path on 9 vertices",
          TemporalGraph(9, {e1, e2}),
          {{GameKind::rvor, false, {}}}};
}

PaperInstance shrink_cycle_10() {
  const EdgeSet e1 = cycle_edges(10);
  const EdgeSet e2 = edge_difference(e1, sorted({{3, 4}, {1, 10}}));
  return {"shrink_cycle_10",
          "monotonically shrinking temporal cycle on 10 vertices",
          TemporalGraph(10, {e1, e2}),
          {{GameKind::rvor, false, {}}}};
}

PaperInstance shrink_split_8() {
  // Clique {4,5,6,7}, independent set {1,2,3,8}.
  EdgeSet e1 = complete_edges(7);
  e1.erase(std::remove_if(e1.begin(), e1.end(), [](const Edge& e) { return e.a < 4; }),
           e1.end());
  e1 = edge_union(e1, sorted({{1, 4}, {2, 4}, {2, 5}, {3, 5}, {6, 8}, {7, 8}}));
  const EdgeSet e2 = sorted({{2, 4}, {2, 5}, {4, 6}, {5, 7}});
  return {"shrink_split_8",
          "monotonically shrinking temporal split graph on 8 vertices",
          TemporalGraph(8, {e1, e2}),
          {{GameKind::rvor, false, {}}, {GameKind::vor, true, {{4, 5}}}}};
}

PaperInstance vor_grow_grid_12() {
  // 3x4 grid, row-major; only 2-6-10 exists at t = 1.
  const EdgeSet e1 = sorted({{2, 6}, {6, 10}});
  const EdgeSet e2 = grid_edges(3, 4);
  return {"vor_grow_grid_12",
          "monotonically growing temporal 3x4 grid",
          TemporalGraph(12, {e1, e2}),
          {{GameKind::vor, false, {}}}};
}

void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

// Checks validity and the shrinking precondition shared by the builders
// below and returns the first layer, which then equals the underlying graph.
StaticGraph shrinking_first_layer(const TemporalGraph& g) {
  require_valid(g);
  require(is_monotone(g).shrinking, "temporal graph is not monotonically shrinking");
  StaticGraph first(g.vertex_count(), g.layer(1));
  require(first == underlying(g), "first layer differs from the underlying graph");
  return first;
}

void require_same_distances(const DistanceMatrix& before, const DistanceMatrix& after) {
  for (Vertex u = 1; u <= before.vertex_count(); ++u) {
    for (Vertex v = 1; v <= before.vertex_count(); ++v) {
      if (before.at(u, v) != after.at(u, v)) {
        throw std::logic_error("completion changed a temporal distance");
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& instance_ids() {
  static const std::vector<std::string> ids = {"grow_cycle_7",    "grow_grid_6",
                                               "shrink_path_9",   "shrink_cycle_10",
                                               "shrink_split_8",  "vor_grow_grid_12"};
  return ids;
}

PaperInstance build_instance(const std::string& id) {
  if (id == "grow_cycle_7") return grow_cycle_7();
  if (id == "grow_grid_6") return grow_grid_6();
  if (id == "shrink_path_9") return shrink_path_9();
  if (id == "shrink_cycle_10") return shrink_cycle_10();
  if (id == "shrink_split_8") return shrink_split_8();
  if (id == "vor_grow_grid_12") return vor_grow_grid_12();
  throw std::invalid_argument("unknown instance id: " + id);
}

Profile tree_ne(const TemporalGraph& g) {
  require_valid(g);
  const StaticGraph tree = underlying(g);
  require(is_tree(tree), "underlying graph is not a tree");
  require(is_temporally_connected(g, all_pairs(g)), "temporal tree is not temporally connected");
  const std::size_t n = g.vertex_count();
  if (n == 1) return {1, 1};

  // Component sizes of T - v, keyed by the neighbour of v they contain.
  auto components_without = [&](Vertex removed) {
    std::vector<std::pair<Vertex, std::size_t>> out;
    for (Vertex root : tree.neighbors(removed)) {
      std::size_t size = 0;
      std::vector<std::pair<Vertex, Vertex>> stack{{root, removed}};
      while (!stack.empty()) {
        const auto [v, parent] = stack.back();
        stack.pop_back();
        ++size;
        for (Vertex w : tree.neighbors(v)) {
          if (w != parent) stack.emplace_back(w, v);
        }
      }
      out.emplace_back(root, size);
    }
    return out;
  };

  Vertex centroid = 1;
  std::size_t best_max = n + 1;
  for (Vertex v = 1; v <= n; ++v) {
    std::size_t largest = 0;
    for (const auto& [root, size] : components_without(v)) largest = std::max(largest, size);
    if (largest < best_max) {
      best_max = largest;
      centroid = v;
    }
  }
  Vertex partner = 0;
  for (const auto& [root, size] : components_without(centroid)) {
    if (size == best_max && (partner == 0 || root < partner)) partner = root;
  }
  return {centroid, partner};
}

Profile kpartite_shrink_ne(const TemporalGraph& g) {
  const StaticGraph first = shrinking_first_layer(g);
  const auto parts = multipartite_parts(first);
  require(parts && parts->size() >= 2, "underlying graph is not complete k-partite with k >= 2");
  return {(*parts)[0].front(), (*parts)[1].front()};
}

Profile threshold_shrink_ne(const TemporalGraph& g) {
  const StaticGraph first = shrinking_first_layer(g);
  require(is_threshold(first), "underlying graph is not a threshold graph");
  const std::size_t n = g.vertex_count();
  if (n == 1) return {1, 1};
  const auto center = dominating_non_isolated(first);
  if (!center) return {1, 2};
  return {*center, *center == 1 ? Vertex{2} : Vertex{1}};
}

SplitPartition normalized_split(const StaticGraph& s) {
  auto partition = split_partition(s);
  if (!partition) throw std::invalid_argument("graph is not a split graph");
  SplitPartition out;
  out.clique = partition->clique;
  for (Vertex v : partition->independent) {
    const bool sees_all = std::all_of(out.clique.begin(), out.clique.end(),
                                      [&](Vertex c) { return s.adjacent(v, c); });
    if (sees_all) {
      out.clique.insert(std::upper_bound(out.clique.begin(), out.clique.end(), v), v);
    } else {
      out.independent.push_back(v);
    }
  }
  return out;
}

std::size_t split_potential(const StaticGraph& s, const SplitPartition& p, Profile profile) {
  std::size_t value = 0;
  for (Vertex x : p.independent) {
    if (s.adjacent(x, profile.p1) || s.adjacent(x, profile.p2)) ++value;
  }
  return value;
}

SplitEquilibrium vor_split_shrink_ne(const TemporalGraph& g) {
  const StaticGraph first = shrinking_first_layer(g);
  SplitPartition partition = normalized_split(first);
  require(partition.clique.size() >= 2, "split graph has fewer than two clique vertices");

  const VoronoiGame game(g, GameKind::vor);
  const std::size_t c = partition.clique.size();
  const Profile start{partition.clique[0], partition.clique[1]};
  auto dynamics = game.best_response_dynamics(start, 2 * c * c + 2, partition.clique);
  if (dynamics.outcome != DynamicsOutcome::equilibrium) {
    throw std::logic_error("clique-restricted dynamics did not settle");
  }
  const Profile found = dynamics.final_profile;
  return {found, std::move(partition), std::move(dynamics)};
}

TemporalGraph clique_completion(const TemporalGraph& g) {
  require_valid(g);
  const DistanceMatrix before = all_pairs(g);
  require(before.all_finite(), "temporal graph is not temporally connected");
  const std::size_t saturation = before.max_finite();

  std::vector<EdgeSet> layers;
  for (std::size_t t = 1; t <= saturation; ++t) layers.push_back(g.layer(t));
  layers.push_back(complete_edges(g.vertex_count()));
  TemporalGraph out(g.vertex_count(), std::move(layers));
  require_same_distances(before, all_pairs(out));
  return out;
}

TemporalGraph kpartite_completion(const TemporalGraph& g, std::size_t k) {
  require(k >= 2, "k must be at least 2");
  require(normalize_lifetime(g) == build_instance("grow_grid_6").graph,
          "k-partite completion is only defined for the grow_grid_6 instance");
  const DistanceMatrix before = all_pairs(g);
  const std::size_t saturation = before.max_finite();
  const std::size_t n = 4 + k;

  std::vector<EdgeSet> layers;
  for (std::size_t t = 1; t <= saturation; ++t) layers.push_back(g.layer(t));
  EdgeSet last = edge_union(layers.back(), sorted({{1, 6}, {3, 4}}));
  EdgeSet universal;
  for (Vertex j = 7; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) universal.push_back({i, j});
  }
  layers.push_back(edge_union(last, sorted(std::move(universal))));
  TemporalGraph out(n, std::move(layers));

  const auto parts = multipartite_parts(underlying(out));
  if (!parts || parts->size() != k) {
    throw std::logic_error("completion is not complete k-partite");
  }
  const DistanceMatrix after = all_pairs(out);
  for (Vertex u = 1; u <= 6; ++u) {
    for (Vertex v = 1; v <= 6; ++v) {
      if (before.at(u, v) != after.at(u, v)) {
        throw std::logic_error("completion changed a temporal distance");
      }
    }
  }
  return out;
}

}  // namespace tvoronoi
