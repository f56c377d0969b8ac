#pragma once

#include <string>
#include <vector>

#include "tvoronoi/graph_classes.hpp"
#include "tvoronoi/temporal_graph.hpp"
#include "tvoronoi/voronoi.hpp"

namespace tvoronoi {

/// Known equilibrium verdict of a built-in instance for one game.
struct ExpectedVerdict {
  GameKind kind = GameKind::vor;
  bool has_equilibrium;
  std::vector<Profile> witnesses;
};

struct PaperInstance {
  std::string id;
  std::string description;
  TemporalGraph graph;
  std::vector<ExpectedVerdict> expected;
};

/// grow_cycle_7, grow_grid_6, shrink_path_9, shrink_cycle_10,
/// shrink_split_8, vor_grow_grid_12.
const std::vector<std::string>& instance_ids();

/// Throws std::invalid_argument for an unknown id.
PaperInstance build_instance(const std::string& id);

/// Centroid equilibrium for rVor on a temporally connected temporal tree:
/// p1 is the smallest centroid, p2 the smallest neighbour of p1 lying in a
/// largest component of the tree minus p1.
Profile tree_ne(const TemporalGraph& g);

/// rVor equilibrium on a monotonically shrinking complete k-partite graph
/// (k >= 2): the smallest vertex of each of the first two parts, parts
/// ordered by smallest member.
Profile kpartite_shrink_ne(const TemporalGraph& g);

/// rVor equilibrium on a monotonically shrinking threshold graph: a vertex
/// dominating every non-isolated vertex of the first layer against the
/// smallest other vertex, or (1,2) if the first layer is edgeless.
Profile threshold_shrink_ne(const TemporalGraph& g);

/// Clique/independent split of the first layer with every independent
/// vertex that sees the whole clique moved into the clique.
SplitPartition normalized_split(const StaticGraph& s);

/// |N_I(v)| + |N_I(w)| - |N_I(v) ∩ N_I(w)| with neighbourhoods taken in s.
std::size_t split_potential(const StaticGraph& s, const SplitPartition& p, Profile profile);

/// Vor equilibrium on a monotonically shrinking split graph, found by
/// clique-restricted best-response dynamics from the smallest clique pair.
struct SplitEquilibrium {
  Profile profile;
  SplitPartition partition;
  DynamicsResult dynamics;
};
SplitEquilibrium vor_split_shrink_ne(const TemporalGraph& g);

/// Appends layers up to the saturation time d (the largest finite
/// temporal distance) and then a complete layer. Requires a temporally
/// connected g; distances among the original vertices are unchanged.
TemporalGraph clique_completion(const TemporalGraph& g);

/// Turns the growing 2x3 grid instance into a growing complete k-partite
/// graph on 4 + k vertices by adding {1,6}, {3,4} and k - 2 universal
/// vertices after the saturation time.
TemporalGraph kpartite_completion(const TemporalGraph& g, std::size_t k);

}  // namespace tvoronoi
