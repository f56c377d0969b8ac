#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvoronoi/temporal_graph.hpp"

namespace tvoronoi {

class DistanceMatrix;

enum class ClassKind {
  path,
  cycle,
  tree,
  grid,
  clique,
  complete_k_partite,
  split,
  threshold,
};

/// A recognized static graph class. `rows`/`cols` are set for grids
/// (rows <= cols) and `parts` for complete k-partite graphs.
struct ClassLabel {
  ClassKind kind;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t parts = 0;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// "path", "grid(2,3)", "complete_k_partite(4)", ...
std::string to_string(const ClassLabel& label);
std::string to_string(ClassKind kind);
std::optional<ClassKind> parse_class_kind(const std::string& name);

struct ClassReport {
  bool temporally_connected = false;
  bool monotone_growing = false;
  bool monotone_shrinking = false;
  std::vector<ClassLabel> underlying_class;

  bool has(ClassKind kind) const;
};

/// Every class label the graph satisfies, in ClassKind order.
std::vector<ClassLabel> classify_underlying(const StaticGraph& s);

/// Temporal properties plus the underlying-graph labels of g.
ClassReport classify(const TemporalGraph& g, const DistanceMatrix& d);

bool is_connected(const StaticGraph& s);
bool is_path(const StaticGraph& s);
bool is_cycle(const StaticGraph& s);
bool is_tree(const StaticGraph& s);
bool is_clique(const StaticGraph& s);
bool is_threshold(const StaticGraph& s);

/// Grid dimensions (rows <= cols, both >= 2) when s is a grid.
std::optional<std::pair<std::size_t, std::size_t>> grid_dimensions(const StaticGraph& s);

/// Parts of a complete multipartite graph (maximal independent sets, each
/// sorted, ordered by smallest member). Returns nullopt unless s is
/// complete k-partite; a single part means s is edgeless.
std::optional<std::vector<std::vector<Vertex>>> multipartite_parts(const StaticGraph& s);

struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
};

/// Clique/independent-set partition of a split graph. The partition comes
/// from the degree-sequence test and is verified before it is returned.
std::optional<SplitPartition> split_partition(const StaticGraph& s);

/// Vertex adjacent to every other non-isolated vertex, smallest id first.
std::optional<Vertex> dominating_non_isolated(const StaticGraph& s);

}  // namespace tvoronoi
