#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tvoronoi {

/// Vertices are identified by 1..n throughout the public API.
using Vertex = std::uint32_t;

/// Unordered vertex pair. Stored with the smaller endpoint first once it
/// passes through make_edge; raw input may still carry a > b or a == b,
/// which validate() reports.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge make_edge(Vertex x, Vertex y) {
  return x < y ? Edge{x, y} : Edge{y, x};
}

/// One layer of a temporal graph: sorted edges, smaller endpoint first.
using EdgeSet = std::vector<Edge>;

/// A temporal graph with finitely many stored layers. Layer t for t beyond
/// the stored sequence equals the last stored layer.
///
/// The constructor orients and sorts edges but keeps everything else as
/// given so that malformed input survives until validate() looks at it.
class TemporalGraph {
 public:
  TemporalGraph() = default;
  TemporalGraph(std::size_t n, std::vector<EdgeSet> layers);

  std::size_t vertex_count() const { return n_; }

  /// Number of stored layers (tau). Not necessarily minimal; see
  /// normalize_lifetime().
  std::size_t lifetime() const { return layers_.size(); }

  const std::vector<EdgeSet>& layers() const { return layers_; }

  /// Layer at time step t >= 1 with repeat-last semantics.
  const EdgeSet& layer(std::size_t t) const;

  friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<EdgeSet> layers_;
};

enum class ViolationKind {
  empty_vertex_set,
  empty_layer_sequence,
  endpoint_out_of_range,
  self_loop,
  duplicate_edge,
};

struct Violation {
  ViolationKind kind;
  std::size_t layer = 0;  // 1-based; 0 when not tied to a layer
  Edge edge{};
  std::string message;
};

/// All invariant violations of g. Empty means valid.
std::vector<Violation> validate(const TemporalGraph& g);

inline bool is_valid(const TemporalGraph& g) { return validate(g).empty(); }

/// Throws std::invalid_argument listing the violations, if any.
void require_valid(const TemporalGraph& g);

/// Drops trailing layers that repeat their predecessor.
TemporalGraph normalize_lifetime(const TemporalGraph& g);

struct Monotonicity {
  bool growing = false;
  bool shrinking = false;
};

/// Growing iff every stored layer is a subset of the next one, shrinking
/// iff every layer is a superset of the next one. A single layer is both.
Monotonicity is_monotone(const TemporalGraph& g);

/// Number of edges that appear or disappear between consecutive layers,
/// summed over the stored sequence.
std::size_t edge_change_count(const TemporalGraph& g);

/// Simple undirected static graph with an adjacency matrix.
class StaticGraph {
 public:
  StaticGraph() = default;
  StaticGraph(std::size_t n, EdgeSet edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const EdgeSet& edges() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[(u - 1) * n_ + (v - 1)] != 0;
  }
  std::size_t degree(Vertex v) const { return degree_[v - 1]; }
  std::vector<Vertex> neighbors(Vertex v) const;

  friend bool operator==(const StaticGraph& x, const StaticGraph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  std::size_t n_ = 0;
  EdgeSet edges_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::size_t> degree_;
};

/// Union of all layers.
StaticGraph underlying(const TemporalGraph& g);

/// Complete graph on n vertices as an edge set.
EdgeSet complete_edges(std::size_t n);

/// Sorted set helpers on EdgeSet.
EdgeSet edge_union(const EdgeSet& x, const EdgeSet& y);
EdgeSet edge_difference(const EdgeSet& x, const EdgeSet& y);
bool edge_subset(const EdgeSet& x, const EdgeSet& y);

}  // namespace tvoronoi
