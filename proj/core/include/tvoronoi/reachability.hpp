#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "tvoronoi/temporal_graph.hpp"

namespace tvoronoi {

/// Arrival time of a temporal walk. kUnreachable compares greater than every
/// finite time, so strict comparisons between two unreachable entries fail.
using Time = std::uint32_t;
inline constexpr Time kUnreachable = std::numeric_limits<Time>::max();

constexpr bool is_finite(Time t) { return t != kUnreachable; }

/// All-pairs temporal distances, rows and columns indexed by vertex 1..n.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), entries_(n * n, kUnreachable) {}

  std::size_t vertex_count() const { return n_; }

  Time at(Vertex from, Vertex to) const { return entries_[(from - 1) * n_ + (to - 1)]; }
  Time& at(Vertex from, Vertex to) { return entries_[(from - 1) * n_ + (to - 1)]; }

  std::span<const Time> row(Vertex from) const {
    return {entries_.data() + (from - 1) * n_, n_};
  }

  bool all_finite() const;

  /// Largest finite entry (0 for a single vertex).
  Time max_finite() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Time> entries_;
};

/// Foremost arrival times from `source` to every vertex (index v - 1).
///
/// Layers are scanned in time order. At step t a vertex becomes reachable
/// when some layer-t edge joins it to a vertex reached strictly before t, so
/// a walk never uses two edges in one step. Past the stored lifetime the
/// last layer repeats; scanning stops after the first step with no new
/// arrival, and never later than lifetime + n.
std::vector<Time> earliest_arrivals(const TemporalGraph& g, Vertex source);

/// Row u equals earliest_arrivals(g, u).
DistanceMatrix all_pairs(const TemporalGraph& g);

/// Reference implementation of earliest_arrivals: breadth-first search over
/// the time-expanded graph with states (vertex, time), time up to
/// lifetime + n. Only meant for small instances.
std::vector<Time> oracle_arrivals(const TemporalGraph& g, Vertex source);

/// Temporally connected iff every entry of d is finite.
bool is_temporally_connected(const TemporalGraph& g, const DistanceMatrix& d);

}  // namespace tvoronoi
