#include "tvoronoi/reachability.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace tvoronoi {
namespace {

void check_source(const TemporalGraph& g, Vertex source) {
  if (source < 1 || source > g.vertex_count()) {
    throw std::out_of_range("source vertex " + std::to_string(source) + " not in [1," +
                            std::to_string(g.vertex_count()) + "]");
  }
}

}  // namespace

bool DistanceMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Time t) { return is_finite(t); });
}

Time DistanceMatrix::max_finite() const {
  Time best = 0;
  for (Time t : entries_) {
    if (is_finite(t)) best = std::max(best, t);
  }
  return best;
}

std::vector<Time> earliest_arrivals(const TemporalGraph& g, Vertex source) {
  check_source(g, source);
  const std::size_t n = g.vertex_count();
  const std::size_t tau = g.lifetime();
  std::vector<Time> arrival(n, kUnreachable);
  arrival[source - 1] = 0;

  // Arrivals found in step t carry the value t and so fail the a[x] < t
  // test for the rest of that step.
  for (std::size_t t = 1; t <= tau + n; ++t) {
    const Time now = static_cast<Time>(t);
    bool improved = false;
    for (const Edge& e : g.layer(t)) {
      Time& ta = arrival[e.a - 1];
      Time& tb = arrival[e.b - 1];
      if (ta < now && tb == kUnreachable) {
        tb = now;
        improved = true;
      } else if (tb < now && ta == kUnreachable) {
        ta = now;
        improved = true;
      }
    }
    if (t >= tau && !improved) break;
  }
  return arrival;
}

DistanceMatrix all_pairs(const TemporalGraph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  for (Vertex u = 1; u <= n; ++u) {
    const auto row = earliest_arrivals(g, u);
    for (Vertex v = 1; v <= n; ++v) d.at(u, v) = row[v - 1];
  }
  return d;
}

std::vector<Time> oracle_arrivals(const TemporalGraph& g, Vertex source) {
  check_source(g, source);
  const std::size_t n = g.vertex_count();
  const std::size_t horizon = g.lifetime() + n;

  // reached[t][v]: some temporal walk (or waiting) puts us at v at time t.
  std::vector<std::vector<bool>> reached(horizon + 1, std::vector<bool>(n, false));
  std::deque<std::pair<Vertex, std::size_t>> queue;
  reached[0][source - 1] = true;
  queue.emplace_back(source, 0);
  while (!queue.empty()) {
    const auto [v, t] = queue.front();
    queue.pop_front();
    if (t == horizon) continue;
    auto visit = [&](Vertex w) {
      if (!reached[t + 1][w - 1]) {
        reached[t + 1][w - 1] = true;
        queue.emplace_back(w, t + 1);
      }
    };
    visit(v);
    for (const Edge& e : g.layer(t + 1)) {
      if (e.a == v) visit(e.b);
      if (e.b == v) visit(e.a);
    }
  }

  std::vector<Time> arrival(n, kUnreachable);
  for (std::size_t t = 0; t <= horizon; ++t) {
    for (std::size_t v = 0; v < n; ++v) {
      if (reached[t][v] && arrival[v] == kUnreachable) arrival[v] = static_cast<Time>(t);
    }
  }
  return arrival;
}

bool is_temporally_connected(const TemporalGraph& g, const DistanceMatrix& d) {
  if (d.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("distance matrix does not match the graph");
  }
  return d.all_finite();
}

}  // namespace tvoronoi
