#include "tvoronoi/graph_classes.hpp"

#include <algorithm>
#include <numeric>

#include "tvoronoi/reachability.hpp"

namespace tvoronoi {
namespace {

std::size_t component_count(const StaticGraph& s) {
  const std::size_t n = s.vertex_count();
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  for (Vertex start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    ++components;
    std::vector<Vertex> stack{start};
    seen[start - 1] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w = 1; w <= n; ++w) {
        if (!seen[w - 1] && s.adjacent(v, w)) {
          seen[w - 1] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

std::vector<std::size_t> bfs_distances(const StaticGraph& s, Vertex source) {
  const std::size_t n = s.vertex_count();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n, kNone);
  std::vector<Vertex> frontier{source};
  dist[source - 1] = 0;
  for (std::size_t level = 1; !frontier.empty(); ++level) {
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex w = 1; w <= n; ++w) {
        if (dist[w - 1] == kNone && s.adjacent(v, w)) {
          dist[w - 1] = level;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

// Places `corner` at (0,0) and `other` at (0, cols-1), derives every
// coordinate from the two distance fields and checks the result is exactly
// the rows x cols grid.
bool verify_grid_embedding(const StaticGraph& s, Vertex corner, Vertex other, std::size_t rows,
                           std::size_t cols) {
  const std::size_t n = s.vertex_count();
  const auto from_corner = bfs_distances(s, corner);
  const auto from_other = bfs_distances(s, other);
  if (from_corner[other - 1] != cols - 1) return false;

  std::vector<Vertex> at(n, 0);  // cell index -> vertex
  std::vector<std::size_t> row_of(n), col_of(n);
  for (Vertex v = 1; v <= n; ++v) {
    // i + j = dx, i + (cols - 1 - j) = dy
    const std::size_t dx = from_corner[v - 1];
    const std::size_t dy = from_other[v - 1];
    const std::size_t sum = dx + dy;
    if (sum < cols - 1 || (sum - (cols - 1)) % 2 != 0) return false;
    const std::size_t i = (sum - (cols - 1)) / 2;
    if (i >= rows || dx < i || dx - i >= cols) return false;
    const std::size_t j = dx - i;
    const std::size_t cell = i * cols + j;
    if (at[cell] != 0) return false;
    at[cell] = v;
    row_of[v - 1] = i;
    col_of[v - 1] = j;
  }
  for (const Edge& e : s.edges()) {
    const std::size_t di = row_of[e.a - 1] > row_of[e.b - 1] ? row_of[e.a - 1] - row_of[e.b - 1]
                                                            : row_of[e.b - 1] - row_of[e.a - 1];
    const std::size_t dj = col_of[e.a - 1] > col_of[e.b - 1] ? col_of[e.a - 1] - col_of[e.b - 1]
                                                            : col_of[e.b - 1] - col_of[e.a - 1];
    if (di + dj != 1) return false;
  }
  return s.edge_count() == rows * (cols - 1) + cols * (rows - 1);
}

bool verify_split(const StaticGraph& s, const SplitPartition& p) {
  for (std::size_t i = 0; i < p.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < p.clique.size(); ++j) {
      if (!s.adjacent(p.clique[i], p.clique[j])) return false;
    }
  }
  for (std::size_t i = 0; i < p.independent.size(); ++i) {
    for (std::size_t j = i + 1; j < p.independent.size(); ++j) {
      if (s.adjacent(p.independent[i], p.independent[j])) return false;
    }
  }
  return p.clique.size() + p.independent.size() == s.vertex_count();
}

}  // namespace

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::path: return "path";
    case ClassKind::cycle: return "cycle";
    case ClassKind::tree: return "tree";
    case ClassKind::grid: return "grid";
    case ClassKind::clique: return "clique";
    case ClassKind::complete_k_partite: return "complete_k_partite";
    case ClassKind::split: return "split";
    case ClassKind::threshold: return "threshold";
  }
  return "unknown";
}

std::optional<ClassKind> parse_class_kind(const std::string& name) {
  for (auto kind : {ClassKind::path, ClassKind::cycle, ClassKind::tree, ClassKind::grid,
                    ClassKind::clique, ClassKind::complete_k_partite, ClassKind::split,
                    ClassKind::threshold}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string to_string(const ClassLabel& label) {
  switch (label.kind) {
    case ClassKind::grid:
      return "grid(" + std::to_string(label.rows) + "," + std::to_string(label.cols) + ")";
    case ClassKind::complete_k_partite:
      return "complete_k_partite(" + std::to_string(label.parts) + ")";
    default:
      return to_string(label.kind);
  }
}

bool ClassReport::has(ClassKind kind) const {
  return std::any_of(underlying_class.begin(), underlying_class.end(),
                     [kind](const ClassLabel& l) { return l.kind == kind; });
}

bool is_connected(const StaticGraph& s) {
  return s.vertex_count() > 0 && component_count(s) == 1;
}

bool is_tree(const StaticGraph& s) {
  return is_connected(s) && s.edge_count() + 1 == s.vertex_count();
}

bool is_path(const StaticGraph& s) {
  if (!is_tree(s)) return false;
  for (Vertex v = 1; v <= s.vertex_count(); ++v) {
    if (s.degree(v) > 2) return false;
  }
  return true;
}

bool is_cycle(const StaticGraph& s) {
  if (s.vertex_count() < 3 || !is_connected(s)) return false;
  for (Vertex v = 1; v <= s.vertex_count(); ++v) {
    if (s.degree(v) != 2) return false;
  }
  return true;
}

bool is_clique(const StaticGraph& s) {
  const std::size_t n = s.vertex_count();
  return n > 0 && s.edge_count() == n * (n - 1) / 2;
}

std::optional<std::pair<std::size_t, std::size_t>> grid_dimensions(const StaticGraph& s) {
  const std::size_t n = s.vertex_count();
  if (n < 4 || !is_connected(s)) return std::nullopt;
  std::vector<Vertex> corners;
  for (Vertex v = 1; v <= n; ++v) {
    if (s.degree(v) == 2) corners.push_back(v);
  }
  if (corners.empty()) return std::nullopt;
  const Vertex corner = corners.front();
  for (std::size_t rows = 2; rows * rows <= n; ++rows) {
    if (n % rows != 0) continue;
    const std::size_t cols = n / rows;
    if (s.edge_count() != rows * (cols - 1) + cols * (rows - 1)) continue;
    // Either side of the corner may run along the longer dimension.
    for (auto [r, c] : {std::pair{rows, cols}, std::pair{cols, rows}}) {
      for (Vertex other : corners) {
        if (other != corner && verify_grid_embedding(s, corner, other, r, c)) {
          return std::pair{rows, cols};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::vector<Vertex>>> multipartite_parts(const StaticGraph& s) {
  const std::size_t n = s.vertex_count();
  if (n == 0) return std::nullopt;
  // Components of the complement, collected by smallest member.
  std::vector<int> part_of(n, -1);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex start = 1; start <= n; ++start) {
    if (part_of[start - 1] >= 0) continue;
    const int id = static_cast<int>(parts.size());
    parts.push_back({});
    std::vector<Vertex> stack{start};
    part_of[start - 1] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      parts.back().push_back(v);
      for (Vertex w = 1; w <= n; ++w) {
        if (w != v && part_of[w - 1] < 0 && !s.adjacent(v, w)) {
          part_of[w - 1] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(parts.back().begin(), parts.back().end());
  }
  // Complete multipartite iff non-adjacency is an equivalence relation,
  // i.e. each complement component is independent in s and parts are
  // fully joined.
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const bool same = part_of[u - 1] == part_of[v - 1];
      if (same == s.adjacent(u, v)) return std::nullopt;
    }
  }
  return parts;
}

std::optional<SplitPartition> split_partition(const StaticGraph& s) {
  const std::size_t n = s.vertex_count();
  if (n == 0) return std::nullopt;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{1});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return s.degree(x) > s.degree(y); });

  // m = max{i : d_i >= i - 1} (1-based); the top m vertices form the
  // clique when the degree sums balance.
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.degree(order[i]) >= i) m = i + 1;
  }
  std::size_t top = 0, rest = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? top : rest) += s.degree(order[i]);
  if (top != m * (m - 1) + rest) return std::nullopt;

  SplitPartition p;
  p.clique.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
  p.independent.assign(order.begin() + static_cast<std::ptrdiff_t>(m), order.end());
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());
  if (!verify_split(s, p)) return std::nullopt;
  return p;
}

bool is_threshold(const StaticGraph& s) {
  const std::size_t n = s.vertex_count();
  if (n == 0) return false;
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  while (remaining > 0) {
    bool removed = false;
    for (Vertex v = 1; v <= n && !removed; ++v) {
      if (!alive[v - 1]) continue;
      std::size_t live_degree = 0;
      for (Vertex w = 1; w <= n; ++w) {
        if (alive[w - 1] && s.adjacent(v, w)) ++live_degree;
      }
      if (live_degree == 0 || live_degree + 1 == remaining) {
        alive[v - 1] = false;
        --remaining;
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

std::optional<Vertex> dominating_non_isolated(const StaticGraph& s) {
  const std::size_t n = s.vertex_count();
  for (Vertex v = 1; v <= n; ++v) {
    if (s.degree(v) == 0) continue;
    bool dominates = true;
    for (Vertex w = 1; w <= n && dominates; ++w) {
      if (w != v && s.degree(w) > 0 && !s.adjacent(v, w)) dominates = false;
    }
    if (dominates) return v;
  }
  return std::nullopt;
}

std::vector<ClassLabel> classify_underlying(const StaticGraph& s) {
  std::vector<ClassLabel> labels;
  if (is_path(s)) labels.push_back({ClassKind::path});
  if (is_cycle(s)) labels.push_back({ClassKind::cycle});
  if (is_tree(s)) labels.push_back({ClassKind::tree});
  if (auto dims = grid_dimensions(s)) {
    labels.push_back({ClassKind::grid, dims->first, dims->second});
  }
  if (is_clique(s)) labels.push_back({ClassKind::clique});
  if (auto parts = multipartite_parts(s); parts && parts->size() >= 2) {
    labels.push_back({ClassKind::complete_k_partite, 0, 0, parts->size()});
  }
  if (split_partition(s)) labels.push_back({ClassKind::split});
  if (is_threshold(s)) labels.push_back({ClassKind::threshold});
  return labels;
}

ClassReport classify(const TemporalGraph& g, const DistanceMatrix& d) {
  ClassReport report;
  report.temporally_connected = is_temporally_connected(g, d);
  const auto mono = is_monotone(g);
  report.monotone_growing = mono.growing;
  report.monotone_shrinking = mono.shrinking;
  report.underlying_class = classify_underlying(underlying(g));
  return report;
}

}  // namespace tvoronoi
