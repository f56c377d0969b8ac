#include "tvoronoi/temporal_graph.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace tvoronoi {

TemporalGraph::TemporalGraph(std::size_t n, std::vector<EdgeSet> layers)
    : n_(n), layers_(std::move(layers)) {
  for (auto& layer : layers_) {
    for (auto& e : layer) e = make_edge(e.a, e.b);
    std::sort(layer.begin(), layer.end());
  }
}

const EdgeSet& TemporalGraph::layer(std::size_t t) const {
  if (layers_.empty()) throw std::out_of_range("temporal graph has no layers");
  if (t == 0) throw std::out_of_range("time steps start at 1");
  return layers_[std::min(t, layers_.size()) - 1];
}

std::vector<Violation> validate(const TemporalGraph& g) {
  std::vector<Violation> out;
  auto describe = [](const Edge& e, std::size_t t) {
    std::ostringstream os;
    os << "{" << e.a << "," << e.b << "} in layer " << t;
    return os.str();
  };

  if (g.vertex_count() == 0) {
    out.push_back({ViolationKind::empty_vertex_set, 0, {}, "vertex count must be at least 1"});
  }
  if (g.lifetime() == 0) {
    out.push_back({ViolationKind::empty_layer_sequence, 0, {}, "layer sequence is empty"});
  }
  for (std::size_t i = 0; i < g.lifetime(); ++i) {
    const auto& layer = g.layers()[i];
    const std::size_t t = i + 1;
    for (std::size_t j = 0; j < layer.size(); ++j) {
      const Edge& e = layer[j];
      if (e.a < 1 || e.b > g.vertex_count()) {
        out.push_back({ViolationKind::endpoint_out_of_range, t, e,
                       "endpoint out of range: " + describe(e, t)});
      }
      if (e.a == e.b) {
        out.push_back({ViolationKind::self_loop, t, e, "self-loop: " + describe(e, t)});
      }
      if (j > 0 && layer[j - 1] == e) {
        out.push_back({ViolationKind::duplicate_edge, t, e, "duplicate edge: " + describe(e, t)});
      }
    }
  }
  return out;
}

void require_valid(const TemporalGraph& g) {
  const auto violations = validate(g);
  if (violations.empty()) return;
  std::string msg = "invalid temporal graph:";
  for (const auto& v : violations) msg += " " + v.message + ";";
  throw std::invalid_argument(msg);
}

TemporalGraph normalize_lifetime(const TemporalGraph& g) {
  std::vector<EdgeSet> layers = g.layers();
  while (layers.size() > 1 && layers[layers.size() - 1] == layers[layers.size() - 2]) {
    layers.pop_back();
  }
  return TemporalGraph(g.vertex_count(), std::move(layers));
}

Monotonicity is_monotone(const TemporalGraph& g) {
  Monotonicity m{true, true};
  for (std::size_t i = 1; i < g.lifetime(); ++i) {
    const auto& prev = g.layers()[i - 1];
    const auto& next = g.layers()[i];
    if (!edge_subset(prev, next)) m.growing = false;
    if (!edge_subset(next, prev)) m.shrinking = false;
  }
  return m;
}

std::size_t edge_change_count(const TemporalGraph& g) {
  std::size_t changes = 0;
  for (std::size_t i = 1; i < g.lifetime(); ++i) {
    const auto& prev = g.layers()[i - 1];
    const auto& next = g.layers()[i];
    changes += edge_difference(prev, next).size() + edge_difference(next, prev).size();
  }
  return changes;
}

StaticGraph::StaticGraph(std::size_t n, EdgeSet edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n * n, 0), degree_(n, 0) {
  for (auto& e : edges_) e = make_edge(e.a, e.b);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& e : edges_) {
    if (e.a < 1 || e.b > n_ || e.a == e.b) {
      throw std::invalid_argument("static graph edge out of range or loop");
    }
    adjacency_[(e.a - 1) * n_ + (e.b - 1)] = 1;
    adjacency_[(e.b - 1) * n_ + (e.a - 1)] = 1;
    ++degree_[e.a - 1];
    ++degree_[e.b - 1];
  }
}

std::vector<Vertex> StaticGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w = 1; w <= n_; ++w) {
    if (adjacent(v, w)) out.push_back(w);
  }
  return out;
}

StaticGraph underlying(const TemporalGraph& g) {
  EdgeSet all;
  for (const auto& layer : g.layers()) all = edge_union(all, layer);
  return StaticGraph(g.vertex_count(), std::move(all));
}

EdgeSet complete_edges(std::size_t n) {
  EdgeSet out;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) out.push_back({u, v});
  }
  return out;
}

EdgeSet edge_union(const EdgeSet& x, const EdgeSet& y) {
  EdgeSet out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

EdgeSet edge_difference(const EdgeSet& x, const EdgeSet& y) {
  EdgeSet out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

bool edge_subset(const EdgeSet& x, const EdgeSet& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

}  // namespace tvoronoi
