#include "tvoronoi/explorer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <thread>

#include "tvoronoi/reachability.hpp"

namespace tvoronoi {
namespace {

constexpr std::size_t kMaxVertices = 32;
constexpr std::size_t kMaxLifetime = 16;

using Mask = std::uint32_t;  // bit t-1 set iff the edge is present at step t

struct MaskOption {
  Mask mask;
  std::size_t changes;
  bool changes_last;  // differs between the last two stored layers
};

std::vector<MaskOption> mask_options(std::size_t tau, MonotonicityFilter filter) {
  std::vector<MaskOption> out;
  const Mask full = (Mask{1} << tau) - 1;
  for (Mask m = 1; m <= full; ++m) {
    std::size_t changes = 0;
    bool turned_off = false, turned_on = false;
    for (std::size_t t = 1; t < tau; ++t) {
      const bool before = (m >> (t - 1)) & 1U;
      const bool after = (m >> t) & 1U;
      if (before != after) {
        ++changes;
        (before ? turned_off : turned_on) = true;
      }
    }
    if (filter == MonotonicityFilter::growing && turned_off) continue;
    if (filter == MonotonicityFilter::shrinking && turned_on) continue;
    const bool last = tau >= 2 && (((m >> (tau - 2)) & 1U) != ((m >> (tau - 1)) & 1U));
    out.push_back({m, changes, last});
  }
  return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? UINT64_MAX : s;
}

// Labeled layer assignments for one base graph: every edge picks an option,
// the total change count stays within budget, and for tau >= 2 at least one
// edge changes between the last two layers (so tau is minimal).
std::uint64_t count_assignments(std::size_t edges, std::size_t tau,
                                const std::vector<MaskOption>& options,
                                std::optional<std::size_t> budget) {
  const std::size_t cap = budget.value_or(edges * (tau - 1));
  // dp[c][f]: ways with total changes c, f = some edge changes last.
  std::vector<std::array<std::uint64_t, 2>> dp(cap + 1, {0, 0});
  dp[0][0] = 1;
  for (std::size_t e = 0; e < edges; ++e) {
    std::vector<std::array<std::uint64_t, 2>> next(cap + 1, {0, 0});
    for (std::size_t c = 0; c <= cap; ++c) {
      for (int f = 0; f < 2; ++f) {
        if (dp[c][f] == 0) continue;
        for (const auto& o : options) {
          if (c + o.changes > cap) continue;
          const int nf = f | (o.changes_last ? 1 : 0);
          next[c + o.changes][nf] = saturating_add(next[c + o.changes][nf], dp[c][f]);
        }
      }
    }
    dp = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::size_t c = 0; c <= cap; ++c) {
    total = saturating_add(total, dp[c][1]);
    if (tau == 1) total = saturating_add(total, dp[c][0]);
  }
  return total;
}

// Dihedral images of edge index i on an n-cycle.
std::size_t dihedral_image(std::size_t i, std::size_t n, std::size_t shift, bool reflect) {
  const std::size_t base = reflect ? n - 1 - i : i;
  return (base + shift) % n;
}

bool is_canonical_cycle(const std::vector<Mask>& masks) {
  const std::size_t n = masks.size();
  std::vector<Mask> image(n);
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      for (std::size_t i = 0; i < n; ++i) image[dihedral_image(i, n, shift, reflect != 0)] = masks[i];
      if (image < masks) return false;
    }
  }
  return true;
}

TemporalGraph assemble(std::size_t n, std::size_t tau, const EdgeSet& edges,
                       const std::vector<Mask>& masks) {
  std::vector<EdgeSet> layers(tau);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t t = 0; t < tau; ++t) {
      if ((masks[i] >> t) & 1U) layers[t].push_back(edges[i]);
    }
  }
  return TemporalGraph(n, std::move(layers));
}

double base_graph_estimate(ClassKind kind, std::size_t n) {
  switch (kind) {
    case ClassKind::tree:
      return n <= 2 ? 1.0 : std::pow(static_cast<double>(n), static_cast<double>(n - 2));
    case ClassKind::split: {
      double total = 0;
      for (std::size_t c = 1; c <= n; ++c) total += std::pow(2.0, static_cast<double>(c * (n - c)));
      return total;
    }
    case ClassKind::threshold:
      return std::pow(2.0, static_cast<double>(n - 1));
    default:
      return static_cast<double>(n);
  }
}

void prufer_trees(std::size_t n, std::vector<EdgeSet>& out) {
  if (n == 1) {
    out.push_back({});
    return;
  }
  if (n == 2) {
    out.push_back({{1, 2}});
    return;
  }
  std::vector<Vertex> seq(n - 2, 1);
  while (true) {
    std::vector<std::size_t> degree(n + 1, 1);
    for (Vertex v : seq) ++degree[v];
    EdgeSet edges;
    std::set<Vertex> leaves;
    for (Vertex v = 1; v <= n; ++v) {
      if (degree[v] == 1) leaves.insert(v);
    }
    for (Vertex v : seq) {
      const Vertex leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.push_back(make_edge(leaf, v));
      if (--degree[v] == 1) leaves.insert(v);
    }
    edges.push_back(make_edge(*leaves.begin(), *std::next(leaves.begin())));
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));

    std::size_t pos = seq.size();
    while (pos > 0 && seq[pos - 1] == n) seq[--pos] = 1;
    if (pos == 0) break;
    ++seq[pos - 1];
  }
}

// Integer partitions of n into at least two non-increasing parts.
void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    if (current.size() >= 2) out.push_back(current);
    return;
  }
  for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::string to_string(MonotonicityFilter m) {
  switch (m) {
    case MonotonicityFilter::any: return "any";
    case MonotonicityFilter::growing: return "growing";
    case MonotonicityFilter::shrinking: return "shrinking";
  }
  return "unknown";
}

std::string change_signature(const std::vector<std::size_t>& change_times) {
  if (change_times.empty()) return "static";
  std::string out;
  for (std::size_t t : change_times) {
    if (!out.empty()) out += ",";
    out += std::to_string(t);
  }
  return out;
}

std::vector<EdgeSet> base_graphs(ClassKind kind, std::size_t n) {
  if (base_graph_estimate(kind, n) > static_cast<double>(kMaxFamilySize)) {
    throw BudgetExceeded("too many " + to_string(kind) + " graphs on " + std::to_string(n) +
                             " vertices",
                         static_cast<std::uint64_t>(std::min(base_graph_estimate(kind, n), 1e19)));
  }
  std::vector<EdgeSet> out;
  switch (kind) {
    case ClassKind::path: {
      EdgeSet edges;
      for (Vertex i = 1; i < n; ++i) edges.push_back({i, i + 1});
      out.push_back(std::move(edges));
      break;
    }
    case ClassKind::cycle: {
      if (n < 3) break;
      EdgeSet edges;  // structural order, not sorted
      for (Vertex i = 1; i <= n; ++i) edges.push_back(make_edge(i, i % n + 1));
      out.push_back(std::move(edges));
      break;
    }
    case ClassKind::tree:
      prufer_trees(n, out);
      break;
    case ClassKind::grid: {
      for (std::size_t rows = 2; rows * rows <= n; ++rows) {
        if (n % rows != 0) continue;
        const std::size_t cols = n / rows;
        EdgeSet edges;
        auto id = [cols](std::size_t i, std::size_t j) {
          return static_cast<Vertex>(i * cols + j + 1);
        };
        for (std::size_t i = 0; i < rows; ++i) {
          for (std::size_t j = 0; j < cols; ++j) {
            if (j + 1 < cols) edges.push_back({id(i, j), id(i, j + 1)});
            if (i + 1 < rows) edges.push_back({id(i, j), id(i + 1, j)});
          }
        }
        std::sort(edges.begin(), edges.end());
        out.push_back(std::move(edges));
      }
      break;
    }
    case ClassKind::clique:
      out.push_back(complete_edges(n));
      break;
    case ClassKind::complete_k_partite: {
      std::vector<std::vector<std::size_t>> shapes;
      std::vector<std::size_t> current;
      partitions(n, n, current, shapes);
      for (const auto& shape : shapes) {
        std::vector<std::size_t> part_of;
        for (std::size_t p = 0; p < shape.size(); ++p) part_of.insert(part_of.end(), shape[p], p);
        EdgeSet edges;
        for (Vertex u = 1; u <= n; ++u) {
          for (Vertex v = u + 1; v <= n; ++v) {
            if (part_of[u - 1] != part_of[v - 1]) edges.push_back({u, v});
          }
        }
        out.push_back(std::move(edges));
      }
      break;
    }
    case ClassKind::split: {
      // Clique 1..c; vertex c+i picks a neighbourhood inside the clique.
      std::set<EdgeSet> seen;
      for (std::size_t c = 1; c <= n; ++c) {
        const std::size_t bits = c * (n - c);
        for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << bits); ++choice) {
          EdgeSet edges = complete_edges(c);
          for (std::size_t i = 0; i < n - c; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
              if ((choice >> (i * c + j)) & 1U) {
                edges.push_back({static_cast<Vertex>(j + 1), static_cast<Vertex>(c + i + 1)});
              }
            }
          }
          std::sort(edges.begin(), edges.end());
          if (seen.insert(edges).second) out.push_back(std::move(edges));
        }
      }
      break;
    }
    case ClassKind::threshold: {
      // Vertex i (i >= 2) enters isolated or dominating per bit i-2.
      std::set<EdgeSet> seen;
      const std::uint64_t sequences = n == 0 ? 0 : std::uint64_t{1} << (n - 1);
      for (std::uint64_t seq = 0; seq < sequences; ++seq) {
        EdgeSet edges;
        for (Vertex v = 2; v <= n; ++v) {
          if ((seq >> (v - 2)) & 1U) {
            for (Vertex u = 1; u < v; ++u) edges.push_back({u, v});
          }
        }
        std::sort(edges.begin(), edges.end());
        if (seen.insert(edges).second) out.push_back(std::move(edges));
      }
      break;
    }
  }
  return out;
}

void check_family_spec(const FamilySpec& spec) {
  if (spec.n_min < 1 || spec.n_min > spec.n_max) {
    throw InvalidFamilySpec("vertex range must satisfy 1 <= n_min <= n_max");
  }
  if (spec.n_max > kMaxVertices) {
    throw InvalidFamilySpec("at most " + std::to_string(kMaxVertices) + " vertices supported");
  }
  if (spec.tau_min < 1 || spec.tau_min > spec.tau_max) {
    throw InvalidFamilySpec("lifetime range must satisfy 1 <= tau_min <= tau_max");
  }
  if (spec.tau_max > kMaxLifetime) {
    throw InvalidFamilySpec("at most " + std::to_string(kMaxLifetime) + " layers supported");
  }
  bool any_base = false;
  for (std::size_t n = spec.n_min; n <= spec.n_max && !any_base; ++n) {
    switch (spec.base_class) {
      case ClassKind::cycle: any_base = n >= 3; break;
      case ClassKind::grid:
        for (std::size_t r = 2; r * r <= n; ++r) any_base = any_base || n % r == 0;
        break;
      case ClassKind::complete_k_partite: any_base = n >= 2; break;
      default: any_base = true;
    }
  }
  if (!any_base) {
    throw InvalidFamilySpec("no " + to_string(spec.base_class) + " graph in the vertex range");
  }
}

namespace {

// Visits every admissible mask vector for one base graph in ascending
// lexicographic order (cycles: canonical representatives only).
bool for_each_assignment(const FamilySpec& spec, std::size_t tau, const EdgeSet& base,
                         const std::vector<MaskOption>& options,
                         const std::function<bool(const std::vector<Mask>&)>& visit) {
  const bool cyclic = spec.base_class == ClassKind::cycle;
  const std::size_t budget = spec.max_edge_changes.value_or(SIZE_MAX);
  const std::size_t m = base.size();
  std::vector<Mask> masks(m, 0);
  bool keep_going = true;
  std::function<void(std::size_t, std::size_t, bool)> rec = [&](std::size_t e, std::size_t used,
                                                                bool last_changed) {
    if (e == m) {
      if (tau >= 2 && !last_changed) return;
      if (cyclic && !is_canonical_cycle(masks)) return;
      keep_going = visit(masks);
      return;
    }
    for (const auto& o : options) {
      if (o.changes > budget - used) continue;
      masks[e] = o.mask;
      rec(e + 1, used + o.changes, last_changed || o.changes_last);
      if (!keep_going) return;
    }
  };
  rec(0, 0, false);
  return keep_going;
}

}  // namespace

std::uint64_t family_size(const FamilySpec& spec, std::uint64_t limit) {
  check_family_spec(spec);
  std::uint64_t total = 0;
  std::uint64_t bases_seen = 0;
  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
    const auto bases = base_graphs(spec.base_class, n);
    bases_seen += bases.size();
    if (bases_seen > limit) throw BudgetExceeded("family has too many base graphs", bases_seen);
    for (std::size_t tau = spec.tau_min; tau <= spec.tau_max; ++tau) {
      const auto options = mask_options(tau, spec.monotonicity);
      for (const auto& base : bases) {
        const std::uint64_t labeled =
            count_assignments(base.size(), tau, options, spec.max_edge_changes);
        if (spec.base_class != ClassKind::cycle) {
          total = saturating_add(total, labeled);
        } else {
          // Orbits number at least labeled / |D_n|; count them exactly only
          // when that bound leaves room.
          if (saturating_add(total, labeled / (2 * n)) > limit) {
            throw BudgetExceeded("family exceeds the instance budget",
                                 saturating_add(total, labeled / (2 * n)));
          }
          for_each_assignment(spec, tau, base, options, [&](const std::vector<Mask>&) {
            return ++total <= limit;
          });
        }
        if (total > limit) throw BudgetExceeded("family exceeds the instance budget", total);
      }
    }
  }
  return total;
}

void generate_family(const FamilySpec& spec,
                     const std::function<bool(const TemporalGraph&)>& visit) {
  check_family_spec(spec);
  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
    const auto bases = base_graphs(spec.base_class, n);
    for (std::size_t tau = spec.tau_min; tau <= spec.tau_max; ++tau) {
      const auto options = mask_options(tau, spec.monotonicity);
      for (const auto& base : bases) {
        const bool more = for_each_assignment(spec, tau, base, options,
                                              [&](const std::vector<Mask>& masks) {
                                                return visit(assemble(n, tau, base, masks));
                                              });
        if (!more) return;
      }
    }
  }
}

TemporalGraph canonical_cycle(const TemporalGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto bases = base_graphs(ClassKind::cycle, n);
  if (bases.empty() || underlying(g).edges() != StaticGraph(n, bases.front()).edges()) {
    throw std::invalid_argument("underlying graph is not the cycle 1-2-...-n-1");
  }
  const EdgeSet& edges = bases.front();
  std::vector<Mask> masks(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 1; t <= g.lifetime(); ++t) {
      const auto& layer = g.layer(t);
      if (std::binary_search(layer.begin(), layer.end(), edges[i])) masks[i] |= Mask{1} << (t - 1);
    }
  }
  std::vector<Mask> best = masks, image(n);
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      for (std::size_t i = 0; i < n; ++i) image[dihedral_image(i, n, shift, reflect != 0)] = masks[i];
      best = std::min(best, image);
    }
  }
  return assemble(n, g.lifetime(), edges, best);
}

InstanceRecord evaluate_instance(const TemporalGraph& g, std::span<const GameKind> kinds,
                                 std::uint64_t index) {
  InstanceRecord record;
  record.index = index;
  record.graph = g;
  const DistanceMatrix d = all_pairs(g);
  record.classes = classify(g, d);
  record.edge_changes = edge_change_count(g);
  for (std::size_t t = 2; t <= g.lifetime(); ++t) {
    if (g.layer(t) != g.layer(t - 1)) record.change_times.push_back(t);
  }
  const std::size_t n = g.vertex_count();
  for (GameKind kind : kinds) {
    const VoronoiGame game(d, kind);
    const auto equilibria = game.enumerate_nash();
    GameVerdict verdict;
    verdict.kind = kind;
    verdict.has_equilibrium = !equilibria.empty();
    verdict.equilibrium_count = equilibria.size();
    if (verdict.has_equilibrium) {
      verdict.witness = equilibria.front();
    } else {
      auto dynamics = game.best_response_dynamics({1, 1}, 4 * n * n + 4);
      verdict.certificate = std::move(dynamics.cycle);
    }
    record.verdicts.push_back(std::move(verdict));
  }
  return record;
}

SearchSummary sweep(const FamilySpec& spec, std::span<const GameKind> kinds,
                    const std::function<void(const InstanceRecord&)>& sink, unsigned threads) {
  family_size(spec);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  SearchSummary summary;
  summary.spec = spec;
  summary.games.resize(kinds.size());
  for (std::size_t k = 0; k < kinds.size(); ++k) summary.games[k].kind = kinds[k];

  constexpr std::size_t kBatch = 512;
  std::vector<TemporalGraph> batch;
  std::uint64_t next_index = 0;

  auto flush = [&] {
    std::vector<InstanceRecord> records(batch.size());
    auto work = [&](unsigned worker) {
      for (std::size_t i = worker; i < batch.size(); i += threads) {
        records[i] = evaluate_instance(batch[i], kinds, next_index + i);
      }
    };
    if (threads == 1 || batch.size() < 2) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }
    for (auto& record : records) {
      ++summary.instances;
      const std::string signature = change_signature(record.change_times);
      ++summary.instances_by_change_times[signature];
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        auto& game = summary.games[k];
        const auto& verdict = record.verdicts[k];
        if (verdict.has_equilibrium) {
          ++game.with_equilibrium;
          continue;
        }
        ++game.without_equilibrium;
        ++game.without_by_change_times[signature];
        ++game.without_by_n[record.graph.vertex_count()];
        if (!game.minimal_counterexample ||
            record.graph.vertex_count() < game.minimal_counterexample->graph.vertex_count()) {
          game.minimal_counterexample = record;
        }
      }
      if (sink) sink(record);
    }
    next_index += batch.size();
    batch.clear();
  };

  generate_family(spec, [&](const TemporalGraph& g) {
    batch.push_back(g);
    if (batch.size() == kBatch) flush();
    return true;
  });
  if (!batch.empty()) flush();
  return summary;
}

}  // namespace tvoronoi
