#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvoronoi/graph_classes.hpp"
#include "tvoronoi/temporal_graph.hpp"
#include "tvoronoi/voronoi.hpp"

namespace tvoronoi {

enum class MonotonicityFilter { any, growing, shrinking };

std::string to_string(MonotonicityFilter m);

/// A finite family of small temporal graphs: every underlying graph of
/// `base_class` on n vertices (n in [n_min, n_max]) together with every
/// layer sequence of minimal lifetime tau in [tau_min, tau_max] whose union
/// is that graph.
struct FamilySpec {
  ClassKind base_class = ClassKind::cycle;
  std::size_t n_min = 3;
  std::size_t n_max = 3;
  std::size_t tau_min = 1;
  std::size_t tau_max = 1;
  MonotonicityFilter monotonicity = MonotonicityFilter::any;
  /// Bound on the summed size of E_t Δ E_{t+1} over the lifetime.
  std::optional<std::size_t> max_edge_changes;
};

class InvalidFamilySpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t count)
      : std::runtime_error(what), count_(count) {}
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

inline constexpr std::uint64_t kMaxFamilySize = 1'000'000;

/// Throws InvalidFamilySpec when the spec is empty or unsupported.
void check_family_spec(const FamilySpec& spec);

/// Underlying graphs of the base class on n vertices, labeled as generated.
/// Edge order matters for cycles: edge i joins vertex i+1 and i+2 (mod n).
std::vector<EdgeSet> base_graphs(ClassKind kind, std::size_t n);

/// Number of instances generate_family would emit. Throws BudgetExceeded
/// once the count passes `limit`.
std::uint64_t family_size(const FamilySpec& spec, std::uint64_t limit = kMaxFamilySize);

/// Streams the family in a fixed order. Cycles are emitted once per
/// rotation/reflection class (the lexicographically smallest labeling);
/// other classes are emitted as labeled. Return false from `visit` to stop.
void generate_family(const FamilySpec& spec, const std::function<bool(const TemporalGraph&)>& visit);

/// Smallest dihedral relabeling of a temporal graph whose underlying graph
/// is the cycle 1-2-...-n-1.
TemporalGraph canonical_cycle(const TemporalGraph& g);

struct GameVerdict {
  GameKind kind = GameKind::vor;
  bool has_equilibrium = false;
  std::size_t equilibrium_count = 0;
  std::optional<Profile> witness;
  /// For games without an equilibrium: the best-response cycle reached from
  /// (1,1), which certifies that no profile is stable along it.
  std::vector<DynamicsStep> certificate;
};

struct InstanceRecord {
  std::uint64_t index = 0;
  TemporalGraph graph;
  ClassReport classes;
  std::size_t edge_changes = 0;
  std::vector<std::size_t> change_times;  // t >= 2 with E_t != E_{t-1}
  std::vector<GameVerdict> verdicts;
};

/// Evaluates one instance for the given games.
InstanceRecord evaluate_instance(const TemporalGraph& g, std::span<const GameKind> kinds,
                                 std::uint64_t index = 0);

struct GameSummary {
  GameKind kind = GameKind::vor;
  std::uint64_t with_equilibrium = 0;
  std::uint64_t without_equilibrium = 0;
  /// First instance without an equilibrium at the smallest n.
  std::optional<InstanceRecord> minimal_counterexample;
  /// Counts without equilibrium keyed by the change-time signature
  /// ("static", "2", "2,3", ...).
  std::map<std::string, std::uint64_t> without_by_change_times;
  std::map<std::size_t, std::uint64_t> without_by_n;
};

struct SearchSummary {
  FamilySpec spec;
  std::uint64_t instances = 0;
  std::map<std::string, std::uint64_t> instances_by_change_times;
  std::vector<GameSummary> games;
};

/// Decides equilibrium existence for every instance of the family. Records
/// reach `sink` in generation order; evaluation runs on `threads` workers
/// (0 picks the hardware concurrency). Throws BudgetExceeded before doing
/// any work if the family is larger than kMaxFamilySize.
SearchSummary sweep(const FamilySpec& spec, std::span<const GameKind> kinds,
                    const std::function<void(const InstanceRecord&)>& sink = {},
                    unsigned threads = 0);

std::string change_signature(const std::vector<std::size_t>& change_times);

}  // namespace tvoronoi
