#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvoronoi/reachability.hpp"
#include "tvoronoi/temporal_graph.hpp"

namespace tvoronoi {

/// Vor: a player wins the vertices she reaches strictly earlier.
/// rVor: a player wins the vertices that reach her strictly earlier.
enum class GameKind { vor, rvor };

std::string to_string(GameKind kind);
std::optional<GameKind> parse_game_kind(const std::string& name);

enum class Player { first = 1, second = 2 };

constexpr Player other(Player p) { return p == Player::first ? Player::second : Player::first; }
constexpr int index(Player p) { return static_cast<int>(p); }

/// Positions of the two players. Both may pick the same vertex.
struct Profile {
  Vertex p1 = 1;
  Vertex p2 = 1;

  Vertex position(Player p) const { return p == Player::first ? p1 : p2; }
  Profile with(Player p, Vertex v) const {
    return p == Player::first ? Profile{v, p2} : Profile{p1, v};
  }

  friend auto operator<=>(const Profile&, const Profile&) = default;
};

/// Won sets of both players and the vertices nobody wins, each ascending.
struct PayoffResult {
  std::vector<Vertex> won1;
  std::vector<Vertex> won2;
  std::vector<Vertex> unclaimed;

  std::size_t u1() const { return won1.size(); }
  std::size_t u2() const { return won2.size(); }
  std::size_t payoff(Player p) const { return p == Player::first ? u1() : u2(); }
  const std::vector<Vertex>& won(Player p) const { return p == Player::first ? won1 : won2; }
};

struct BestResponses {
  std::vector<Vertex> vertices;  // ascending
  std::size_t payoff = 0;
};

/// A unilateral move that strictly raises the mover's payoff.
struct Deviation {
  Player player;
  Vertex to;
  std::size_t old_payoff;
  std::size_t new_payoff;
};

struct NashCheck {
  bool is_nash = false;
  std::optional<Deviation> deviation;  // set iff !is_nash
};

/// For each role and each position of the opponent, the responding
/// player's best responses. responses(p, v) answers "where should p go when
/// the other player sits on v".
class BestResponseGraph {
 public:
  BestResponseGraph(std::size_t n, std::vector<BestResponses> first,
                    std::vector<BestResponses> second)
      : n_(n), first_(std::move(first)), second_(std::move(second)) {}

  std::size_t vertex_count() const { return n_; }
  const BestResponses& responses(Player responder, Vertex opponent) const {
    return (responder == Player::first ? first_ : second_)[opponent - 1];
  }
  bool has_arc(Player responder, Vertex from, Vertex to) const;

 private:
  std::size_t n_;
  std::vector<BestResponses> first_;
  std::vector<BestResponses> second_;
};

/// One move of best-response dynamics: `mover` switched and the game is
/// now at `profile` with payoffs (u1, u2).
struct DynamicsStep {
  Player mover;
  Profile profile;
  std::size_t u1;
  std::size_t u2;
};

enum class DynamicsOutcome { equilibrium, cycle, step_limit };

std::string to_string(DynamicsOutcome outcome);

struct DynamicsResult {
  DynamicsOutcome outcome = DynamicsOutcome::step_limit;
  Profile final_profile;
  std::vector<DynamicsStep> trace;
  /// Tail of the trace that repeats forever; empty unless outcome == cycle.
  std::vector<DynamicsStep> cycle;

  /// Vertices moved to around the cycle, in order, each a best response to
  /// the one before it (cyclically).
  std::vector<Vertex> cycle_positions() const;
};

/// Two-player temporal Voronoi game over a fixed distance matrix.
///
/// The general k-player rule awards v to player i when i's comparison value
/// beats every other player's strictly; only two players are exposed here.
class VoronoiGame {
 public:
  VoronoiGame(DistanceMatrix distances, GameKind kind);
  VoronoiGame(const TemporalGraph& g, GameKind kind) : VoronoiGame(all_pairs(g), kind) {}

  std::size_t vertex_count() const { return d_.vertex_count(); }
  GameKind kind() const { return kind_; }
  const DistanceMatrix& distances() const { return d_; }

  /// Throws std::out_of_range for positions outside [1, n].
  PayoffResult payoff(Profile s) const;

  /// |U_p(s)| without materializing the sets.
  std::size_t payoff_of(Player p, Profile s) const;

  /// All maximizers for `responder` against the opponent sitting on `fixed`.
  BestResponses best_responses(Player responder, Vertex fixed) const;

  /// Same, but the responder may only pick from `candidates` (nonempty).
  BestResponses best_responses(Player responder, Vertex fixed,
                               std::span<const Vertex> candidates) const;

  /// Player 1 is checked first; the certificate moves to the smallest best
  /// response.
  NashCheck is_nash(Profile s) const;

  /// Every equilibrium in lexicographic order.
  std::vector<Profile> enumerate_nash() const;

  BestResponseGraph best_response_graph() const;

  /// Alternating best-response dynamics, player 1 first. A player whose
  /// position is already a best response passes; otherwise she moves to
  /// her smallest best response. Stops at an equilibrium (two passes in a
  /// row), when a (profile, player to move) state repeats, or after
  /// `max_steps` turns. With `candidates`, both players are restricted to
  /// that set.
  DynamicsResult best_response_dynamics(Profile start, std::size_t max_steps,
                                        std::span<const Vertex> candidates = {}) const;

 private:
  void check_vertex(Vertex v) const;
  bool wins(Vertex owner, Vertex rival, Vertex v) const;

  DistanceMatrix d_;
  GameKind kind_;
};

}  // namespace tvoronoi
