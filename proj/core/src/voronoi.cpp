#include "tvoronoi/voronoi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tvoronoi {

std::string to_string(GameKind kind) { return kind == GameKind::vor ? "vor" : "rvor"; }

std::optional<GameKind> parse_game_kind(const std::string& name) {
  if (name == "vor" || name == "Vor") return GameKind::vor;
  if (name == "rvor" || name == "rVor") return GameKind::rvor;
  return std::nullopt;
}

std::string to_string(DynamicsOutcome outcome) {
  switch (outcome) {
    case DynamicsOutcome::equilibrium: return "equilibrium";
    case DynamicsOutcome::cycle: return "cycle";
    case DynamicsOutcome::step_limit: return "step_limit";
  }
  return "unknown";
}

bool BestResponseGraph::has_arc(Player responder, Vertex from, Vertex to) const {
  const auto& v = responses(responder, from).vertices;
  return std::binary_search(v.begin(), v.end(), to);
}

std::vector<Vertex> DynamicsResult::cycle_positions() const {
  std::vector<Vertex> out;
  out.reserve(cycle.size());
  for (const auto& step : cycle) out.push_back(step.profile.position(step.mover));
  return out;
}

VoronoiGame::VoronoiGame(DistanceMatrix distances, GameKind kind)
    : d_(std::move(distances)), kind_(kind) {}

void VoronoiGame::check_vertex(Vertex v) const {
  if (v < 1 || v > vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in [1," +
                            std::to_string(vertex_count()) + "]");
  }
}

bool VoronoiGame::wins(Vertex owner, Vertex rival, Vertex v) const {
  if (kind_ == GameKind::vor) return d_.at(owner, v) < d_.at(rival, v);
  return d_.at(v, owner) < d_.at(v, rival);
}

PayoffResult VoronoiGame::payoff(Profile s) const {
  check_vertex(s.p1);
  check_vertex(s.p2);
  PayoffResult r;
  for (Vertex v = 1; v <= vertex_count(); ++v) {
    if (wins(s.p1, s.p2, v)) {
      r.won1.push_back(v);
    } else if (wins(s.p2, s.p1, v)) {
      r.won2.push_back(v);
    } else {
      r.unclaimed.push_back(v);
    }
  }
  return r;
}

std::size_t VoronoiGame::payoff_of(Player p, Profile s) const {
  const Vertex owner = s.position(p);
  const Vertex rival = s.position(other(p));
  std::size_t count = 0;
  for (Vertex v = 1; v <= vertex_count(); ++v) count += wins(owner, rival, v) ? 1 : 0;
  return count;
}

BestResponses VoronoiGame::best_responses(Player responder, Vertex fixed) const {
  std::vector<Vertex> all(vertex_count());
  std::iota(all.begin(), all.end(), Vertex{1});
  return best_responses(responder, fixed, all);
}

BestResponses VoronoiGame::best_responses(Player responder, Vertex fixed,
                                          std::span<const Vertex> candidates) const {
  check_vertex(fixed);
  if (candidates.empty()) throw std::invalid_argument("no candidate positions");
  BestResponses best;
  bool first = true;
  Profile s = Profile{fixed, fixed};
  for (Vertex v : candidates) {
    check_vertex(v);
    const std::size_t u = payoff_of(responder, s.with(responder, v));
    if (first || u > best.payoff) {
      best.payoff = u;
      best.vertices.assign(1, v);
      first = false;
    } else if (u == best.payoff) {
      best.vertices.push_back(v);
    }
  }
  std::sort(best.vertices.begin(), best.vertices.end());
  return best;
}

NashCheck VoronoiGame::is_nash(Profile s) const {
  check_vertex(s.p1);
  check_vertex(s.p2);
  for (Player p : {Player::first, Player::second}) {
    const std::size_t current = payoff_of(p, s);
    const auto best = best_responses(p, s.position(other(p)));
    if (best.payoff > current) {
      return {false, Deviation{p, best.vertices.front(), current, best.payoff}};
    }
  }
  return {true, std::nullopt};
}

std::vector<Profile> VoronoiGame::enumerate_nash() const {
  const std::size_t n = vertex_count();
  // u[(a-1)*n + (b-1)] = payoff of the player on a against the one on b;
  // the game is symmetric so one table serves both roles.
  std::vector<std::size_t> u(n * n);
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = 1; b <= n; ++b) u[(a - 1) * n + (b - 1)] = payoff_of(Player::first, {a, b});
  }
  std::vector<std::size_t> best_against(n, 0);
  for (Vertex b = 1; b <= n; ++b) {
    for (Vertex a = 1; a <= n; ++a) {
      best_against[b - 1] = std::max(best_against[b - 1], u[(a - 1) * n + (b - 1)]);
    }
  }
  std::vector<Profile> out;
  for (Vertex p1 = 1; p1 <= n; ++p1) {
    for (Vertex p2 = 1; p2 <= n; ++p2) {
      if (u[(p1 - 1) * n + (p2 - 1)] == best_against[p2 - 1] &&
          u[(p2 - 1) * n + (p1 - 1)] == best_against[p1 - 1]) {
        out.push_back({p1, p2});
      }
    }
  }
  return out;
}

BestResponseGraph VoronoiGame::best_response_graph() const {
  const std::size_t n = vertex_count();
  std::vector<BestResponses> first, second;
  first.reserve(n);
  second.reserve(n);
  for (Vertex v = 1; v <= n; ++v) {
    first.push_back(best_responses(Player::first, v));
    second.push_back(best_responses(Player::second, v));
  }
  return BestResponseGraph(n, std::move(first), std::move(second));
}

DynamicsResult VoronoiGame::best_response_dynamics(Profile start, std::size_t max_steps,
                                                   std::span<const Vertex> candidates) const {
  check_vertex(start.p1);
  check_vertex(start.p2);
  std::vector<Vertex> all;
  if (candidates.empty()) {
    all.resize(vertex_count());
    std::iota(all.begin(), all.end(), Vertex{1});
    candidates = all;
  }

  DynamicsResult result;
  Profile s = start;
  Player mover = Player::first;
  int passes = 0;
  // (profile, mover) -> trace length when that state was first seen.
  std::map<std::pair<Profile, int>, std::size_t> seen;

  for (std::size_t turn = 0; turn < max_steps; ++turn) {
    const auto key = std::pair{s, index(mover)};
    if (auto it = seen.find(key); it != seen.end()) {
      result.outcome = DynamicsOutcome::cycle;
      result.cycle.assign(result.trace.begin() + static_cast<std::ptrdiff_t>(it->second),
                          result.trace.end());
      result.final_profile = s;
      return result;
    }
    seen.emplace(key, result.trace.size());

    const std::size_t current = payoff_of(mover, s);
    const auto best = best_responses(mover, s.position(other(mover)), candidates);
    if (best.payoff > current) {
      s = s.with(mover, best.vertices.front());
      result.trace.push_back(
          {mover, s, payoff_of(Player::first, s), payoff_of(Player::second, s)});
      passes = 0;
    } else if (++passes == 2) {
      result.outcome = DynamicsOutcome::equilibrium;
      result.final_profile = s;
      return result;
    }
    mover = other(mover);
  }
  result.outcome = DynamicsOutcome::step_limit;
  result.final_profile = s;
  return result;
}

}  // namespace tvoronoi
