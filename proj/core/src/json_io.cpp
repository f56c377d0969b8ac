#include "tvoronoi/json_io.hpp"

#include <limits>

namespace tvoronoi {
namespace {

Json time_to_json(Time t) { return is_finite(t) ? Json(t) : Json("inf"); }

Json vertices(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

Vertex parse_vertex(const nlohmann::json& j) {
  if (!j.is_number_integer()) throw GraphParseError("edge endpoint is not an integer");
  const auto value = j.get<std::int64_t>();
  if (value < 0 || value > std::numeric_limits<Vertex>::max()) {
    throw GraphParseError("edge endpoint " + std::to_string(value) + " is not representable");
  }
  return static_cast<Vertex>(value);
}

}  // namespace

Json to_json(const TemporalGraph& g) {
  Json layers = Json::array();
  for (const auto& layer : g.layers()) {
    Json edges = Json::array();
    for (const Edge& e : layer) edges.push_back(Json::array({e.a, e.b}));
    layers.push_back(std::move(edges));
  }
  Json out;
  out["n"] = g.vertex_count();
  out["layers"] = std::move(layers);
  return out;
}

TemporalGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw GraphParseError("graph must be a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw GraphParseError("field \"n\" must be an integer");
  }
  const auto n = j.at("n").get<std::int64_t>();
  if (n < 0) throw GraphParseError("field \"n\" must be non-negative");
  if (!j.contains("layers") || !j.at("layers").is_array()) {
    throw GraphParseError("field \"layers\" must be an array");
  }
  std::vector<EdgeSet> layers;
  for (const auto& layer : j.at("layers")) {
    if (!layer.is_array()) throw GraphParseError("each layer must be an array of edges");
    EdgeSet edges;
    for (const auto& edge : layer) {
      if (!edge.is_array() || edge.size() != 2) {
        throw GraphParseError("each edge must be a two-element array");
      }
      edges.push_back({parse_vertex(edge[0]), parse_vertex(edge[1])});
    }
    layers.push_back(std::move(edges));
  }
  return TemporalGraph(static_cast<std::size_t>(n), std::move(layers));
}

TemporalGraph parse_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphParseError(e.what());
  }
  return graph_from_json(j);
}

std::string canonical_string(const TemporalGraph& g) { return to_json(g).dump(); }

Json to_json(const DistanceMatrix& d) {
  Json out = Json::array();
  for (Vertex u = 1; u <= d.vertex_count(); ++u) out.push_back(to_json(d.row(u)));
  return out;
}

Json to_json(std::span<const Time> arrivals) {
  Json out = Json::array();
  for (Time t : arrivals) out.push_back(time_to_json(t));
  return out;
}

Json to_json(const Profile& s) { return Json::array({s.p1, s.p2}); }

Json to_json(const std::vector<Profile>& profiles) {
  Json out = Json::array();
  for (const auto& s : profiles) out.push_back(to_json(s));
  return out;
}

Json to_json(const PayoffResult& r) {
  Json out;
  out["u1"] = r.u1();
  out["u2"] = r.u2();
  out["U1"] = vertices(r.won1);
  out["U2"] = vertices(r.won2);
  out["unclaimed"] = vertices(r.unclaimed);
  return out;
}

Json to_json(const BestResponses& r) {
  Json out;
  out["responses"] = vertices(r.vertices);
  out["payoff"] = r.payoff;
  return out;
}

Json to_json(const NashCheck& c) {
  Json out;
  out["is_nash"] = c.is_nash;
  if (c.deviation) {
    Json dev;
    dev["player"] = index(c.deviation->player);
    dev["to"] = c.deviation->to;
    dev["old_payoff"] = c.deviation->old_payoff;
    dev["new_payoff"] = c.deviation->new_payoff;
    out["deviation"] = std::move(dev);
  }
  return out;
}

Json to_json(const BestResponseGraph& g) {
  Json out = Json::array();
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    Json row;
    row["opponent"] = v;
    row["player1"] = to_json(g.responses(Player::first, v));
    row["player2"] = to_json(g.responses(Player::second, v));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const DynamicsStep& step) {
  Json out;
  out["mover"] = index(step.mover);
  out["profile"] = to_json(step.profile);
  out["payoffs"] = Json::array({step.u1, step.u2});
  return out;
}

Json to_json(const DynamicsResult& r) {
  Json out;
  out["outcome"] = to_string(r.outcome);
  out["final_profile"] = to_json(r.final_profile);
  Json trace = Json::array();
  for (const auto& step : r.trace) trace.push_back(to_json(step));
  out["trace"] = std::move(trace);
  if (r.outcome == DynamicsOutcome::cycle) {
    Json cycle = Json::array();
    for (const auto& step : r.cycle) cycle.push_back(to_json(step));
    out["cycle"] = std::move(cycle);
    out["cycle_positions"] = vertices(r.cycle_positions());
  }
  return out;
}

Json to_json(const ClassReport& r) {
  Json out;
  out["temporally_connected"] = r.temporally_connected;
  out["monotone_growing"] = r.monotone_growing;
  out["monotone_shrinking"] = r.monotone_shrinking;
  Json labels = Json::array();
  for (const auto& label : r.underlying_class) labels.push_back(to_string(label));
  out["underlying_class"] = std::move(labels);
  return out;
}

Json to_json(const FamilySpec& spec) {
  Json out;
  out["class"] = to_string(spec.base_class);
  out["n"] = Json::array({spec.n_min, spec.n_max});
  out["tau"] = Json::array({spec.tau_min, spec.tau_max});
  out["monotonicity"] = to_string(spec.monotonicity);
  out["max_edge_changes"] = spec.max_edge_changes ? Json(*spec.max_edge_changes) : Json(nullptr);
  return out;
}

Json to_json(const InstanceRecord& r) {
  Json out;
  out["index"] = r.index;
  out["graph"] = to_json(r.graph);
  out["classes"] = to_json(r.classes);
  out["edge_changes"] = r.edge_changes;
  out["change_times"] = r.change_times;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    Json entry;
    entry["game"] = to_string(v.kind);
    entry["has_ne"] = v.has_equilibrium;
    entry["ne_count"] = v.equilibrium_count;
    if (v.witness) entry["witness"] = to_json(*v.witness);
    if (!v.has_equilibrium) {
      Json cycle = Json::array();
      for (const auto& step : v.certificate) cycle.push_back(to_json(step));
      entry["certificate"] = std::move(cycle);
    }
    verdicts.push_back(std::move(entry));
  }
  out["verdicts"] = std::move(verdicts);
  return out;
}

Json to_json(const SearchSummary& s) {
  Json out;
  out["spec"] = to_json(s.spec);
  out["instances"] = s.instances;
  Json by_time;
  for (const auto& [sig, count] : s.instances_by_change_times) by_time[sig] = count;
  out["instances_by_change_times"] = std::move(by_time);
  Json games = Json::array();
  for (const auto& g : s.games) {
    Json entry;
    entry["game"] = to_string(g.kind);
    entry["with_ne"] = g.with_equilibrium;
    entry["without_ne"] = g.without_equilibrium;
    Json by_sig = Json::object();
    for (const auto& [sig, count] : g.without_by_change_times) by_sig[sig] = count;
    entry["without_ne_by_change_times"] = std::move(by_sig);
    Json by_n = Json::object();
    for (const auto& [n, count] : g.without_by_n) by_n[std::to_string(n)] = count;
    entry["without_ne_by_n"] = std::move(by_n);
    if (g.minimal_counterexample) {
      Json ce;
      ce["index"] = g.minimal_counterexample->index;
      ce["graph"] = to_json(g.minimal_counterexample->graph);
      entry["minimal_counterexample"] = std::move(ce);
    } else {
      entry["minimal_counterexample"] = nullptr;
    }
    games.push_back(std::move(entry));
  }
  out["games"] = std::move(games);
  return out;
}

}  // namespace tvoronoi
