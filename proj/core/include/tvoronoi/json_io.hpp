#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tvoronoi/explorer.hpp"
#include "tvoronoi/graph_classes.hpp"
#include "tvoronoi/reachability.hpp"
#include "tvoronoi/temporal_graph.hpp"
#include "tvoronoi/voronoi.hpp"

namespace tvoronoi {

using Json = nlohmann::ordered_json;

/// Input that is not well-formed JSON or does not have the graph shape.
class GraphParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": int, "layers": [[[a,b], ...], ...]} with a < b, edges sorted
/// within each layer and layers in time order.
Json to_json(const TemporalGraph& g);

/// Accepts any edge orientation or order; does not validate ranges.
TemporalGraph graph_from_json(const nlohmann::json& j);
TemporalGraph parse_graph(const std::string& text);

/// Compact canonical serialization, stable byte for byte.
std::string canonical_string(const TemporalGraph& g);

/// n x n array, unreachable entries encoded as "inf".
Json to_json(const DistanceMatrix& d);
Json to_json(std::span<const Time> arrivals);

Json to_json(const Profile& s);
Json to_json(const std::vector<Profile>& profiles);
Json to_json(const PayoffResult& r);
Json to_json(const BestResponses& r);
Json to_json(const NashCheck& c);
Json to_json(const BestResponseGraph& g);
Json to_json(const DynamicsStep& step);
Json to_json(const DynamicsResult& r);
Json to_json(const ClassReport& r);
Json to_json(const FamilySpec& spec);
Json to_json(const InstanceRecord& r);
Json to_json(const SearchSummary& s);

}  // namespace tvoronoi
