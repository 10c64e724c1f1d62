#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "abmod/decomposition.hpp"
#include "abmod/graph_io.hpp"
#include "abmod/vertex_set.hpp"

namespace abmod {

using Json = nlohmann::ordered_json;

struct RunMeta {
  std::string command;
  AbParams params;
  std::string algorithm;
  std::string strategy;
  std::optional<std::uint64_t> seed;
  /// Only emitted when set, so that default output is byte-stable.
  std::optional<double> wall_ms;
};

/// Field order: schema, command, alpha, beta, algorithm, strategy, seed,
/// wall_ms, result. Absent optional fields are omitted.
Json envelope(const RunMeta& meta, Json result);

/// Ascending member names (labels when the document has them).
Json set_json(const VertexSet& s, const GraphDocument& doc);
/// Sets in the given order.
Json family_json(const std::vector<VertexSet>& sets, const GraphDocument& doc);

/// {"kind", "set", "children": [...]} nested from the root.
Json tree_json(const DecompositionTree& t, const GraphDocument& doc);
std::string tree_dot(const DecompositionTree& t, const GraphDocument& doc);

}  // namespace abmod
