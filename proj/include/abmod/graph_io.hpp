#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abmod/bipartite.hpp"
#include "abmod/graph.hpp"
#include "abmod/vertex_set.hpp"

namespace abmod {

// Text edge-list format, one record per line:
//
//   c <anything>          comment
//   p <n> <m>             header, exactly once and before everything else
//   l <id> <name>         optional vertex label (names may not be all digits)
//   s <sides>             optional X side: either n characters of 0/1, or a
//                         list of vertices separated by spaces or commas
//   e <u> <v>             edge; endpoints are ids or labels
//   <u> <v>               edge, when u is not one of the record letters
//
// Blank lines are ignored. The number of edge lines must equal m.
struct GraphDocument {
  Graph graph;
  /// Empty, or one name per vertex (unlabelled vertices get their id).
  std::vector<std::string> labels;
  std::optional<VertexSet> x_side;

  std::string name_of(Vertex v) const;
  /// Resolves a label or a decimal id; throws InputError when unknown.
  Vertex resolve(std::string_view token) const;
};

/// Throws ParseError with line and column on malformed input.
GraphDocument parse_graph(std::string_view text);
GraphDocument read_graph_file(const std::string& path);

std::string serialize_graph(const GraphDocument& doc);
std::string serialize_graph(const Graph& g);

/// "a,b,c" or "0,1,2" (mixing allowed); the empty string is the empty set.
VertexSet parse_vertex_set(std::string_view text, const GraphDocument& doc);
/// Same syntax as the `s` line body.
VertexSet parse_side_spec(std::string_view text, const GraphDocument& doc);

/// "{a,b,c}" using labels when present.
std::string format_set(const VertexSet& s, const GraphDocument& doc);

/// Uses the document's side line, or two-colours the graph when absent.
BipartiteGraph to_bipartite(const GraphDocument& doc);

std::string read_text_file(const std::string& path);

}  // namespace abmod
