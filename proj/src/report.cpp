#include "abmod/report.hpp"

#include <sstream>

namespace abmod {

Json envelope(const RunMeta& meta, Json result) {
  Json j;
  j["schema"] = 1;
  j["command"] = meta.command;
  j["alpha"] = meta.params.alpha;
  j["beta"] = meta.params.beta;
  if (!meta.algorithm.empty()) j["algorithm"] = meta.algorithm;
  if (!meta.strategy.empty()) j["strategy"] = meta.strategy;
  if (meta.seed) j["seed"] = *meta.seed;
  if (meta.wall_ms) j["wall_ms"] = *meta.wall_ms;
  j["result"] = std::move(result);
  return j;
}

Json set_json(const VertexSet& s, const GraphDocument& doc) {
  Json arr = Json::array();
  s.for_each([&](Vertex v) {
    if (doc.labels.empty()) arr.push_back(v);
    else arr.push_back(doc.name_of(v));
  });
  return arr;
}

Json family_json(const std::vector<VertexSet>& sets, const GraphDocument& doc) {
  Json arr = Json::array();
  for (const auto& s : sets) arr.push_back(set_json(s, doc));
  return arr;
}

namespace {

Json node_json(const DecompositionTree& t, std::size_t id, const GraphDocument& doc) {
  const TreeNode& node = t.nodes[id];
  Json j;
  j["kind"] = std::string(to_string(node.kind));
  j["set"] = set_json(node.set, doc);
  Json kids = Json::array();
  for (std::size_t c : node.children) kids.push_back(node_json(t, c, doc));
  j["children"] = std::move(kids);
  return j;
}

void node_dot(const DecompositionTree& t, std::size_t id, const GraphDocument& doc,
              std::ostringstream& out, std::size_t& counter) {
  const std::size_t me = counter++;
  const TreeNode& node = t.nodes[id];
  out << "  n" << me << " [label=\"" << to_string(node.kind) << "\\n"
      << format_set(node.set, doc) << "\"";
  if (node.children.empty()) out << ", shape=box";
  out << "];\n";
  for (std::size_t c : node.children) {
    const std::size_t child = counter;
    node_dot(t, c, doc, out, counter);
    out << "  n" << me << " -> n" << child << ";\n";
  }
}

}  // namespace

Json tree_json(const DecompositionTree& t, const GraphDocument& doc) {
  return node_json(t, t.root, doc);
}

std::string tree_dot(const DecompositionTree& t, const GraphDocument& doc) {
  std::ostringstream out;
  out << "digraph decomposition {\n";
  std::size_t counter = 0;
  node_dot(t, t.root, doc, out, counter);
  out << "}\n";
  return out.str();
}

}  // namespace abmod
