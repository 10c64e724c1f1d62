#include "abmod/graph.hpp"

#include <algorithm>
#include <string>

#include "abmod/errors.hpp"

namespace abmod {

Graph::Graph(std::size_t n) : adjacency_(n), adj_bits_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (g.adj_bits_[u].contains(v))
      throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    g.adj_bits_[u].insert(v);
    g.adj_bits_[v].insert(u);
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2 - g.edge_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

VertexSet InducedSubgraph::lift(const VertexSet& local, std::size_t parent_order) const {
  VertexSet out(parent_order);
  local.for_each([&](Vertex v) { out.insert(to_parent[v]); });
  return out;
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw InputError("induced: set universe " + std::to_string(s.universe()) +
                     " does not match graph order " + std::to_string(g.order()));
  InducedSubgraph out;
  out.to_parent = s.members();
  std::vector<Vertex> local(g.order(), 0);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    local[out.to_parent[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : out.to_parent)
    for (Vertex v : g.neighbours(u))
      if (u < v && s.contains(v)) edges.emplace_back(local[u], local[v]);
  out.graph = Graph::from_edges(out.to_parent.size(), edges);
  return out;
}

VertexSet neighbourhood_of_set(const Graph& g, const VertexSet& s) {
  VertexSet out = g.empty_set();
  s.for_each([&](Vertex v) { out |= g.neighbour_set(v); });
  out -= s;
  return out;
}

VertexSet non_neighbourhood_of_set(const Graph& g, const VertexSet& s) {
  VertexSet out = s.complement();
  out -= neighbourhood_of_set(g, s);
  return out;
}

TwinKind twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw InputError("twins: u and v must differ");
  VertexSet nu = g.neighbour_set(u);
  VertexSet nv = g.neighbour_set(v);
  if (nu == nv) return TwinKind::false_twin;
  nu.insert(u);
  nv.insert(v);
  if (nu == nv) return TwinKind::true_twin;
  return TwinKind::neither;
}

}  // namespace abmod
