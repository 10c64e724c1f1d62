#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "abmod/vertex_set.hpp"

namespace abmod {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept
/// both as sorted neighbour lists and as per-vertex bitsets.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws InputError on loops, duplicate edges and out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adj_bits_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  const VertexSet& neighbour_set(Vertex v) const { return adj_bits_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_bits_[u].contains(v); }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges {u,v} with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> adj_bits_;
  std::size_t edge_count_ = 0;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the parent-graph id of vertex i.
  std::vector<Vertex> to_parent;

  /// Maps a set of the subgraph back to the parent universe.
  VertexSet lift(const VertexSet& local, std::size_t parent_order) const;
};

/// Subgraph induced by s, relabelled by ascending parent id.
InducedSubgraph induced(const Graph& g, const VertexSet& s);

/// Outside vertices with at least one neighbour in s.
VertexSet neighbourhood_of_set(const Graph& g, const VertexSet& s);
/// Outside vertices with no neighbour in s.
VertexSet non_neighbourhood_of_set(const Graph& g, const VertexSet& s);

enum class TwinKind { false_twin, true_twin, neither };

TwinKind twins(const Graph& g, Vertex u, Vertex v);

}  // namespace abmod
