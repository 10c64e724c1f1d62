#pragma once

#include <cstddef>
#include <vector>

#include "abmod/graph.hpp"
#include "abmod/params.hpp"
#include "abmod/vertex_set.hpp"

namespace abmod {

/// Outside vertices x with |N(x) ∩ a| >= |a| - alpha. Throws on empty a.
VertexSet alpha_neighbourhood(const Graph& g, const VertexSet& a, AbParams p);
/// Outside vertices x with |N(x) ∩ a| <= beta. Throws on empty a.
VertexSet beta_non_neighbourhood(const Graph& g, const VertexSet& a, AbParams p);

struct SplitterReport {
  VertexSet n_alpha;
  VertexSet n_bar_beta;
  VertexSet splitters;
  /// counts[x] = |N(x) ∩ a| for x outside a; zero for members.
  std::vector<std::size_t> counts;
};

SplitterReport splitter_set(const Graph& g, const VertexSet& a, AbParams p);

/// Splitters of m: outside z with beta < |N(z) ∩ m| < |m| - alpha.
VertexSet splitters(const Graph& g, const VertexSet& m, AbParams p);

bool is_ab_module(const Graph& g, const VertexSet& m, AbParams p);

/// Module test inside G(within): only vertices of within \ m can split m.
bool is_ab_module_within(const Graph& g, const VertexSet& m, const VertexSet& within, AbParams p);

/// m == V or |m| <= alpha + beta + 1.
bool is_trivial_module(const VertexSet& m, AbParams p, std::size_t n);

struct Tally {
  std::size_t edges = 0;
  std::size_t non_edges = 0;
};

struct ClosureTrace {
  /// Strictly increasing chain from the input set to the result.
  std::vector<VertexSet> stages;
  VertexSet result;
  /// Order in which vertices were closed (graph-search closure only).
  std::vector<Vertex> visited_order;
  /// Edge/non-edge counts into the result for vertices outside it.
  std::vector<Tally> tallies;
  /// Input had fewer than alpha+beta+2 vertices and was returned unchanged.
  bool below_threshold = false;
  /// Parts created by partition refinement (graph-search closure only).
  std::size_t refinement_splits = 0;
};

/// Repeatedly adds the whole splitter set until none remains.
ClosureTrace closure_naive(const Graph& g, const VertexSet& a, AbParams p);

/// Graph-search closure with partition refinement of the unclosed outside
/// vertices; O(n + m) per call. Produces the same result as closure_naive.
ClosureTrace closure_refined(const Graph& g, const VertexSet& a, AbParams p);

/// Reusable workspace for repeated closures on one graph.
class ClosureEngine {
 public:
  explicit ClosureEngine(const Graph& g);

  VertexSet closure(const VertexSet& a, AbParams p) { return run(a, p, nullptr); }
  ClosureTrace trace(const VertexSet& a, AbParams p);

  const Graph& graph() const { return *graph_; }

 private:
  struct Part {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t edges = 0;
    std::size_t marked = 0;
    std::size_t wake_at = 0;
    bool alive = true;
  };

  enum class State : unsigned char { waiting, open, closed };

  VertexSet run(const VertexSet& a, AbParams p, ClosureTrace* trace);
  void check_part(std::size_t id, std::size_t closed_count, AbParams p);
  void flip(std::size_t id);

  const Graph* graph_;
  std::vector<State> state_;
  std::vector<Vertex> elems_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> part_of_;
  std::vector<Part> parts_;
  std::vector<std::vector<std::size_t>> wake_;
  std::vector<std::size_t> touched_;
  std::vector<Vertex> open_;
  std::vector<Vertex> batch_;
  std::size_t splits_ = 0;
};

}  // namespace abmod
