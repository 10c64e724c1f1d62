#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "abmod/graph.hpp"
#include "abmod/params.hpp"
#include "abmod/vertex_set.hpp"

namespace abmod {

class BipartiteGraph {
 public:
  /// Throws InputError if some edge has both endpoints on the same side.
  BipartiteGraph(Graph g, VertexSet x_side);

  /// Two-colours a connected graph with vertex 0 on the X side. Throws
  /// InputError on disconnected or non-bipartite input.
  static BipartiteGraph auto_sides(Graph g);

  const Graph& graph() const { return graph_; }
  const VertexSet& x_side() const { return x_; }
  const VertexSet& y_side() const { return y_; }

 private:
  Graph graph_;
  VertexSet x_;
  VertexSet y_;
};

struct TwinClassification {
  AbParams params;
  /// All (alpha+beta+1)-subsets of X in lexicographic order.
  std::vector<VertexSet> tuples;
  /// rows[t] = {y in Y : y ∈ N_alpha(tuples[t])}; its complement in Y is
  /// N̄_beta(tuples[t]).
  std::vector<VertexSet> rows;
  /// Y in ascending order; lambda[t][i] refers to ys[i].
  std::vector<Vertex> ys;
  /// Non-neighbours of ys[i] in the tuple when the tuple is alpha-adjacent,
  /// neighbours otherwise.
  std::vector<std::vector<VertexSet>> lambda;
  /// Tuples grouped by identical rows, groups ordered by their first tuple.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
};

/// Requires |X| >= alpha+beta+1.
TwinClassification twin_classify(const BipartiteGraph& bg, AbParams p);

/// |a| = |b| = alpha+beta+1, a != b. Conditions: a ∪ b is a module, every
/// vertex of a \ b lies in N̄_beta(b) and every vertex of b \ a in N̄_beta(a).
bool is_false_ab_twin(const Graph& g, const VertexSet& a, const VertexSet& b, AbParams p);

/// Module test for m ⊆ X (InputError otherwise).
bool one_sided_module_check(const BipartiteGraph& bg, const VertexSet& m, AbParams p);

/// The same question answered through twin classes: every (alpha+beta+1)-
/// subset of m lies in one class.
bool union_of_twin_sets(const TwinClassification& tc, const VertexSet& m);

struct OneSidedFamily {
  std::vector<VertexSet> maximal_members;
  AbParams params;
};

/// Inclusion-maximal (alpha,beta)-modules contained in X.
OneSidedFamily maximal_one_sided_modules(const BipartiteGraph& bg, AbParams p);

struct ClosureViolation {
  std::string law;
  VertexSet a;
  VertexSet b;
};

struct OneSidedClosureReport {
  std::size_t family_size = 0;
  std::size_t pairs_checked = 0;
  std::vector<ClosureViolation> violations;
};

/// Exhaustively checks that the modules inside X are closed under
/// intersection and both differences. SizeLimitError when |X| > max_x.
OneSidedClosureReport one_sided_family_closure_props(const BipartiteGraph& bg, AbParams p,
                                                     std::size_t max_x = oracle_cap(12));

}  // namespace abmod
