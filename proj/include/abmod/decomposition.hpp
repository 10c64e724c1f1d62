#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abmod/graph.hpp"
#include "abmod/params.hpp"
#include "abmod/vertex_set.hpp"

namespace abmod {

/// Result of a connectivity test between two disjoint sets.
struct Connectivity {
  /// The subset inclusions hold as written.
  bool holds = false;
  /// One of the sets has fewer than alpha+beta+1 vertices, where the
  /// definition does not apply.
  bool degenerate = false;

  /// holds and not degenerate.
  bool strict() const { return holds && !degenerate; }
};

/// a ⊆ N_alpha(b) and b ⊆ N_alpha(a). Throws on empty or overlapping sets.
Connectivity alpha_connected(const Graph& g, const VertexSet& a, const VertexSet& b, AbParams p);
/// a ⊆ N̄_beta(b) and b ⊆ N̄_beta(a).
Connectivity beta_non_connected(const Graph& g, const VertexSet& a, const VertexSet& b,
                                AbParams p);

inline bool is_alpha_connected(const Graph& g, const VertexSet& a, const VertexSet& b,
                               AbParams p) {
  return alpha_connected(g, a, b, p).holds;
}
inline bool is_beta_non_connected(const Graph& g, const VertexSet& a, const VertexSet& b,
                                  AbParams p) {
  return beta_non_connected(g, a, b, p).holds;
}

enum class PartitionLabel { alpha_series, beta_parallel, ab_prime, unclassified };

std::string_view to_string(PartitionLabel l);

struct ModularPartition {
  std::vector<VertexSet> parts;
  AbParams params;
  PartitionLabel label = PartitionLabel::unclassified;
};

/// Which of the two decompositions a partition satisfies. Pairs involving a
/// part smaller than alpha+beta+1 never count as connected.
struct PartitionFlags {
  bool series = false;
  bool parallel = false;
};

PartitionFlags partition_flags(const Graph& g, const std::vector<VertexSet>& parts, AbParams p);

/// Labels a modular partition of V. Throws InputError unless the parts are
/// disjoint non-empty modules covering V and there are at least two of them.
/// A partition without any part of size >= alpha+beta+1 is unclassified.
ModularPartition classify_partition(const Graph& g, std::vector<VertexSet> parts, AbParams p);

/// Same, for a partition of `region` inside G(region).
ModularPartition classify_partition_within(const Graph& g, const VertexSet& region,
                                           std::vector<VertexSet> parts, AbParams p);

enum class Strategy { exact, grow };

std::string_view to_string(Strategy s);

/// Exact: a maximum-cardinality non-trivial module (ties broken
/// lexicographically), SizeLimitError when n exceeds the oracle cap.
/// Grow: extends every minimal non-trivial module one vertex at a time via
/// closures; the result is a module that the procedure cannot extend.
std::optional<VertexSet> maximal_nontrivial_module(const Graph& g, AbParams p, Strategy s);

/// Non-trivial modules of G(region) that are contained in `inside`.
std::optional<VertexSet> maximal_nontrivial_module_within(const Graph& g, const VertexSet& region,
                                                          const VertexSet& inside, AbParams p,
                                                          Strategy s);

enum class NodeKind { alpha_series, beta_parallel, ab_prime, ab_degenerate };

std::string_view to_string(NodeKind k);

struct TreeNode {
  NodeKind kind = NodeKind::ab_degenerate;
  VertexSet set;
  std::vector<std::size_t> children;
};

struct DecompositionTree {
  std::vector<TreeNode> nodes;
  std::size_t root = 0;
  AbParams params;

  const TreeNode& root_node() const { return nodes[root]; }
  /// Index of the node whose set equals s, if any.
  std::optional<std::size_t> find(const VertexSet& s) const;
};

DecompositionTree decomposition_tree(const Graph& g, AbParams p, Strategy s = Strategy::exact);

struct TreeCheck {
  bool ok = true;
  std::string problem;
};

/// Structural invariants: root is V, children partition their parent, every
/// child is a module of G(parent), leaves are degenerate, and series /
/// parallel nodes have pairwise connected children.
TreeCheck check_tree(const Graph& g, const DecompositionTree& t);

/// Every union of parts is an (alpha,beta)-module. Throws SizeLimitError for
/// more than 20 parts.
bool brittle_decomposition_check(const Graph& g, const std::vector<VertexSet>& parts, AbParams p);

// --- cographs -------------------------------------------------------------

enum class SplitKind { series, parallel };

/// Two-part split {a, V \ a} of `region` into modules of G(region) with both
/// parts of size >= alpha+beta+1 and strictly connected (series) or strictly
/// non-connected (parallel). The part holding the smallest vertex comes first.
std::optional<std::pair<VertexSet, VertexSet>> find_two_part_split(const Graph& g,
                                                                   const VertexSet& region,
                                                                   AbParams p, SplitKind kind);

struct CographResult {
  bool is_cograph = false;
  /// Witness cotree when is_cograph; only series, parallel and degenerate
  /// nodes occur.
  DecompositionTree cotree;
};

/// Exhaustive search; SizeLimitError when n exceeds max_n.
CographResult is_ab_cograph(const Graph& g, AbParams p, std::size_t max_n = oracle_cap(12));

// --- matching cuts --------------------------------------------------------

struct MatchingCut {
  VertexSet side_a;
  VertexSet side_b;
  std::vector<Edge> cut_edges;
};

/// Some bipartition with both sides non-empty whose crossing edges form a
/// matching. SizeLimitError when n exceeds max_n.
std::optional<MatchingCut> matching_cut(const Graph& g, std::size_t max_n = 24);

/// Two-part (0,1)-parallel brittle decomposition found by direct search over
/// bipartitions: both parts are (0,1)-modules, all unions are modules, the
/// parts are (literally) 1-non-connected and one part has >= 2 vertices.
std::optional<std::pair<VertexSet, VertexSet>> two_part_parallel_brittle(const Graph& g,
                                                                         std::size_t max_n = 20);

}  // namespace abmod
