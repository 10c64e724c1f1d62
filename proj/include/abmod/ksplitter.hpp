#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abmod/graph.hpp"
#include "abmod/params.hpp"
#include "abmod/vertex_set.hpp"

namespace abmod {

struct KSplitterReport {
  /// Outside vertices with both a neighbour and a non-neighbour in m.
  VertexSet classical_splitters;
  std::size_t k = 0;
  bool is_k_module = false;
};

KSplitterReport k_splitter_report(const Graph& g, const VertexSet& m, std::size_t k);

struct KLawViolation {
  std::string law;
  VertexSet a;
  VertexSet b;
};

struct KLawReport {
  std::size_t modules = 0;
  std::size_t pairs_checked = 0;
  std::vector<KLawViolation> violations;
};

struct KLawOptions {
  /// 0 checks every pair of k-splitter modules; otherwise that many random
  /// pairs drawn with `seed`.
  std::size_t sample_pairs = 0;
  std::uint64_t seed = 1;
};

/// Checks, over pairs of k-splitter modules A, B: overlapping union and
/// intersection have at most 2k splitters, A \ B has at most k + |A ∩ B|,
/// the report is unchanged on the complement graph, and every splitter of A
/// still splits each superset avoiding it. SizeLimitError when n > max_n.
KLawReport k_splitter_laws_check(const Graph& g, std::size_t k, std::size_t max_n = oracle_cap(10),
                                 KLawOptions opts = {});

/// Inclusion-minimal k-splitter modules containing a, by exhaustive search.
std::vector<VertexSet> minimal_k_splitter_supersets(const Graph& g, const VertexSet& a,
                                                    std::size_t k,
                                                    std::size_t max_n = oracle_cap(16));

}  // namespace abmod
