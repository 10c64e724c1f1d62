#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "abmod/graph.hpp"
#include "abmod/params.hpp"
#include "abmod/vertex_set.hpp"

namespace abmod {

enum class FamilyKind { minimal_nontrivial, covering, all_modules_oracle };

std::string_view to_string(FamilyKind k);

struct ModuleFamily {
  /// Deduplicated, sorted lexicographically by member list.
  std::vector<VertexSet> members;
  AbParams params;
  FamilyKind kind = FamilyKind::minimal_nontrivial;
};

enum class EnumerationDriver {
  /// Shares neighbourhood counts between all tuples with a common prefix.
  batched,
  /// One closure per (alpha+beta+2)-subset.
  per_tuple,
};

struct EnumerationOptions {
  EnumerationDriver driver = EnumerationDriver::batched;
  unsigned jobs = 1;
};

/// Inclusion-minimal non-trivial (alpha,beta)-modules, computed as closures
/// of all (alpha+beta+2)-subsets. Requires n >= alpha+beta+3.
ModuleFamily minimal_nontrivial_modules(const Graph& g, AbParams p, EnumerationOptions opts = {});

/// Every subset that is an (alpha,beta)-module, the empty set included.
/// Throws SizeLimitError when n > max_n.
ModuleFamily all_modules_oracle(const Graph& g, AbParams p, std::size_t max_n = oracle_cap());

/// Minimal non-trivial modules plus a singleton for every uncovered vertex.
ModuleFamily covering(const Graph& g, AbParams p, EnumerationOptions opts = {});

struct PrimeResult {
  bool prime = false;
  /// n <= alpha+beta+2: every module is trivial for size reasons alone.
  bool degenerate = false;
};

PrimeResult is_prime(const Graph& g, AbParams p, EnumerationOptions opts = {});

enum class Verdict { yes, no, undetermined };

std::string_view to_string(Verdict v);

enum class BrittleMode { exact, fast };

/// Exact mode checks every subset and throws SizeLimitError when n > max_n.
/// Fast mode only applies the degree criteria and may answer undetermined.
Verdict is_brittle(const Graph& g, AbParams p, BrittleMode mode = BrittleMode::exact,
                   std::size_t max_n = oracle_cap());

/// Keeps the inclusion-minimal members; input order is irrelevant, output is
/// sorted lexicographically.
std::vector<VertexSet> inclusion_minimal(std::vector<VertexSet> sets);
std::vector<VertexSet> inclusion_maximal(std::vector<VertexSet> sets);

/// Sorts lexicographically and removes duplicates.
void canonicalize(std::vector<VertexSet>& sets);

}  // namespace abmod
