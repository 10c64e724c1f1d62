#pragma once

#include <cstddef>
#include <vector>

#include "abmod/decomposition.hpp"

namespace abmod::detail {

bool strictly_linked(const Graph& g, const VertexSet& a, const VertexSet& b, AbParams p,
                     SplitKind kind);

std::size_t add_node(DecompositionTree& t, NodeKind kind, VertexSet set,
                     std::vector<std::size_t> children = {});

std::size_t small_node(const Graph& g, AbParams p, DecompositionTree& t, const VertexSet& s);

}  // namespace abmod::detail
