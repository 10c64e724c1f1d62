#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "abmod/graph.hpp"
#include "abmod/graph_io.hpp"

namespace abmod {

/// Erdős–Rényi G(n, p); identical output for identical (n, p, seed) on every
/// platform. Throws InputError unless 0 <= p <= 1.
Graph gen_random(std::size_t n, double p, std::uint64_t seed);

/// Random bipartite graph with sides {0..nx-1} and {nx..nx+ny-1}.
BipartiteGraph gen_random_bipartite(std::size_t nx, std::size_t ny, double p, std::uint64_t seed);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The connected graphs on four vertices: P4, C4, K4, K1,3, paw, diamond.
std::vector<NamedGraph> pmg4_seeds();

/// Disjoint union of a and b (b shifted by |a|) plus edges i -- |a|+match[i].
Graph join_by_matching(const Graph& a, const Graph& b, const std::vector<Vertex>& match);

/// depth 0: a seed chosen by the generator; depth d: two independent depth
/// d-1 graphs joined by a uniformly random perfect matching.
Graph gen_pmg4(std::size_t depth, std::uint64_t seed, const std::vector<NamedGraph>& seeds = pmg4_seeds());

/// Small named graphs used by the tests, the docs and the CLI.
namespace fixtures {
GraphDocument fig1();    // 8 vertices a..h, prime at (0,0)
GraphDocument fig2();    // 7 vertices a..g, {d,e,f} only a (1,1)-module
GraphDocument fig3_h();  // 8 vertices a..h, two induced P4s joined almost completely
GraphDocument fig4();    // 8 vertices a,b,c,d,e,f,x,y with two different (1,1)-cotrees
GraphDocument cycle(std::size_t n);
GraphDocument path(std::size_t n);
GraphDocument complete(std::size_t n);
GraphDocument bull();
/// Looks up one of: fig1 fig2 fig3 fig4 c5 p4 p5 k4 bull.
GraphDocument by_name(const std::string& name);
std::vector<std::string> names();
}  // namespace fixtures

}  // namespace abmod
