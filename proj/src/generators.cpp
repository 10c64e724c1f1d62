#include "abmod/generators.hpp"

#include <random>
#include <string_view>
#include <utility>

#include "abmod/errors.hpp"

namespace abmod {

namespace {

// 53 random mantissa bits; avoids the implementation-defined algorithms of
// the standard distributions so samples match across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

GraphDocument labelled(std::string_view names, std::initializer_list<std::string_view> edges) {
  GraphDocument doc;
  for (char c : names) doc.labels.emplace_back(1, c);
  std::vector<Edge> list;
  for (std::string_view e : edges)
    list.emplace_back(static_cast<Vertex>(names.find(e[0])), static_cast<Vertex>(names.find(e[1])));
  doc.graph = Graph::from_edges(names.size(), list);
  return doc;
}

GraphDocument unlabelled(Graph g) {
  GraphDocument doc;
  doc.graph = std::move(g);
  return doc;
}

}  // namespace

Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit(rng) < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

BipartiteGraph gen_random_bipartite(std::size_t nx, std::size_t ny, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex x = 0; x < nx; ++x)
    for (Vertex y = 0; y < ny; ++y)
      if (unit(rng) < p) edges.emplace_back(x, static_cast<Vertex>(nx + y));
  VertexSet xs(nx + ny);
  for (Vertex x = 0; x < nx; ++x) xs.insert(x);
  return BipartiteGraph(Graph::from_edges(nx + ny, edges), std::move(xs));
}

std::vector<NamedGraph> pmg4_seeds() {
  return {
      {"P4", Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})},
      {"C4", Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})},
      {"K4", Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
      {"K1,3", Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})},
      {"paw", Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})},
      {"diamond", Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})},
  };
}

Graph join_by_matching(const Graph& a, const Graph& b, const std::vector<Vertex>& match) {
  const std::size_t na = a.order();
  if (match.size() != na || b.order() != na)
    throw InputError("join_by_matching: both graphs and the matching need the same order");
  std::vector<Edge> edges = a.edges();
  for (const auto& [u, v] : b.edges())
    edges.emplace_back(static_cast<Vertex>(u + na), static_cast<Vertex>(v + na));
  std::vector<char> used(na, 0);
  for (Vertex i = 0; i < na; ++i) {
    if (match[i] >= na || used[match[i]]) throw InputError("join_by_matching: not a permutation");
    used[match[i]] = 1;
    edges.emplace_back(i, static_cast<Vertex>(na + match[i]));
  }
  return Graph::from_edges(2 * na, edges);
}

namespace {

Graph pmg4_step(std::size_t depth, std::mt19937_64& rng, const std::vector<NamedGraph>& seeds) {
  if (depth == 0) return seeds[below(rng, seeds.size())].graph;
  Graph a = pmg4_step(depth - 1, rng, seeds);
  Graph b = pmg4_step(depth - 1, rng, seeds);
  std::vector<Vertex> match(a.order());
  for (Vertex i = 0; i < match.size(); ++i) match[i] = i;
  for (std::size_t i = match.size(); i > 1; --i) std::swap(match[i - 1], match[below(rng, i)]);
  return join_by_matching(a, b, match);
}

}  // namespace

Graph gen_pmg4(std::size_t depth, std::uint64_t seed, const std::vector<NamedGraph>& seeds) {
  if (seeds.empty()) throw InputError("gen_pmg4: empty seed list");
  for (const auto& s : seeds)
    if (s.graph.order() != seeds.front().graph.order())
      throw InputError("gen_pmg4: seeds must share one order");
  if (depth > 16) throw SizeLimitError("gen_pmg4: depth above 16");
  std::mt19937_64 rng(seed);
  return pmg4_step(depth, rng, seeds);
}

namespace fixtures {

GraphDocument fig1() {
  return labelled("abcdefgh", {"ab", "ac", "ad", "bc", "cd", "eb", "ec", "ed", "ef", "eg", "fh", "gh"});
}

GraphDocument fig2() {
  return labelled("abcdefg", {"ab", "bc", "da", "db", "ea", "eb", "ec", "eg", "fa", "fb", "fc"});
}

GraphDocument fig3_h() {
  return labelled("abcdefgh", {"ab", "bc", "ae", "cd", "ef", "fg", "gh", "be", "bf", "ag",
                               "bh", "ce", "af", "ch", "cg", "de", "df", "dh", "dg"});
}

GraphDocument fig4() {
  return labelled("abcdefxy",
                  {"ab", "fx", "ye", "cd", "bc", "xy", "fe", "af", "bx", "yc", "ed"});
}

GraphDocument cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  GraphDocument doc = unlabelled(Graph::from_edges(n, edges));
  if (n <= 26)
    for (std::size_t i = 0; i < n; ++i) doc.labels.emplace_back(1, static_cast<char>('a' + i));
  return doc;
}

GraphDocument path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  GraphDocument doc = unlabelled(Graph::from_edges(n, edges));
  if (n <= 26)
    for (std::size_t i = 0; i < n; ++i) doc.labels.emplace_back(1, static_cast<char>('a' + i));
  return doc;
}

GraphDocument complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return unlabelled(Graph::from_edges(n, edges));
}

GraphDocument bull() { return labelled("abcde", {"ab", "bc", "ca", "ad", "be"}); }

std::vector<std::string> names() { return {"fig1", "fig2", "fig3", "fig4", "c5", "p4", "p5", "k4", "bull"}; }

GraphDocument by_name(const std::string& name) {
  if (name == "fig1") return fig1();
  if (name == "fig2") return fig2();
  if (name == "fig3") return fig3_h();
  if (name == "fig4") return fig4();
  if (name == "c5") return cycle(5);
  if (name == "p4") return path(4);
  if (name == "p5") return path(5);
  if (name == "k4") return complete(4);
  if (name == "bull") return bull();
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace fixtures

}  // namespace abmod
