#include <gtest/gtest.h>

#include <random>

#include "abmod/abmodule.hpp"
#include "abmod/decomposition.hpp"
#include "abmod/errors.hpp"
#include "abmod/generators.hpp"
#include "abmod/graph_io.hpp"
#include "oracles.hpp"

using namespace abmod;
using oracle::Mask;

namespace {

VertexSet S(const GraphDocument& doc, const char* text) { return parse_vertex_set(text, doc); }

std::vector<VertexSet> sets(const GraphDocument& doc, std::initializer_list<const char*> specs) {
  std::vector<VertexSet> out;
  for (const char* s : specs) out.push_back(S(doc, s));
  return out;
}

// Complete join of two triangles on {0,1,2} and {3,4,5}.
Graph join_of_triangles() {
  std::vector<Edge> e;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) e.emplace_back(u, v);
  return Graph::from_edges(6, e);
}

std::vector<VertexSet> random_partition(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<VertexSet> parts(k, VertexSet(n));
  for (Vertex v = 0; v < n; ++v) parts[v < k ? v : rng() % k].insert(v);
  return parts;
}

}  // namespace

TEST(Connectivity, Examples) {
  const Graph j = join_of_triangles();
  const VertexSet a(6, {0, 1, 2}), b(6, {3, 4, 5});
  EXPECT_TRUE(is_alpha_connected(j, a, b, {1, 1}));
  EXPECT_FALSE(is_beta_non_connected(j, a, b, {1, 1}));

  const Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  for (std::size_t beta = 0; beta < 3; ++beta) EXPECT_TRUE(is_beta_non_connected(two, a, b, {0, beta}));

  const auto h = fixtures::fig3_h();
  const auto c = alpha_connected(h.graph, S(h, "a,b,c,d"), S(h, "e,f,g,h"), {1, 0});
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(c.degenerate);
  EXPECT_TRUE(c.strict());

  EXPECT_THROW(alpha_connected(j, a, VertexSet(6, {2, 3}), {1, 1}), InputError);
  EXPECT_THROW(beta_non_connected(j, a, VertexSet(6), {1, 1}), InputError);
}

TEST(Connectivity, SmallSetsAreFlagged) {
  const Graph j = join_of_triangles();
  const auto c = alpha_connected(j, VertexSet(6, {0}), VertexSet(6, {3, 4, 5}), {1, 1});
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(c.degenerate);
  EXPECT_FALSE(c.strict());
}

TEST(Partition, Examples) {
  const auto h = fixtures::fig3_h();
  EXPECT_EQ(classify_partition(h.graph, sets(h, {"a,b,c,d", "e,f,g,h"}), {1, 0}).label,
            PartitionLabel::alpha_series);

  const Graph cliques = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  EXPECT_EQ(classify_partition(cliques, {VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5})}, {0, 0})
                .label,
            PartitionLabel::beta_parallel);

  const auto f1 = fixtures::fig1();
  EXPECT_EQ(classify_partition(f1.graph, sets(f1, {"a", "b,c,d", "e", "f,g", "h"}), {0, 0}).label,
            PartitionLabel::ab_prime);
}

TEST(Partition, RejectsInvalidPartitions) {
  const auto f1 = fixtures::fig1();
  EXPECT_THROW(classify_partition(f1.graph, sets(f1, {"a,b,c,d,e,f,g,h"}), {0, 0}), InputError);
  EXPECT_THROW(classify_partition(f1.graph, sets(f1, {"a,b", "c,d,e,f,g,h"}), {0, 0}), InputError);
  EXPECT_THROW(classify_partition(f1.graph, sets(f1, {"a", "b,c,d", "e", "f,g"}), {0, 0}), InputError);
  EXPECT_THROW(classify_partition(f1.graph, sets(f1, {"a,b", "b,c,d", "e", "f,g", "h"}), {0, 0}),
               InputError);
}

TEST(Partition, ComplementSwapsSeriesAndParallel) {
  std::mt19937_64 rng(31);
  std::size_t labelled = 0;
  for (int rep = 0; rep < 600; ++rep) {
    const std::size_t n = 8;
    const Graph g = gen_random(n, (rep % 3 == 0) ? 0.85 : (rep % 3 == 1 ? 0.15 : 0.5), rng());
    const AbParams p{rng() % 2, rng() % 2};
    const auto parts = random_partition(rng, n, 2 + rng() % 2);
    const PartitionFlags f = partition_flags(g, parts, p);
    const PartitionFlags fc = partition_flags(complement(g), parts, p.swapped());
    EXPECT_EQ(f.series, fc.parallel);
    EXPECT_EQ(f.parallel, fc.series);
    // the three labels exclude each other on one partition
    EXPECT_FALSE(f.series && f.parallel);
    if (f.series || f.parallel) ++labelled;
  }
  EXPECT_GT(labelled, 0u);
}

// Large disjoint modules: every vertex of B dense into A and every vertex of
// A sparse into B is impossible.
TEST(Exclusivity, DenseAndSparseAttachment) {
  std::mt19937_64 rng(32);
  std::size_t pairs = 0;
  for (int rep = 0; rep < 600; ++rep) {
    const int n = 9;
    const Graph g = gen_random(n, 0.2 + 0.3 * (rep % 3), rng());
    const AbParams p{rng() % 2, rng() % 2};
    const auto og = oracle::from_graph(g);
    std::vector<Mask> big;
    for (Mask m : oracle::all_modules(og, static_cast<int>(p.alpha), static_cast<int>(p.beta)))
      if (oracle::pc(m) >= static_cast<int>(p.trivial_bound())) big.push_back(m);
    for (int k = 0; k < 20 && big.size() > 1; ++k) {
      const Mask a = big[rng() % big.size()], b = big[rng() % big.size()];
      if (a & b) continue;
      ++pairs;
      const auto sa = oracle::set_of(n, a), sb = oracle::set_of(n, b);
      const bool dense = sb.is_subset_of(alpha_neighbourhood(g, sa, p));
      const bool sparse = sa.is_subset_of(beta_non_neighbourhood(g, sb, p));
      EXPECT_FALSE(dense && sparse);
    }
  }
  EXPECT_GT(pairs, 100u);
}

// With a one-vertex side the exclusivity above fails: b sees all of A.
TEST(Exclusivity, OneSidedVersionNeedsLargeSets) {
  const Graph g = Graph::from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
  const VertexSet a(4, {0, 1, 2}), b(4, {3});
  const AbParams p{1, 1};
  EXPECT_TRUE(b.is_subset_of(alpha_neighbourhood(g, a, p)));
  EXPECT_TRUE(a.is_subset_of(beta_non_neighbourhood(g, b, p)));
}

TEST(Exclusivity, TwoPartSeriesAndParallelNeverBoth) {
  std::mt19937_64 rng(33);
  std::size_t found = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const AbParams p{rng() % 2, rng() % 2};
    const std::size_t n = std::max<std::size_t>(4 * p.total() + 1, 6) + rng() % 3;
    const Graph g = gen_random(n, 0.1 + 0.2 * (rep % 5), rng());
    const auto s = find_two_part_split(g, g.vertices(), p, SplitKind::series);
    const auto q = find_two_part_split(g, g.vertices(), p, SplitKind::parallel);
    EXPECT_FALSE(s && q) << p.to_string();
    if (s || q) ++found;
  }
  EXPECT_GT(found, 50u);
}

TEST(MaximalModule, Examples) {
  EXPECT_FALSE(maximal_nontrivial_module(fixtures::cycle(5).graph, {1, 1}, Strategy::exact));
  const auto f1 = fixtures::fig1();
  EXPECT_EQ(maximal_nontrivial_module(f1.graph, {0, 0}, Strategy::exact), S(f1, "b,c,d"));
  const auto f2 = fixtures::fig2();
  const auto m = maximal_nontrivial_module(f2.graph, {1, 1}, Strategy::exact);
  ASSERT_TRUE(m);
  EXPECT_GE(m->size(), 4u);
  EXPECT_EQ(static_cast<int>(m->size()),
            oracle::max_nontrivial_size(oracle::from_graph(f2.graph), 1, 1));
}

TEST(MaximalModule, ExactIsMaximumAndGrowIsSound) {
  std::size_t grow_short = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = gen_random(9, 0.3 + 0.1 * static_cast<double>(seed % 4), seed);
    const AbParams p{seed % 2, (seed / 2) % 2};
    const auto og = oracle::from_graph(g);
    const int best = oracle::max_nontrivial_size(og, static_cast<int>(p.alpha), static_cast<int>(p.beta));
    const auto exact = maximal_nontrivial_module(g, p, Strategy::exact);
    const auto grow = maximal_nontrivial_module(g, p, Strategy::grow);
    ASSERT_EQ(exact.has_value(), best > 0);
    ASSERT_EQ(grow.has_value(), best > 0);
    if (!exact) continue;
    EXPECT_EQ(static_cast<int>(exact->size()), best);
    EXPECT_TRUE(is_ab_module(g, *grow, p));
    EXPECT_FALSE(is_trivial_module(*grow, p, g.order()));
    if (grow->size() < exact->size()) ++grow_short;
  }
  std::cout << "grow below maximum on " << grow_short << " of 80 graphs\n";
}

TEST(Tree, Fig1Labels) {
  const auto f1 = fixtures::fig1();
  const auto t = decomposition_tree(f1.graph, {0, 0});
  ASSERT_TRUE(check_tree(f1.graph, t).ok) << check_tree(f1.graph, t).problem;
  EXPECT_EQ(t.root_node().kind, NodeKind::ab_prime);
  std::vector<VertexSet> kids;
  for (auto c : t.root_node().children) kids.push_back(t.nodes[c].set);
  std::sort(kids.begin(), kids.end());
  auto expect = sets(f1, {"a", "b,c,d", "e", "f,g", "h"});
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(kids, expect);
  const auto bcd = t.find(S(f1, "b,c,d"));
  const auto bd = t.find(S(f1, "b,d"));
  const auto fg = t.find(S(f1, "f,g"));
  ASSERT_TRUE(bcd && bd && fg);
  EXPECT_EQ(t.nodes[*bcd].kind, NodeKind::alpha_series);
  EXPECT_EQ(t.nodes[*bd].kind, NodeKind::beta_parallel);
  EXPECT_EQ(t.nodes[*fg].kind, NodeKind::beta_parallel);
}

TEST(Tree, C5PrimeChunks) {
  const Graph c5 = fixtures::cycle(5).graph;
  const auto t = decomposition_tree(c5, {1, 1});
  EXPECT_TRUE(check_tree(c5, t).ok);
  EXPECT_EQ(t.root_node().kind, NodeKind::ab_prime);
  ASSERT_EQ(t.root_node().children.size(), 2u);
  EXPECT_EQ(t.nodes[t.root_node().children[0]].set, VertexSet(5, {0, 1, 2}));
  EXPECT_EQ(t.nodes[t.root_node().children[1]].set, VertexSet(5, {3, 4}));
  for (auto c : t.root_node().children) EXPECT_EQ(t.nodes[c].kind, NodeKind::ab_degenerate);
}

TEST(Tree, K4IsOneSeriesNode) {
  const Graph k4 = fixtures::complete(4).graph;
  const auto t = decomposition_tree(k4, {0, 0});
  EXPECT_TRUE(check_tree(k4, t).ok);
  EXPECT_EQ(t.root_node().kind, NodeKind::alpha_series);
  ASSERT_EQ(t.root_node().children.size(), 4u);
  for (auto c : t.root_node().children) EXPECT_EQ(t.nodes[c].set.size(), 1u);
}

TEST(Tree, DegenerateGraphIsOneLeaf) {
  const Graph p4 = fixtures::path(4).graph;
  const auto t = decomposition_tree(p4, {1, 1});
  EXPECT_EQ(t.nodes.size(), 1u);
  EXPECT_EQ(t.root_node().kind, NodeKind::ab_degenerate);
}

TEST(Tree, RandomGraphsPassTheChecker) {
  std::mt19937_64 rng(34);
  const AbParams ps[] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 5 + rng() % 8;
    const Graph g = gen_random(n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0, rng());
    const AbParams p = ps[rep % 6];
    for (Strategy s : {Strategy::exact, Strategy::grow}) {
      const auto t = decomposition_tree(g, p, s);
      const auto c = check_tree(g, t);
      ASSERT_TRUE(c.ok) << c.problem << " n=" << n << " " << p.to_string() << " "
                        << serialize_graph(g);
    }
  }
}

TEST(Tree, CheckerCatchesBrokenTrees) {
  const auto f1 = fixtures::fig1();
  auto t = decomposition_tree(f1.graph, {0, 0});
  t.nodes[t.root].kind = NodeKind::alpha_series;
  EXPECT_FALSE(check_tree(f1.graph, t).ok);
  auto u = decomposition_tree(f1.graph, {0, 0});
  u.nodes[*u.find(S(f1, "b,d"))].kind = NodeKind::alpha_series;
  EXPECT_FALSE(check_tree(f1.graph, u).ok);
}

TEST(Brittle, Decompositions) {
  const Graph c4 = fixtures::cycle(4).graph;
  const auto cut = matching_cut(c4);
  ASSERT_TRUE(cut);
  EXPECT_TRUE(brittle_decomposition_check(c4, {cut->side_a, cut->side_b}, {0, 1}));

  // children of a complete node combine freely
  const Graph k4 = fixtures::complete(4).graph;
  const auto t = decomposition_tree(k4, {0, 0});
  std::vector<VertexSet> kids;
  for (auto c : t.root_node().children) kids.push_back(t.nodes[c].set);
  EXPECT_TRUE(brittle_decomposition_check(k4, kids, {0, 0}));
  const auto f1 = fixtures::fig1();
  EXPECT_TRUE(brittle_decomposition_check(f1.graph, sets(f1, {"b,d", "c"}), {0, 0}));

  // the prime root's children do not: f splits {a,e}
  EXPECT_FALSE(brittle_decomposition_check(f1.graph, sets(f1, {"a", "b,c,d", "e", "f,g", "h"}), {0, 0}));
  const auto c5 = fixtures::cycle(5);
  EXPECT_FALSE(brittle_decomposition_check(c5.graph, sets(c5, {"a,b", "c,d,e"}), {0, 0}));
  EXPECT_THROW(brittle_decomposition_check(Graph(21), std::vector<VertexSet>(21, VertexSet(21)), {0, 0}),
               SizeLimitError);
}
