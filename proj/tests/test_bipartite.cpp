#include <gtest/gtest.h>

#include <random>

#include "abmod/abmodule.hpp"
#include "abmod/bipartite.hpp"
#include "abmod/errors.hpp"
#include "abmod/generators.hpp"
#include "oracles.hpp"

using namespace abmod;
using oracle::Mask;

namespace {

// x1..x4 = 0..3, y1 = 4, y2 = 5
BipartiteGraph four_two() {
  return BipartiteGraph(Graph::from_edges(6, {{0, 4}, {1, 4}, {2, 5}, {3, 5}}), VertexSet(6, {0, 1, 2, 3}));
}

BipartiteGraph complete_bipartite(std::size_t nx, std::size_t ny, bool minus_matching = false) {
  std::vector<Edge> e;
  for (Vertex x = 0; x < nx; ++x)
    for (Vertex y = 0; y < ny; ++y)
      if (!(minus_matching && x == y)) e.emplace_back(x, static_cast<Vertex>(nx + y));
  VertexSet xs(nx + ny);
  for (Vertex x = 0; x < nx; ++x) xs.insert(x);
  return BipartiteGraph(Graph::from_edges(nx + ny, e), xs);
}

// Subsets of X that are modules, reduced to the inclusion-maximal ones.
std::vector<Mask> oracle_maximal(const BipartiteGraph& bg, AbParams p) {
  const auto og = oracle::from_graph(bg.graph());
  const Mask x = oracle::mask_of(bg.x_side());
  std::vector<Mask> mods;
  Mask sub = 0;
  do {
    if (oracle::is_module(og, sub, static_cast<int>(p.alpha), static_cast<int>(p.beta))) mods.push_back(sub);
    sub = (sub - x) & x;
  } while (sub != 0);
  return oracle::maximal_of(mods);
}

std::vector<Mask> masks(const std::vector<VertexSet>& sets) {
  std::vector<Mask> out;
  for (const auto& s : sets) out.push_back(oracle::mask_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

// Three overlapping forbidden triples on X = {p,q,r,v1,v2,v3}: y_i misses
// exactly the i-th triple.
BipartiteGraph triple_budgets() {
  const std::vector<std::vector<Vertex>> missing = {{0, 1, 3}, {1, 2, 4}, {0, 2, 5}};
  std::vector<Edge> e;
  for (Vertex i = 0; i < 3; ++i)
    for (Vertex x = 0; x < 6; ++x)
      if (std::find(missing[i].begin(), missing[i].end(), x) == missing[i].end())
        e.emplace_back(x, static_cast<Vertex>(6 + i));
  return BipartiteGraph(Graph::from_edges(9, e), VertexSet(9, {0, 1, 2, 3, 4, 5}));
}

}  // namespace

TEST(BipartiteGraph, Construction) {
  EXPECT_THROW(BipartiteGraph(Graph::from_edges(3, {{0, 1}}), VertexSet(3, {0, 1})), InputError);
  const auto bg = BipartiteGraph::auto_sides(fixtures::cycle(6).graph);
  EXPECT_EQ(bg.x_side(), VertexSet(6, {0, 2, 4}));
  EXPECT_THROW(BipartiteGraph::auto_sides(fixtures::cycle(5).graph), InputError);
  EXPECT_THROW(BipartiteGraph::auto_sides(Graph(3)), InputError);
}

TEST(TwinClassify, Examples) {
  const auto tc = twin_classify(four_two(), {0, 0});
  ASSERT_EQ(tc.tuples.size(), 4u);
  EXPECT_EQ(tc.classes.size(), 2u);
  EXPECT_EQ(tc.class_of[0], tc.class_of[1]);
  EXPECT_EQ(tc.class_of[2], tc.class_of[3]);
  EXPECT_NE(tc.class_of[0], tc.class_of[2]);

  for (AbParams p : {AbParams{0, 0}, AbParams{1, 0}, AbParams{0, 1}, AbParams{1, 1}, AbParams{2, 0}})
    EXPECT_EQ(twin_classify(complete_bipartite(3, 2), p).classes.size(), 1u);

  // star with its centre on the Y side
  const BipartiteGraph star(Graph::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}), VertexSet(5, {0, 1, 2, 3}));
  const auto st = twin_classify(star, {1, 0});
  EXPECT_EQ(st.tuples.size(), 6u);
  EXPECT_EQ(st.classes.size(), 1u);
  EXPECT_THROW(twin_classify(complete_bipartite(2, 2), {1, 1}), InputError);
}

TEST(TwinClassify, RowsAndLabelsAreConsistent) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto bg = gen_random_bipartite(7, 5, 0.5, seed);
    const AbParams p{seed % 2, (seed / 2) % 2};
    const auto tc = twin_classify(bg, p);
    std::size_t aux_edges = 0;
    for (std::size_t t = 0; t < tc.tuples.size(); ++t) {
      aux_edges += tc.rows[t].size();
      for (std::size_t i = 0; i < tc.ys.size(); ++i) {
        const Vertex y = tc.ys[i];
        const auto hit = bg.graph().neighbour_set(y).intersection_size(tc.tuples[t]);
        const bool dense = hit + p.alpha >= tc.tuples[t].size();
        const bool sparse = hit <= p.beta;
        EXPECT_NE(dense, sparse);  // exactly one of the two
        EXPECT_EQ(tc.rows[t].contains(y), dense);
        const auto& lam = tc.lambda[t][i];
        EXPECT_TRUE(lam.is_subset_of(tc.tuples[t]));
        EXPECT_LE(lam.size(), dense ? p.alpha : p.beta);
      }
      for (std::size_t u = 0; u < tc.tuples.size(); ++u)
        EXPECT_EQ(tc.class_of[t] == tc.class_of[u], tc.rows[t] == tc.rows[u]);
    }
    EXPECT_LE(aux_edges, tc.ys.size() * tc.tuples.size());
  }
}

TEST(FalseTwins, Examples) {
  const auto bg = four_two();
  const Graph& g = bg.graph();
  EXPECT_TRUE(is_false_ab_twin(g, VertexSet(6, {0}), VertexSet(6, {1}), {0, 0}));
  EXPECT_FALSE(is_false_ab_twin(g, VertexSet(6, {0}), VertexSet(6, {2}), {0, 0}));
  // y1 sees one of {x1, x3}: a splitter of the union
  EXPECT_FALSE(is_ab_module(g, VertexSet(6, {0, 2}), {0, 0}));
  EXPECT_THROW(is_false_ab_twin(g, VertexSet(6, {0, 1}), VertexSet(6, {2}), {0, 0}), InputError);
  EXPECT_THROW(is_false_ab_twin(g, VertexSet(6, {0}), VertexSet(6, {0}), {0, 0}), InputError);
}

TEST(FalseTwins, DifferentClassesAreNeverTwins) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto bg = gen_random_bipartite(6, 4, 0.5, seed);
    const AbParams p{seed % 2, (seed / 2) % 2};
    const auto tc = twin_classify(bg, p);
    for (std::size_t a = 0; a < tc.tuples.size(); ++a)
      for (std::size_t b = a + 1; b < tc.tuples.size(); ++b) {
        if (tc.class_of[a] == tc.class_of[b]) continue;
        EXPECT_FALSE(is_false_ab_twin(bg.graph(), tc.tuples[a], tc.tuples[b], p));
        EXPECT_FALSE(is_ab_module(bg.graph(), tc.tuples[a] | tc.tuples[b], p));
      }
  }
}

TEST(OneSided, ModuleCheckAndTwinUnions) {
  const auto bg = four_two();
  EXPECT_TRUE(one_sided_module_check(bg, VertexSet(6, {0, 1}), {0, 0}));
  EXPECT_FALSE(one_sided_module_check(bg, VertexSet(6, {1, 2}), {0, 0}));
  EXPECT_THROW(one_sided_module_check(bg, VertexSet(6, {0, 4}), {0, 0}), InputError);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto r = gen_random_bipartite(7, 4, 0.5, seed);
    const AbParams p{seed % 2, (seed / 2) % 2};
    const auto tc = twin_classify(r, p);
    const auto xs = r.x_side().members();
    for (Mask m = 0; m < (1U << xs.size()); ++m) {
      VertexSet s(r.graph().order());
      for (std::size_t i = 0; i < xs.size(); ++i)
        if ((m >> i) & 1U) s.insert(xs[i]);
      if (s.size() < p.trivial_bound()) continue;
      EXPECT_EQ(one_sided_module_check(r, s, p), union_of_twin_sets(tc, s));
    }
  }
}

TEST(Maximal, Examples) {
  EXPECT_EQ(maximal_one_sided_modules(four_two(), {0, 0}).maximal_members,
            (std::vector<VertexSet>{VertexSet(6, {0, 1}), VertexSet(6, {2, 3})}));
  const auto crown = complete_bipartite(3, 3, true);
  EXPECT_EQ(maximal_one_sided_modules(crown, {1, 0}).maximal_members,
            (std::vector<VertexSet>{crown.x_side()}));
  const auto small = complete_bipartite(3, 2);
  EXPECT_EQ(maximal_one_sided_modules(small, {1, 1}).maximal_members,
            (std::vector<VertexSet>{small.x_side()}));
}

TEST(Maximal, OverlappingBudgets) {
  const auto bg = triple_budgets();
  for (AbParams p : {AbParams{1, 0}, AbParams{2, 0}, AbParams{2, 1}, AbParams{1, 1}})
    EXPECT_EQ(masks(maximal_one_sided_modules(bg, p).maximal_members), oracle_maximal(bg, p))
        << p.to_string();
}

TEST(Maximal, MatchesOracle) {
  const AbParams ps[] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t nx = 3 + seed % 8, ny = 2 + seed % 5;
    const auto bg = gen_random_bipartite(nx, ny, 0.2 + 0.15 * static_cast<double>(seed % 5), seed);
    const AbParams p = ps[seed % 4];
    if (nx < p.trivial_bound()) continue;
    const auto fam = maximal_one_sided_modules(bg, p);
    ASSERT_EQ(masks(fam.maximal_members), oracle_maximal(bg, p)) << "seed " << seed;
    for (const auto& m : fam.maximal_members) EXPECT_TRUE(one_sided_module_check(bg, m, p));
  }
}

TEST(Maximal, NestsUnderLargerBudgets) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto bg = gen_random_bipartite(8, 4, 0.5, seed);
    const AbParams p{seed % 2, (seed / 2) % 2};
    const auto base = maximal_one_sided_modules(bg, p).maximal_members;
    for (AbParams q : {AbParams{p.alpha + 1, p.beta}, AbParams{p.alpha, p.beta + 1}}) {
      const auto bigger = maximal_one_sided_modules(bg, q).maximal_members;
      for (const auto& m : base)
        EXPECT_TRUE(std::any_of(bigger.begin(), bigger.end(),
                                [&](const VertexSet& b) { return m.is_subset_of(b); }));
    }
  }
}

TEST(ClosureProps, NoViolations) {
  const auto rep = one_sided_family_closure_props(four_two(), {0, 0});
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_GT(rep.pairs_checked, 0u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto bg = gen_random_bipartite(6, 4, 0.5, seed);
    EXPECT_TRUE(one_sided_family_closure_props(bg, {1, 1}).violations.empty());
  }
  EXPECT_THROW(one_sided_family_closure_props(gen_random_bipartite(13, 2, 0.5, 1), {0, 0}, 12),
               SizeLimitError);
}
