#include <gtest/gtest.h>

#include <random>

#include "abmod/enumeration.hpp"
#include "abmod/errors.hpp"
#include "abmod/generators.hpp"
#include "abmod/graph_io.hpp"
#include "oracles.hpp"

using namespace abmod;
using oracle::Mask;

namespace {

std::vector<Mask> masks(const std::vector<VertexSet>& sets) {
  std::vector<Mask> out;
  for (const auto& s : sets) out.push_back(oracle::mask_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_set(const ModuleFamily& f, const VertexSet& s) {
  return std::find(f.members.begin(), f.members.end(), s) != f.members.end();
}

Graph k5_minus_edge() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v)
      if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
  return Graph::from_edges(5, edges);
}

}  // namespace

TEST(Minimal, C5HasNone) {
  const Graph c5 = fixtures::cycle(5).graph;
  EXPECT_TRUE(minimal_nontrivial_modules(c5, {1, 1}).members.empty());
}

TEST(Minimal, Fig1TwinPairs) {
  const auto doc = fixtures::fig1();
  const auto fam = minimal_nontrivial_modules(doc.graph, {0, 0});
  EXPECT_TRUE(contains_set(fam, parse_vertex_set("b,d", doc)));
  EXPECT_TRUE(contains_set(fam, parse_vertex_set("f,g", doc)));
  const auto og = oracle::from_graph(doc.graph);
  EXPECT_EQ(masks(fam.members), oracle::minimal_nontrivial(og, 0, 0));
}

TEST(Minimal, Fig2ContainsAbcd) {
  const auto doc = fixtures::fig2();
  const auto fam = minimal_nontrivial_modules(doc.graph, {1, 1});
  EXPECT_TRUE(contains_set(fam, parse_vertex_set("a,b,c,d", doc)));
  EXPECT_EQ(masks(fam.members), oracle::minimal_nontrivial(oracle::from_graph(doc.graph), 1, 1));
}

TEST(Minimal, RejectsDegenerateGraphs) {
  EXPECT_THROW(minimal_nontrivial_modules(fixtures::path(4).graph, {1, 1}), InputError);
}

TEST(Minimal, DriversAndThreadsAgreeWithOracle) {
  const AbParams ps[] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}};
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 7 + seed % 4;
    const Graph g = gen_random(n, 0.2 + 0.15 * static_cast<double>(seed % 5), seed);
    const AbParams p = ps[seed % 5];
    const auto batched = minimal_nontrivial_modules(g, p);
    const auto tuple = minimal_nontrivial_modules(g, p, {EnumerationDriver::per_tuple, 1});
    const auto threaded = minimal_nontrivial_modules(g, p, {EnumerationDriver::batched, 4});
    EXPECT_EQ(batched.members, tuple.members);
    EXPECT_EQ(batched.members, threaded.members);
    EXPECT_EQ(masks(batched.members),
              oracle::minimal_nontrivial(oracle::from_graph(g), static_cast<int>(p.alpha),
                                         static_cast<int>(p.beta)));
  }
}

TEST(Minimal, DriversAgreeOnLargerGraphs) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = gen_random(24, 0.3, seed);
    const auto a = minimal_nontrivial_modules(g, {1, 0});
    const auto b = minimal_nontrivial_modules(g, {1, 0}, {EnumerationDriver::per_tuple, 3});
    EXPECT_EQ(a.members, b.members);
  }
}

TEST(Oracle, C5AtOneOne) {
  const auto fam = all_modules_oracle(fixtures::cycle(5).graph, {1, 1});
  // empty set, 5 + 10 + 10 small sets and V
  EXPECT_EQ(fam.members.size(), 27u);
  for (const auto& m : fam.members) EXPECT_TRUE(m.size() <= 3 || m.size() == 5);
}

TEST(Oracle, EmptyGraphEverySubset) {
  EXPECT_EQ(all_modules_oracle(Graph(4), {0, 0}).members.size(), 16u);
}

TEST(Oracle, ZeroZeroIsClassicalModules) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random(9, 0.5, seed);
    const auto og = oracle::from_graph(g);
    std::vector<Mask> classical;
    for (Mask m = 0; m < 512; ++m) {
      bool ok = true;
      for (int x = 0; x < 9 && ok; ++x) {
        if ((m >> x) & 1U) continue;
        const Mask seen = og.nb[x] & m;
        ok = seen == 0 || seen == m;
      }
      if (ok) classical.push_back(m);
    }
    EXPECT_EQ(masks(all_modules_oracle(g, {0, 0}).members), classical);
  }
}

TEST(Oracle, SizeLimit) {
  EXPECT_THROW(all_modules_oracle(gen_random(15, 0.5, 1), {0, 0}, 14), SizeLimitError);
}

TEST(Covering, Examples) {
  const auto c5 = covering(fixtures::cycle(5).graph, {1, 1});
  EXPECT_EQ(c5.members.size(), 5u);
  for (const auto& m : c5.members) EXPECT_EQ(m.size(), 1u);

  const auto doc = fixtures::fig1();
  const auto fig1 = covering(doc.graph, {0, 0});
  for (const char* s : {"b,d", "f,g", "a", "c", "e", "h"})
    EXPECT_TRUE(contains_set(fig1, parse_vertex_set(s, doc))) << s;

  const Graph k6 = fixtures::complete(6).graph;
  const auto fam = minimal_nontrivial_modules(k6, {0, 0});
  EXPECT_EQ(fam.members.size(), 15u);
  for (const auto& m : fam.members) EXPECT_EQ(m.size(), 2u);
}

TEST(Covering, UnionAndOverlap) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gen_random(9, 0.4, seed);
    const AbParams p{seed % 2, (seed / 2) % 2};
    const auto fam = covering(g, p);
    VertexSet all(9);
    for (const auto& m : fam.members) all |= m;
    EXPECT_EQ(all, g.vertices());
    for (std::size_t i = 0; i < fam.members.size(); ++i)
      for (std::size_t j = i + 1; j < fam.members.size(); ++j)
        if (fam.members[i].size() > 1 && fam.members[j].size() > 1) {
          EXPECT_LE(fam.members[i].intersection_size(fam.members[j]), p.trivial_bound());
        }
  }
}

TEST(Prime, Examples) {
  EXPECT_TRUE(is_prime(fixtures::cycle(5).graph, {1, 1}).prime);
  EXPECT_FALSE(is_prime(fixtures::bull().graph, {1, 1}).prime);
  EXPECT_TRUE(is_prime(fixtures::path(4).graph, {0, 0}).prime);
  const auto small = is_prime(fixtures::path(4).graph, {1, 1});
  EXPECT_TRUE(small.prime);
  EXPECT_TRUE(small.degenerate);
}

TEST(Prime, ComplementDualityAndOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen_random(7, 0.5, seed);
    const AbParams p{seed % 2, (seed / 2) % 2};
    const bool prime = is_prime(g, p).prime;
    EXPECT_EQ(prime, is_prime(complement(g), p.swapped()).prime);
    EXPECT_EQ(prime, oracle::is_prime(oracle::from_graph(g), static_cast<int>(p.alpha),
                                      static_cast<int>(p.beta)));
  }
}

TEST(Brittle, Examples) {
  EXPECT_EQ(is_brittle(fixtures::path(4).graph, {1, 1}), Verdict::yes);
  // b sees a and c inside {a,c,d,e}: two of four
  EXPECT_EQ(is_brittle(fixtures::path(5).graph, {1, 1}), Verdict::no);
  EXPECT_EQ(is_brittle(k5_minus_edge(), {1, 0}), Verdict::yes);
  EXPECT_EQ(is_brittle(k5_minus_edge(), {1, 0}, BrittleMode::fast), Verdict::yes);
  EXPECT_EQ(is_brittle(fixtures::cycle(5).graph, {1, 1}), Verdict::no);
  EXPECT_EQ(is_brittle(Graph(6), {0, 0}, BrittleMode::fast), Verdict::yes);
  EXPECT_EQ(is_brittle(fixtures::cycle(5).graph, {1, 1}, BrittleMode::fast), Verdict::undetermined);
}

TEST(Brittle, ExactMatchesOracleAndFastIsSound) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gen_random(7, (seed % 2) ? 0.85 : 0.15, seed);
    const AbParams p{seed % 3, (seed / 3) % 2};
    const bool truth = oracle::is_brittle(oracle::from_graph(g), static_cast<int>(p.alpha),
                                          static_cast<int>(p.beta));
    EXPECT_EQ(is_brittle(g, p) == Verdict::yes, truth);
    if (is_brittle(g, p, BrittleMode::fast) == Verdict::yes) {
      EXPECT_TRUE(truth);
    }
  }
}

TEST(Families, InclusionHelpers) {
  std::vector<VertexSet> sets = {VertexSet(5, {0, 1, 2}), VertexSet(5, {0, 1}),
                                 VertexSet(5, {3}), VertexSet(5, {0, 1})};
  EXPECT_EQ(inclusion_minimal(sets), (std::vector<VertexSet>{VertexSet(5, {0, 1}), VertexSet(5, {3})}));
  EXPECT_EQ(inclusion_maximal(sets),
            (std::vector<VertexSet>{VertexSet(5, {0, 1, 2}), VertexSet(5, {3})}));
  canonicalize(sets);
  EXPECT_EQ(sets.size(), 3u);
}
