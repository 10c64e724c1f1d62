#include "abmod/abmodule.hpp"

#include <string>

#include "abmod/errors.hpp"

namespace abmod {

namespace {

void check_universe(const Graph& g, const VertexSet& s, const char* op) {
  if (s.universe() != g.order())
    throw InputError(std::string(op) + ": set universe " + std::to_string(s.universe()) +
                     " does not match graph order " + std::to_string(g.order()));
}

bool is_splitting_count(std::size_t count, std::size_t set_size, AbParams p) {
  return count > p.beta && count + p.alpha < set_size;
}

}  // namespace

VertexSet alpha_neighbourhood(const Graph& g, const VertexSet& a, AbParams p) {
  check_universe(g, a, "alpha_neighbourhood");
  if (a.empty()) throw InputError("alpha_neighbourhood: empty set");
  const std::size_t size = a.size();
  VertexSet out = g.empty_set();
  a.complement().for_each([&](Vertex x) {
    if (g.neighbour_set(x).intersection_size(a) + p.alpha >= size) out.insert(x);
  });
  return out;
}

VertexSet beta_non_neighbourhood(const Graph& g, const VertexSet& a, AbParams p) {
  check_universe(g, a, "beta_non_neighbourhood");
  if (a.empty()) throw InputError("beta_non_neighbourhood: empty set");
  VertexSet out = g.empty_set();
  a.complement().for_each([&](Vertex x) {
    if (g.neighbour_set(x).intersection_size(a) <= p.beta) out.insert(x);
  });
  return out;
}

SplitterReport splitter_set(const Graph& g, const VertexSet& a, AbParams p) {
  check_universe(g, a, "splitter_set");
  const std::size_t size = a.size();
  SplitterReport r{g.empty_set(), g.empty_set(), g.empty_set(),
                   std::vector<std::size_t>(g.order(), 0)};
  a.complement().for_each([&](Vertex x) {
    const std::size_t c = g.neighbour_set(x).intersection_size(a);
    r.counts[x] = c;
    if (c + p.alpha >= size) r.n_alpha.insert(x);
    if (c <= p.beta) r.n_bar_beta.insert(x);
    if (is_splitting_count(c, size, p)) r.splitters.insert(x);
  });
  return r;
}

VertexSet splitters(const Graph& g, const VertexSet& m, AbParams p) {
  check_universe(g, m, "splitters");
  const std::size_t size = m.size();
  VertexSet out = g.empty_set();
  if (size <= p.trivial_bound()) return out;
  m.complement().for_each([&](Vertex x) {
    if (is_splitting_count(g.neighbour_set(x).intersection_size(m), size, p)) out.insert(x);
  });
  return out;
}

bool is_ab_module(const Graph& g, const VertexSet& m, AbParams p) {
  check_universe(g, m, "is_ab_module");
  return is_ab_module_within(g, m, g.vertices(), p);
}

bool is_ab_module_within(const Graph& g, const VertexSet& m, const VertexSet& within, AbParams p) {
  const std::size_t size = m.size();
  if (size <= p.trivial_bound()) return true;
  const VertexSet outside = within - m;
  for (Vertex x = outside.first(); x < outside.universe(); x = outside.next(x))
    if (is_splitting_count(g.neighbour_set(x).intersection_size(m), size, p)) return false;
  return true;
}

bool is_trivial_module(const VertexSet& m, AbParams p, std::size_t n) {
  const std::size_t size = m.size();
  return size == n || size <= p.trivial_bound();
}

ClosureTrace closure_naive(const Graph& g, const VertexSet& a, AbParams p) {
  check_universe(g, a, "closure_naive");
  ClosureTrace t;
  t.stages.push_back(a);
  t.below_threshold = a.size() < p.degenerate_bound();
  VertexSet current = a;
  if (!t.below_threshold) {
    for (VertexSet s = splitters(g, current, p); !s.empty(); s = splitters(g, current, p)) {
      current |= s;
      t.stages.push_back(current);
    }
  }
  t.result = current;
  t.tallies.assign(g.order(), Tally{});
  const std::size_t size = current.size();
  current.complement().for_each([&](Vertex x) {
    const std::size_t c = g.neighbour_set(x).intersection_size(current);
    t.tallies[x] = Tally{c, size - c};
  });
  return t;
}

ClosureTrace closure_refined(const Graph& g, const VertexSet& a, AbParams p) {
  check_universe(g, a, "closure_refined");
  ClosureEngine engine(g);
  return engine.trace(a, p);
}

}  // namespace abmod
