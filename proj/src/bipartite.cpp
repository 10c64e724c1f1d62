#include "abmod/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "abmod/abmodule.hpp"
#include "abmod/combinatorics.hpp"
#include "abmod/enumeration.hpp"
#include "abmod/errors.hpp"

namespace abmod {

BipartiteGraph::BipartiteGraph(Graph g, VertexSet x_side)
    : graph_(std::move(g)), x_(std::move(x_side)) {
  if (x_.universe() != graph_.order())
    throw InputError("bipartite: side set universe does not match graph order");
  y_ = x_.complement();
  for (const auto& [u, v] : graph_.edges())
    if (x_.contains(u) == x_.contains(v))
      throw InputError("bipartite: edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} does not cross the sides");
}

BipartiteGraph BipartiteGraph::auto_sides(Graph g) {
  const std::size_t n = g.order();
  if (n == 0) throw InputError("bipartite: empty graph");
  std::vector<int> colour(n, -1);
  std::deque<Vertex> queue{0};
  colour[0] = 0;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbours(u)) {
      if (colour[v] == -1) {
        colour[v] = 1 - colour[u];
        ++reached;
        queue.push_back(v);
      } else if (colour[v] == colour[u]) {
        throw InputError("bipartite: odd cycle through edge {" + std::to_string(u) + "," +
                         std::to_string(v) + "}");
      }
    }
  }
  if (reached != n)
    throw InputError("bipartite: automatic side assignment needs a connected graph");
  VertexSet x(n);
  for (Vertex v = 0; v < n; ++v)
    if (colour[v] == 0) x.insert(v);
  return BipartiteGraph(std::move(g), std::move(x));
}

TwinClassification twin_classify(const BipartiteGraph& bg, AbParams p) {
  const Graph& g = bg.graph();
  const std::size_t width = p.trivial_bound();
  if (bg.x_side().size() < width)
    throw InputError("twin_classify: |X| = " + std::to_string(bg.x_side().size()) +
                     " is below alpha+beta+1 = " + std::to_string(width));
  TwinClassification tc;
  tc.params = p;
  tc.ys = bg.y_side().members();
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> class_by_row;
  for_each_combination(bg.x_side().members(), width, [&](const std::vector<Vertex>& pick) {
    VertexSet t(g.order(), std::span<const Vertex>(pick));
    VertexSet row = g.empty_set();
    std::vector<VertexSet> labels;
    labels.reserve(tc.ys.size());
    for (Vertex y : tc.ys) {
      const VertexSet& ny = g.neighbour_set(y);
      if (ny.intersection_size(t) + p.alpha >= width) {
        row.insert(y);
        labels.push_back(t - ny);
      } else {
        labels.push_back(t & ny);
      }
    }
    const std::size_t id = tc.tuples.size();
    auto [it, fresh] = class_by_row.emplace(row, tc.classes.size());
    if (fresh) tc.classes.emplace_back();
    tc.classes[it->second].push_back(id);
    tc.class_of.push_back(it->second);
    tc.tuples.push_back(std::move(t));
    tc.rows.push_back(std::move(row));
    tc.lambda.push_back(std::move(labels));
  });
  return tc;
}

bool is_false_ab_twin(const Graph& g, const VertexSet& a, const VertexSet& b, AbParams p) {
  if (a.size() != p.trivial_bound() || b.size() != p.trivial_bound())
    throw InputError("is_false_ab_twin: both sets need alpha+beta+1 vertices");
  if (a == b) throw InputError("is_false_ab_twin: sets must differ");
  if (!is_ab_module(g, a | b, p)) return false;
  auto sparse = [&](const VertexSet& from, const VertexSet& to) {
    const VertexSet only = from - to;
    for (Vertex x = only.first(); x < only.universe(); x = only.next(x))
      if (g.neighbour_set(x).intersection_size(to) > p.beta) return false;
    return true;
  };
  return sparse(a, b) && sparse(b, a);
}

bool one_sided_module_check(const BipartiteGraph& bg, const VertexSet& m, AbParams p) {
  if (!m.is_subset_of(bg.x_side())) throw InputError("one_sided_module_check: set is not inside X");
  return is_ab_module(bg.graph(), m, p);
}

bool union_of_twin_sets(const TwinClassification& tc, const VertexSet& m) {
  std::size_t seen = tc.classes.size();
  for (std::size_t t = 0; t < tc.tuples.size(); ++t) {
    if (!tc.tuples[t].is_subset_of(m)) continue;
    if (seen == tc.classes.size()) seen = tc.class_of[t];
    else if (tc.class_of[t] != seen) return false;
  }
  return true;
}

namespace {

// Maximal subsets of `pool` within per-y budgets: at most cap[i] members of
// budget[i]. Vertices outside every tight budget are always added.
class BudgetedSubsets {
 public:
  BudgetedSubsets(std::vector<Vertex> pool, std::vector<VertexSet> budget,
                  std::vector<std::size_t> cap, std::size_t universe)
      : pool_(std::move(pool)),
        budget_(std::move(budget)),
        cap_(std::move(cap)),
        used_(budget_.size(), 0),
        current_(universe) {}

  std::vector<VertexSet> run() {
    walk(0);
    return std::move(found_);
  }

 private:
  bool addable(Vertex v) const {
    for (std::size_t i = 0; i < budget_.size(); ++i)
      if (budget_[i].contains(v) && used_[i] >= cap_[i]) return false;
    return true;
  }

  void take(Vertex v, int delta) {
    for (std::size_t i = 0; i < budget_.size(); ++i)
      if (budget_[i].contains(v)) used_[i] = static_cast<std::size_t>(static_cast<long>(used_[i]) + delta);
  }

  void walk(std::size_t i) {
    if (i == pool_.size()) {
      for (Vertex v : pool_)
        if (!current_.contains(v) && addable(v)) return;
      found_.push_back(current_);
      return;
    }
    const Vertex v = pool_[i];
    const bool can = addable(v);
    if (can) {
      current_.insert(v);
      take(v, 1);
      walk(i + 1);
      take(v, -1);
      current_.erase(v);
    }
    bool constrained = false;
    for (const auto& b : budget_) constrained = constrained || b.contains(v);
    if (!can || constrained) walk(i + 1);
  }

  std::vector<Vertex> pool_;
  std::vector<VertexSet> budget_;
  std::vector<std::size_t> cap_;
  std::vector<std::size_t> used_;
  VertexSet current_;
  std::vector<VertexSet> found_;
};

}  // namespace

OneSidedFamily maximal_one_sided_modules(const BipartiteGraph& bg, AbParams p) {
  const Graph& g = bg.graph();
  const VertexSet& x = bg.x_side();
  if (x.size() < p.trivial_bound())
    throw InputError("maximal_one_sided_modules: |X| is below alpha+beta+1");
  OneSidedFamily fam;
  fam.params = p;
  if (is_ab_module(g, x, p)) {
    fam.maximal_members.push_back(x);
    return fam;
  }

  // A module inside X with at least alpha+beta+1 vertices has all its tuples
  // in one class, and within the union of that class's tuples the module
  // condition is exactly one budget per y (non-neighbours when the class is
  // alpha-adjacent to y, neighbours otherwise).
  const TwinClassification tc = twin_classify(bg, p);
  std::vector<VertexSet> found;
  for (const auto& members : tc.classes) {
    VertexSet pool = g.empty_set();
    for (std::size_t t : members) pool |= tc.tuples[t];
    const VertexSet& row = tc.rows[members.front()];
    std::vector<VertexSet> budget;
    std::vector<std::size_t> cap;
    for (Vertex y : tc.ys) {
      const bool dense = row.contains(y);
      VertexSet b = dense ? pool - g.neighbour_set(y) : pool & g.neighbour_set(y);
      const std::size_t limit = dense ? p.alpha : p.beta;
      if (b.size() > limit) {
        budget.push_back(std::move(b));
        cap.push_back(limit);
      }
    }
    BudgetedSubsets search(pool.members(), std::move(budget), std::move(cap), g.order());
    for (auto& m : search.run())
      if (m.size() >= p.trivial_bound()) found.push_back(std::move(m));
  }
  fam.maximal_members = inclusion_maximal(std::move(found));
  return fam;
}

OneSidedClosureReport one_sided_family_closure_props(const BipartiteGraph& bg, AbParams p,
                                                     std::size_t max_x) {
  const std::vector<Vertex> xs = bg.x_side().members();
  const std::size_t k = xs.size();
  if (k > max_x || k > 24)
    throw SizeLimitError("closure property scan: |X| = " + std::to_string(k) + " exceeds cap " +
                         std::to_string(max_x));
  const std::size_t n = bg.graph().order();
  auto lift = [&](std::uint64_t mask) {
    VertexSet s(n);
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) s.insert(xs[i]);
    return s;
  };

  const std::uint64_t limit = std::uint64_t{1} << k;
  std::vector<char> in_family(limit, 0);
  std::vector<std::uint64_t> family;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (is_ab_module(bg.graph(), lift(mask), p)) {
      in_family[mask] = 1;
      family.push_back(mask);
    }
  }

  OneSidedClosureReport rep;
  rep.family_size = family.size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const std::uint64_t a = family[i];
      const std::uint64_t b = family[j];
      ++rep.pairs_checked;
      if (!in_family[a & b]) rep.violations.push_back({"intersection", lift(a), lift(b)});
      if (!in_family[a & ~b]) rep.violations.push_back({"difference", lift(a), lift(b)});
      if (!in_family[b & ~a]) rep.violations.push_back({"difference", lift(b), lift(a)});
    }
  }
  return rep;
}

}  // namespace abmod
