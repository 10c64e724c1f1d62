#include "abmod/decomposition.hpp"

#include <algorithm>
#include <string>

#include "abmod/abmodule.hpp"
#include "abmod/combinatorics.hpp"
#include "abmod/enumeration.hpp"
#include "abmod/errors.hpp"
#include "detail.hpp"

namespace abmod {

std::string_view to_string(PartitionLabel l) {
  switch (l) {
    case PartitionLabel::alpha_series:
      return "alpha_series";
    case PartitionLabel::beta_parallel:
      return "beta_parallel";
    case PartitionLabel::ab_prime:
      return "ab_prime";
    case PartitionLabel::unclassified:
      return "unclassified";
  }
  return "unknown";
}

std::string_view to_string(Strategy s) { return s == Strategy::exact ? "exact" : "grow"; }

std::string_view to_string(NodeKind k) {
  switch (k) {
    case NodeKind::alpha_series:
      return "alpha_series";
    case NodeKind::beta_parallel:
      return "beta_parallel";
    case NodeKind::ab_prime:
      return "ab_prime";
    case NodeKind::ab_degenerate:
      return "ab_degenerate";
  }
  return "unknown";
}

namespace {

void check_pair(const Graph& g, const VertexSet& a, const VertexSet& b, const char* op) {
  if (a.universe() != g.order() || b.universe() != g.order())
    throw InputError(std::string(op) + ": set universe does not match graph order");
  if (a.empty() || b.empty()) throw InputError(std::string(op) + ": empty set");
  if (a.intersects(b)) throw InputError(std::string(op) + ": sets overlap");
}

// Every x of `from` misses at most alpha vertices of `to`.
bool dense_into(const Graph& g, const VertexSet& from, const VertexSet& to, AbParams p) {
  const std::size_t size = to.size();
  for (Vertex x = from.first(); x < from.universe(); x = from.next(x))
    if (g.neighbour_set(x).intersection_size(to) + p.alpha < size) return false;
  return true;
}

// Every x of `from` has at most beta neighbours in `to`.
bool sparse_into(const Graph& g, const VertexSet& from, const VertexSet& to, AbParams p) {
  for (Vertex x = from.first(); x < from.universe(); x = from.next(x))
    if (g.neighbour_set(x).intersection_size(to) > p.beta) return false;
  return true;
}

bool is_degenerate_pair(const VertexSet& a, const VertexSet& b, AbParams p) {
  return a.size() < p.trivial_bound() || b.size() < p.trivial_bound();
}

void validate_partition(const Graph& g, const VertexSet& region,
                        const std::vector<VertexSet>& parts, AbParams p) {
  if (parts.size() < 2) throw InputError("partition needs at least two parts");
  VertexSet seen = g.empty_set();
  for (const auto& part : parts) {
    if (part.universe() != g.order()) throw InputError("partition: part universe mismatch");
    if (part.empty()) throw InputError("partition: empty part");
    if (seen.intersects(part)) throw InputError("partition: parts overlap");
    seen |= part;
    if (!is_ab_module_within(g, part, region, p))
      throw InputError("partition: part " + part.to_string() + " is not an " + p.to_string() +
                       "-module");
  }
  if (!(seen == region)) throw InputError("partition: parts do not cover the vertex set");
}

std::vector<VertexSet> chunk(const VertexSet& s, std::size_t width) {
  std::vector<VertexSet> out;
  VertexSet cur(s.universe());
  s.for_each([&](Vertex v) {
    cur.insert(v);
    if (cur.size() == width) {
      out.push_back(cur);
      cur.clear();
    }
  });
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

namespace detail {

bool strictly_linked(const Graph& g, const VertexSet& a, const VertexSet& b, AbParams p,
                     SplitKind kind) {
  if (is_degenerate_pair(a, b, p)) return false;
  return kind == SplitKind::series ? dense_into(g, a, b, p) && dense_into(g, b, a, p)
                                   : sparse_into(g, a, b, p) && sparse_into(g, b, a, p);
}

std::size_t add_node(DecompositionTree& t, NodeKind kind, VertexSet set,
                     std::vector<std::size_t> children) {
  t.nodes.push_back(TreeNode{kind, std::move(set), std::move(children)});
  return t.nodes.size() - 1;
}

// A degenerate set becomes a leaf unless some two-part split of it is
// unambiguously series or parallel; with (0,0) this turns vertex pairs into
// the classical series and parallel nodes.
std::size_t small_node(const Graph& g, AbParams p, DecompositionTree& t, const VertexSet& s) {
  if (s.size() >= 2) {
    const std::vector<Vertex> members = s.members();
    const std::size_t free_bits = members.size() - 1;
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << free_bits); ++mask) {
      VertexSet a(g.order(), {members[0]});
      for (std::size_t i = 0; i < free_bits; ++i)
        if ((mask >> i) & 1U) a.insert(members[i + 1]);
      const VertexSet b = s - a;
      const bool series = strictly_linked(g, a, b, p, SplitKind::series);
      const bool parallel = strictly_linked(g, a, b, p, SplitKind::parallel);
      if (series == parallel) continue;
      const std::size_t left = small_node(g, p, t, a);
      const std::size_t right = small_node(g, p, t, b);
      return add_node(t, series ? NodeKind::alpha_series : NodeKind::beta_parallel, s,
                      {left, right});
    }
  }
  return add_node(t, NodeKind::ab_degenerate, s);
}

}  // namespace detail

using detail::add_node;
using detail::small_node;
using detail::strictly_linked;

Connectivity alpha_connected(const Graph& g, const VertexSet& a, const VertexSet& b, AbParams p) {
  check_pair(g, a, b, "alpha_connected");
  return {dense_into(g, a, b, p) && dense_into(g, b, a, p), is_degenerate_pair(a, b, p)};
}

Connectivity beta_non_connected(const Graph& g, const VertexSet& a, const VertexSet& b,
                                AbParams p) {
  check_pair(g, a, b, "beta_non_connected");
  return {sparse_into(g, a, b, p) && sparse_into(g, b, a, p), is_degenerate_pair(a, b, p)};
}

PartitionFlags partition_flags(const Graph& g, const std::vector<VertexSet>& parts, AbParams p) {
  if (parts.size() < 2) return {};
  PartitionFlags f{true, true};
  for (std::size_t i = 0; i < parts.size() && (f.series || f.parallel); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (f.series && !strictly_linked(g, parts[i], parts[j], p, SplitKind::series))
        f.series = false;
      if (f.parallel && !strictly_linked(g, parts[i], parts[j], p, SplitKind::parallel))
        f.parallel = false;
    }
  }
  return f;
}

ModularPartition classify_partition_within(const Graph& g, const VertexSet& region,
                                           std::vector<VertexSet> parts, AbParams p) {
  validate_partition(g, region, parts, p);
  ModularPartition out;
  out.params = p;
  const bool sized = std::any_of(parts.begin(), parts.end(), [&](const VertexSet& s) {
    return s.size() >= p.trivial_bound();
  });
  if (!sized) {
    out.label = PartitionLabel::unclassified;
  } else {
    const PartitionFlags f = partition_flags(g, parts, p);
    out.label = f.series     ? PartitionLabel::alpha_series
                : f.parallel ? PartitionLabel::beta_parallel
                             : PartitionLabel::ab_prime;
  }
  out.parts = std::move(parts);
  return out;
}

ModularPartition classify_partition(const Graph& g, std::vector<VertexSet> parts, AbParams p) {
  return classify_partition_within(g, g.vertices(), std::move(parts), p);
}

std::optional<VertexSet> maximal_nontrivial_module_within(const Graph& g, const VertexSet& region,
                                                          const VertexSet& inside, AbParams p,
                                                          Strategy s) {
  if (!inside.is_subset_of(region)) throw InputError("maximal module: inside ⊄ region");
  if (region.size() < p.degenerate_bound() + 1) return std::nullopt;

  if (s == Strategy::exact) {
    const std::size_t cap = oracle_cap();
    if (inside.size() > cap)
      throw SizeLimitError("exact maximal module search over " + std::to_string(inside.size()) +
                           " vertices exceeds cap " + std::to_string(cap));
    const std::vector<Vertex> pool = inside.members();
    const std::size_t top = std::min(pool.size(), region.size() - 1);
    for (std::size_t size = top; size >= p.degenerate_bound(); --size) {
      std::optional<VertexSet> found;
      for_each_combination(pool, size, [&](const std::vector<Vertex>& pick) {
        VertexSet m(g.order(), std::span<const Vertex>(pick));
        if (!is_ab_module_within(g, m, region, p)) return true;
        found = std::move(m);
        return false;
      });
      if (found) return found;
    }
    return std::nullopt;
  }

  const InducedSubgraph sub = induced(g, region);
  const std::size_t local_n = sub.graph.order();
  VertexSet inside_local(local_n);
  for (std::size_t i = 0; i < local_n; ++i)
    if (inside.contains(sub.to_parent[i])) inside_local.insert(static_cast<Vertex>(i));

  const ModuleFamily fam = minimal_nontrivial_modules(sub.graph, p);
  ClosureEngine engine(sub.graph);
  std::optional<VertexSet> best;
  for (const auto& seed : fam.members) {
    if (!seed.is_subset_of(inside_local)) continue;
    VertexSet m = seed;
    for (bool grew = true; grew;) {
      grew = false;
      const VertexSet options = inside_local - m;
      for (Vertex v = options.first(); v < local_n; v = options.next(v)) {
        VertexSet start = m;
        start.insert(v);
        VertexSet closed = engine.closure(start, p);
        if (closed.size() < local_n && closed.is_subset_of(inside_local)) {
          m = std::move(closed);
          grew = true;
          break;
        }
      }
    }
    if (!best || m.size() > best->size() || (m.size() == best->size() && m < *best))
      best = std::move(m);
  }
  if (!best) return std::nullopt;
  return sub.lift(*best, g.order());
}

std::optional<VertexSet> maximal_nontrivial_module(const Graph& g, AbParams p, Strategy s) {
  const VertexSet all = g.vertices();
  return maximal_nontrivial_module_within(g, all, all, p, s);
}

std::optional<std::size_t> DecompositionTree::find(const VertexSet& s) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].set == s) return i;
  return std::nullopt;
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const Graph& g, AbParams p, Strategy s) : g_(g), p_(p), strategy_(s) {
    tree_.params = p;
  }

  DecompositionTree run() {
    const VertexSet all = g_.vertices();
    if (g_.order() <= p_.degenerate_bound())
      tree_.root = add_node(tree_, NodeKind::ab_degenerate, all);
    else
      tree_.root = build(all);
    return std::move(tree_);
  }

 private:
  std::size_t build(const VertexSet& s) {
    if (s.size() <= p_.degenerate_bound()) return small_node(g_, p_, tree_, s);

    const std::optional<VertexSet> m1 = maximal_nontrivial_module_within(g_, s, s, p_, strategy_);
    if (!m1) {
      std::vector<std::size_t> kids;
      for (const auto& part : chunk(s, p_.trivial_bound()))
        kids.push_back(small_node(g_, p_, tree_, part));
      return add_node(tree_, NodeKind::ab_prime, s, std::move(kids));
    }

    const VertexSet rest = s - *m1;
    if (rest.size() <= p_.total()) {
      VertexSet dense = g_.empty_set();
      VertexSet sparse = g_.empty_set();
      const std::size_t size = m1->size();
      rest.for_each([&](Vertex r) {
        if (g_.neighbour_set(r).intersection_size(*m1) + p_.alpha >= size) dense.insert(r);
        else sparse.insert(r);
      });
      const std::size_t top = build(*m1);
      if (sparse.empty())
        return add_node(tree_, NodeKind::alpha_series, s, {top, small_node(g_, p_, tree_, rest)});
      if (dense.empty())
        return add_node(tree_, NodeKind::beta_parallel, s, {top, small_node(g_, p_, tree_, rest)});
      const std::size_t d = small_node(g_, p_, tree_, dense);
      const std::size_t b = small_node(g_, p_, tree_, sparse);
      return add_node(tree_, NodeKind::ab_prime, s, {top, d, b});
    }

    std::vector<VertexSet> parts{*m1};
    VertexSet left = rest;
    while (!left.empty()) {
      if (left.size() <= p_.total()) {
        parts.push_back(left);
        break;
      }
      const std::optional<VertexSet> m = maximal_nontrivial_module_within(g_, s, left, p_, strategy_);
      if (!m) {
        for (auto& part : chunk(left, p_.trivial_bound())) parts.push_back(std::move(part));
        break;
      }
      parts.push_back(*m);
      left -= *m;
    }

    const PartitionLabel label = classify_partition_within(g_, s, parts, p_).label;
    const NodeKind kind = label == PartitionLabel::alpha_series    ? NodeKind::alpha_series
                          : label == PartitionLabel::beta_parallel ? NodeKind::beta_parallel
                                                                   : NodeKind::ab_prime;
    std::vector<std::size_t> kids;
    for (const auto& part : parts) kids.push_back(build(part));
    if (kind != NodeKind::ab_prime) flatten(s, kind, kids);
    return add_node(tree_, kind, s, std::move(kids));
  }

  // Replaces a child carrying the same label by its own children whenever
  // the coarser partition keeps the label, so that e.g. cliques become one
  // series node over singletons.
  void flatten(const VertexSet& s, NodeKind kind, std::vector<std::size_t>& kids) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const TreeNode& child = tree_.nodes[kids[i]];
        if (child.kind != kind || child.children.empty()) continue;
        std::vector<std::size_t> merged;
        for (std::size_t j = 0; j < kids.size(); ++j)
          if (j != i) merged.push_back(kids[j]);
        merged.insert(merged.end(), child.children.begin(), child.children.end());
        std::vector<VertexSet> sets;
        bool modules = true;
        for (std::size_t id : merged) {
          sets.push_back(tree_.nodes[id].set);
          modules = modules && is_ab_module_within(g_, sets.back(), s, p_);
        }
        if (!modules) continue;
        const PartitionFlags f = partition_flags(g_, sets, p_);
        if ((kind == NodeKind::alpha_series && f.series) ||
            (kind == NodeKind::beta_parallel && f.parallel)) {
          kids = std::move(merged);
          changed = true;
          break;
        }
      }
    }
  }

  const Graph& g_;
  AbParams p_;
  Strategy strategy_;
  DecompositionTree tree_;
};

}  // namespace

DecompositionTree decomposition_tree(const Graph& g, AbParams p, Strategy s) {
  return TreeBuilder(g, p, s).run();
}

TreeCheck check_tree(const Graph& g, const DecompositionTree& t) {
  const AbParams p = t.params;
  auto fail = [](std::string why) { return TreeCheck{false, std::move(why)}; };
  if (t.nodes.empty() || t.root >= t.nodes.size()) return fail("empty tree");
  if (!(t.root_node().set == g.vertices())) return fail("root set is not V");

  std::vector<int> seen(t.nodes.size(), 0);
  std::vector<std::size_t> stack{t.root};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    if (seen[id]++ != 0) return fail("node reached twice");
    const TreeNode& node = t.nodes[id];
    const std::string where = " at " + node.set.to_string();
    if (node.children.empty()) {
      if (node.set.size() > p.degenerate_bound()) return fail("leaf is not degenerate" + where);
      if (node.kind != NodeKind::ab_degenerate) return fail("leaf is not labelled degenerate" + where);
      continue;
    }
    if (node.kind == NodeKind::ab_degenerate) return fail("internal node labelled degenerate" + where);
    if (node.children.size() < 2) return fail("internal node with one child" + where);

    VertexSet cover = g.empty_set();
    for (std::size_t c : node.children) {
      if (c >= t.nodes.size()) return fail("dangling child" + where);
      const VertexSet& cs = t.nodes[c].set;
      if (cs.empty() || cover.intersects(cs)) return fail("children overlap or are empty" + where);
      cover |= cs;
      if (!is_ab_module_within(g, cs, node.set, p))
        return fail("child " + cs.to_string() + " is not a module of its parent" + where);
      stack.push_back(c);
    }
    if (!(cover == node.set)) return fail("children do not cover the node" + where);

    if (node.kind == NodeKind::ab_prime) continue;
    const bool series = node.kind == NodeKind::alpha_series;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      for (std::size_t j = i + 1; j < node.children.size(); ++j) {
        const VertexSet& a = t.nodes[node.children[i]].set;
        const VertexSet& b = t.nodes[node.children[j]].set;
        const bool a_small = a.size() < p.trivial_bound();
        const bool b_small = b.size() < p.trivial_bound();
        bool ok;
        if (a_small && b_small) ok = false;
        else if (a_small) ok = series ? dense_into(g, a, b, p) : sparse_into(g, a, b, p);
        else if (b_small) ok = series ? dense_into(g, b, a, p) : sparse_into(g, b, a, p);
        else ok = strictly_linked(g, a, b, p, series ? SplitKind::series : SplitKind::parallel);
        if (!ok) return fail("children " + a.to_string() + " and " + b.to_string() +
                             " break the " + std::string(to_string(node.kind)) + " label");
      }
    }
  }
  return {};
}

bool brittle_decomposition_check(const Graph& g, const std::vector<VertexSet>& parts, AbParams p) {
  const std::size_t k = parts.size();
  if (k > 20) throw SizeLimitError("brittle decomposition check over more than 20 parts");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    VertexSet u = g.empty_set();
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) u |= parts[i];
    if (!is_ab_module(g, u, p)) return false;
  }
  return true;
}

std::optional<std::pair<VertexSet, VertexSet>> find_two_part_split(const Graph& g,
                                                                   const VertexSet& region,
                                                                   AbParams p, SplitKind kind) {
  const std::vector<Vertex> members = region.members();
  if (members.size() > 25) throw SizeLimitError("two-part split search over more than 25 vertices");
  if (members.size() < 2 * p.trivial_bound()) return std::nullopt;
  const std::size_t free_bits = members.size() - 1;
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << free_bits); ++mask) {
    VertexSet a(g.order(), {members[0]});
    for (std::size_t i = 0; i < free_bits; ++i)
      if ((mask >> i) & 1U) a.insert(members[i + 1]);
    const VertexSet b = region - a;
    if (!strictly_linked(g, a, b, p, kind)) continue;
    if (is_ab_module_within(g, a, region, p) && is_ab_module_within(g, b, region, p))
      return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace abmod
