// Exhaustive (alpha,beta)-cotree search.
//
// A region is decomposable when it is degenerate, or when it has a series or
// parallel modular partition (every pair of parts strictly linked) whose
// parts are all decomposable. Two-part splits are tried before finer
// partitions. Answers are memoised per region; at desk scale the candidate
// parts are simply all modules of G(region) large enough to be linked.

#include <bit>
#include <string>
#include <unordered_map>

#include "abmod/abmodule.hpp"
#include "abmod/decomposition.hpp"
#include "abmod/errors.hpp"
#include "detail.hpp"

namespace abmod {

namespace {

struct Witness {
  bool ok = false;
  SplitKind kind = SplitKind::series;
  std::vector<VertexSet> parts;
};

class CotreeSearch {
 public:
  CotreeSearch(const Graph& g, AbParams p) : g_(g), p_(p) {}

  bool solve(const VertexSet& s) {
    if (s.size() <= p_.degenerate_bound()) return true;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second.ok;
    memo_.emplace(s, Witness{});
    Witness w = search(s);
    const bool ok = w.ok;
    memo_[s] = std::move(w);
    return ok;
  }

  std::size_t emit(DecompositionTree& t, const VertexSet& s) {
    if (s.size() <= p_.degenerate_bound()) return detail::small_node(g_, p_, t, s);
    const Witness& w = memo_.at(s);
    std::vector<std::size_t> kids;
    for (const auto& part : w.parts) kids.push_back(emit(t, part));
    return detail::add_node(t, w.kind == SplitKind::series ? NodeKind::alpha_series
                                                           : NodeKind::beta_parallel,
                            s, std::move(kids));
  }

 private:
  Witness search(const VertexSet& s) {
    const std::vector<Vertex> members = s.members();
    const std::size_t k = members.size();
    std::vector<VertexSet> candidates;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size < p_.trivial_bound() || k - size < p_.trivial_bound()) continue;
      VertexSet m(g_.order());
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1U) m.insert(members[i]);
      if (is_ab_module_within(g_, m, s, p_)) candidates.push_back(std::move(m));
    }

    for (SplitKind kind : {SplitKind::series, SplitKind::parallel}) {
      for (const auto& a : candidates) {
        if (!a.contains(members[0])) continue;
        const VertexSet b = s - a;
        if (!is_ab_module_within(g_, b, s, p_)) continue;
        if (!detail::strictly_linked(g_, a, b, p_, kind)) continue;
        if (solve(a) && solve(b)) return Witness{true, kind, {a, b}};
      }
    }
    for (SplitKind kind : {SplitKind::series, SplitKind::parallel}) {
      std::vector<VertexSet> chosen;
      if (cover(s, candidates, kind, chosen)) return Witness{true, kind, chosen};
    }
    return {};
  }

  // Partitions with three or more parts, extending `chosen` by a part that
  // holds the smallest uncovered vertex.
  bool cover(const VertexSet& uncovered, const std::vector<VertexSet>& candidates, SplitKind kind,
             std::vector<VertexSet>& chosen) {
    if (uncovered.empty()) {
      if (chosen.size() < 3) return false;
      for (const auto& part : chosen)
        if (!solve(part)) return false;
      return true;
    }
    const Vertex v = uncovered.first();
    for (const auto& m : candidates) {
      if (!m.contains(v) || !m.is_subset_of(uncovered)) continue;
      bool linked = true;
      for (const auto& c : chosen)
        if (!detail::strictly_linked(g_, m, c, p_, kind)) {
          linked = false;
          break;
        }
      if (!linked) continue;
      chosen.push_back(m);
      if (cover(uncovered - m, candidates, kind, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const Graph& g_;
  AbParams p_;
  std::unordered_map<VertexSet, Witness, VertexSetHash> memo_;
};

}  // namespace

CographResult is_ab_cograph(const Graph& g, AbParams p, std::size_t max_n) {
  if (g.order() > max_n || g.order() > 30)
    throw SizeLimitError("cograph search: n=" + std::to_string(g.order()) + " exceeds cap " +
                         std::to_string(max_n));
  CographResult r;
  r.cotree.params = p;
  CotreeSearch search(g, p);
  const VertexSet all = g.vertices();
  r.is_cograph = search.solve(all);
  if (r.is_cograph) r.cotree.root = search.emit(r.cotree, all);
  return r;
}

}  // namespace abmod
