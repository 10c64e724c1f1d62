#include <string>

#include "abmod/abmodule.hpp"
#include "abmod/decomposition.hpp"
#include "abmod/errors.hpp"

namespace abmod {

namespace {

// Assigns vertices in id order, vertex 0 on side A. cut_deg[v] counts the
// crossing edges at v among assigned vertices; two of them kill the branch.
class CutSearch {
 public:
  explicit CutSearch(const Graph& g) : g_(g), side_(g.order(), 0), cut_deg_(g.order(), 0) {}

  bool run() { return assign(1, 0); }

  MatchingCut result() const {
    MatchingCut c{g_.empty_set(), g_.empty_set(), {}};
    for (Vertex v = 0; v < g_.order(); ++v) (side_[v] == 0 ? c.side_a : c.side_b).insert(v);
    for (const auto& [u, v] : g_.edges())
      if (side_[u] != side_[v]) c.cut_edges.emplace_back(u, v);
    return c;
  }

 private:
  bool assign(Vertex v, std::size_t on_b) {
    const std::size_t n = g_.order();
    if (v == n) return on_b > 0;
    for (int s : {0, 1}) {
      side_[v] = s;
      bool ok = true;
      std::vector<Vertex> bumped;
      for (Vertex u : g_.neighbours(v)) {
        if (u >= v || side_[u] == s) continue;
        if (cut_deg_[u] > 0 || cut_deg_[v] > 0) {
          ok = false;
          break;
        }
        ++cut_deg_[u];
        ++cut_deg_[v];
        bumped.push_back(u);
      }
      if (ok && assign(v + 1, on_b + static_cast<std::size_t>(s))) return true;
      for (Vertex u : bumped) {
        --cut_deg_[u];
        --cut_deg_[v];
      }
    }
    side_[v] = 0;
    return false;
  }

  const Graph& g_;
  std::vector<int> side_;
  std::vector<std::size_t> cut_deg_;
};

}  // namespace

std::optional<MatchingCut> matching_cut(const Graph& g, std::size_t max_n) {
  if (g.order() > max_n)
    throw SizeLimitError("matching cut search: n=" + std::to_string(g.order()) + " exceeds cap " +
                         std::to_string(max_n));
  if (g.order() < 2) return std::nullopt;
  CutSearch search(g);
  if (!search.run()) return std::nullopt;
  return search.result();
}

std::optional<std::pair<VertexSet, VertexSet>> two_part_parallel_brittle(const Graph& g,
                                                                         std::size_t max_n) {
  const std::size_t n = g.order();
  if (n > max_n || n > 30)
    throw SizeLimitError("brittle split search: n=" + std::to_string(n) + " exceeds cap " +
                         std::to_string(max_n));
  if (n < 2) return std::nullopt;
  const AbParams p{0, 1};
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << (n - 1)); ++mask) {
    VertexSet a(n, {0});
    for (std::size_t i = 0; i + 1 < n; ++i)
      if ((mask >> i) & 1U) a.insert(static_cast<Vertex>(i + 1));
    const VertexSet b = a.complement();
    if (!is_beta_non_connected(g, a, b, p)) continue;
    if (brittle_decomposition_check(g, {a, b}, p)) return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace abmod
