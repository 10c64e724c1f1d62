#include "abmod/ksplitter.hpp"

#include <bit>
#include <random>
#include <string>

#include "abmod/abmodule.hpp"
#include "abmod/enumeration.hpp"
#include "abmod/errors.hpp"

namespace abmod {

KSplitterReport k_splitter_report(const Graph& g, const VertexSet& m, std::size_t k) {
  KSplitterReport r;
  r.classical_splitters = splitters(g, m, AbParams{0, 0});
  r.k = k;
  r.is_k_module = r.classical_splitters.size() <= k;
  return r;
}

KLawReport k_splitter_laws_check(const Graph& g, std::size_t k, std::size_t max_n,
                                 KLawOptions opts) {
  const std::size_t n = g.order();
  if (n > max_n || n > 24)
    throw SizeLimitError("k-splitter law scan: n=" + std::to_string(n) + " exceeds cap " +
                         std::to_string(max_n));
  const Graph co = complement(g);
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<std::size_t> count(limit, 0);
  std::vector<std::uint64_t> modules;
  KLawReport rep;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const VertexSet s = VertexSet::from_mask(n, mask);
    const VertexSet split = splitters(g, s, AbParams{0, 0});
    count[mask] = split.size();
    if (!(split == splitters(co, s, AbParams{0, 0})))
      rep.violations.push_back({"complement", s, s});
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if ((size <= 1 || size + k >= n) && count[mask] > k) rep.violations.push_back({"trivial", s, s});
    if (count[mask] <= k) modules.push_back(mask);
  }
  rep.modules = modules.size();

  auto check = [&](std::uint64_t a, std::uint64_t b) {
    ++rep.pairs_checked;
    auto fail = [&](const char* law) {
      rep.violations.push_back({law, VertexSet::from_mask(n, a), VertexSet::from_mask(n, b)});
    };
    if ((a & b) != 0) {
      if (count[a | b] > 2 * k) fail("union");
      if (count[a & b] > 2 * k) fail("intersection");
    }
    if (count[a & ~b] > k + static_cast<std::size_t>(std::popcount(a & b))) fail("difference");
    // A splitter s of a splits every superset of a that avoids s; b ∪ a is
    // such a superset for every splitter outside b.
    const VertexSet sa = splitters(g, VertexSet::from_mask(n, a), AbParams{0, 0});
    const VertexSet sup = splitters(g, VertexSet::from_mask(n, a | b), AbParams{0, 0});
    if (!(sa - VertexSet::from_mask(n, a | b)).is_subset_of(sup)) fail("monotonicity");
  };

  if (opts.sample_pairs == 0) {
    for (std::size_t i = 0; i < modules.size(); ++i)
      for (std::size_t j = 0; j < modules.size(); ++j)
        if (i != j) check(modules[i], modules[j]);
  } else if (!modules.empty()) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, modules.size() - 1);
    for (std::size_t t = 0; t < opts.sample_pairs; ++t) check(modules[pick(rng)], modules[pick(rng)]);
  }
  return rep;
}

std::vector<VertexSet> minimal_k_splitter_supersets(const Graph& g, const VertexSet& a,
                                                    std::size_t k, std::size_t max_n) {
  const std::size_t n = g.order();
  if (n > max_n || n > 30)
    throw SizeLimitError("minimal k-splitter supersets: n=" + std::to_string(n) +
                         " exceeds cap " + std::to_string(max_n));
  const std::uint64_t base = a.to_mask();
  std::vector<VertexSet> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if ((mask & base) != base) continue;
    const VertexSet s = VertexSet::from_mask(n, mask);
    if (k_splitter_report(g, s, k).is_k_module) found.push_back(s);
  }
  return inclusion_minimal(std::move(found));
}

}  // namespace abmod
