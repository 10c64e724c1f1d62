#include "abmod/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "abmod/abmodule.hpp"
#include "abmod/combinatorics.hpp"
#include "abmod/errors.hpp"

namespace abmod {

std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::minimal_nontrivial:
      return "minimal_nontrivial";
    case FamilyKind::covering:
      return "covering";
    case FamilyKind::all_modules_oracle:
      return "all_modules_oracle";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::undetermined:
      return "undetermined";
  }
  return "unknown";
}

void canonicalize(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<VertexSet> inclusion_minimal(std::vector<VertexSet> sets) {
  canonicalize(sets);
  std::stable_sort(sets.begin(), sets.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  std::vector<VertexSet> kept;
  for (auto& s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](const VertexSet& k) { return k.is_subset_of(s); });
    if (!dominated) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<VertexSet> inclusion_maximal(std::vector<VertexSet> sets) {
  canonicalize(sets);
  std::stable_sort(sets.begin(), sets.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  std::vector<VertexSet> kept;
  for (auto& s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](const VertexSet& k) { return s.is_subset_of(k); });
    if (!dominated) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

namespace {

using SetBag = std::unordered_set<VertexSet, VertexSetHash>;

// Tuples T = P + v where P is a (k-1)-prefix and v > max(P). For a tuple of
// size alpha+beta+2 an outside x splits T exactly when |N(x) ∩ T| = beta+1,
// so with c(x) = |N(x) ∩ P| the splitters are
//   {c = beta+1} \ N(v)  ∪  {c = beta} ∩ N(v).
// Tuples without splitters are modules already; the others are closed from
// T ∪ S(T), which has the same closure, and memoised by that start set.
class BatchedWorker {
 public:
  BatchedWorker(const Graph& g, AbParams p) : g_(g), p_(p), engine_(g), count_(g.order(), 0) {}

  void run_first(Vertex first, SetBag& out) {
    const std::size_t n = g_.order();
    const std::size_t k = p_.degenerate_bound();
    std::vector<Vertex> tail;
    for (Vertex v = first + 1; v < n; ++v) tail.push_back(v);
    for_each_combination(tail, k - 2, [&](const std::vector<Vertex>& rest) {
      std::vector<Vertex> prefix;
      prefix.reserve(k - 1);
      prefix.push_back(first);
      prefix.insert(prefix.end(), rest.begin(), rest.end());
      run_prefix(prefix, out);
    });
  }

 private:
  void run_prefix(const std::vector<Vertex>& prefix, SetBag& out) {
    const std::size_t n = g_.order();
    const Vertex last = prefix.back();
    if (last + 1 >= n) return;

    VertexSet pset(n, std::span<const Vertex>(prefix));
    for (Vertex u : prefix)
      for (Vertex x : g_.neighbours(u)) ++count_[x];
    VertexSet at_beta(n);
    VertexSet above_beta(n);
    for (Vertex x = 0; x < n; ++x) {
      if (!pset.contains(x)) {
        if (count_[x] == p_.beta) at_beta.insert(x);
        else if (count_[x] == p_.beta + 1) above_beta.insert(x);
      }
    }
    for (Vertex u : prefix)
      for (Vertex x : g_.neighbours(u)) --count_[x];

    for (Vertex v = last + 1; v < n; ++v) {
      const VertexSet& nv = g_.neighbour_set(v);
      VertexSet split = above_beta - nv;
      split |= at_beta & nv;
      split.erase(v);
      VertexSet start = pset;
      start.insert(v);
      if (split.empty()) {
        out.insert(std::move(start));
        continue;
      }
      start |= split;
      auto it = memo_.find(start);
      if (it == memo_.end()) {
        VertexSet closed = engine_.closure(start, p_);
        it = memo_.emplace(std::move(start), std::move(closed)).first;
      }
      if (it->second.size() < n) out.insert(it->second);
    }
  }

  const Graph& g_;
  AbParams p_;
  ClosureEngine engine_;
  std::vector<std::size_t> count_;
  std::unordered_map<VertexSet, VertexSet, VertexSetHash> memo_;
};

void per_tuple_first(const Graph& g, AbParams p, Vertex first, ClosureEngine& engine, SetBag& out) {
  const std::size_t n = g.order();
  const std::size_t k = p.degenerate_bound();
  std::vector<Vertex> tail;
  for (Vertex v = first + 1; v < n; ++v) tail.push_back(v);
  for_each_combination(tail, k - 1, [&](const std::vector<Vertex>& rest) {
    VertexSet t(n, std::span<const Vertex>(rest));
    t.insert(first);
    VertexSet closed = engine.closure(t, p);
    if (closed.size() < n) out.insert(std::move(closed));
  });
}

}  // namespace

ModuleFamily minimal_nontrivial_modules(const Graph& g, AbParams p, EnumerationOptions opts) {
  const std::size_t n = g.order();
  if (n < p.degenerate_bound() + 1)
    throw InputError("minimal_nontrivial_modules: graph of order " + std::to_string(n) +
                     " is degenerate for " + p.to_string() + " (needs n >= " +
                     std::to_string(p.degenerate_bound() + 1) + ")");

  unsigned jobs = opts.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opts.jobs;
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(n));

  std::atomic<Vertex> next{0};
  std::mutex merge_lock;
  SetBag all;

  auto work = [&] {
    SetBag local;
    if (opts.driver == EnumerationDriver::batched) {
      BatchedWorker worker(g, p);
      for (Vertex f = next++; f < n; f = next++) worker.run_first(f, local);
    } else {
      ClosureEngine engine(g);
      for (Vertex f = next++; f < n; f = next++) per_tuple_first(g, p, f, engine, local);
    }
    std::lock_guard<std::mutex> hold(merge_lock);
    all.merge(local);
  };

  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  ModuleFamily fam;
  fam.params = p;
  fam.kind = FamilyKind::minimal_nontrivial;
  fam.members = inclusion_minimal(std::vector<VertexSet>(all.begin(), all.end()));
  return fam;
}

ModuleFamily all_modules_oracle(const Graph& g, AbParams p, std::size_t max_n) {
  const std::size_t n = g.order();
  if (n > max_n || n > 63)
    throw SizeLimitError("all_modules_oracle: n=" + std::to_string(n) + " exceeds cap " +
                         std::to_string(max_n));
  ModuleFamily fam;
  fam.params = p;
  fam.kind = FamilyKind::all_modules_oracle;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    VertexSet s = VertexSet::from_mask(n, mask);
    if (is_ab_module(g, s, p)) fam.members.push_back(std::move(s));
  }
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

ModuleFamily covering(const Graph& g, AbParams p, EnumerationOptions opts) {
  ModuleFamily fam = minimal_nontrivial_modules(g, p, opts);
  fam.kind = FamilyKind::covering;
  VertexSet covered = g.empty_set();
  for (const auto& m : fam.members) covered |= m;
  covered.complement().for_each([&](Vertex v) { fam.members.push_back(VertexSet(g.order(), {v})); });
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

PrimeResult is_prime(const Graph& g, AbParams p, EnumerationOptions opts) {
  if (g.order() <= p.degenerate_bound()) return {true, true};
  return {minimal_nontrivial_modules(g, p, opts).members.empty(), false};
}

Verdict is_brittle(const Graph& g, AbParams p, BrittleMode mode, std::size_t max_n) {
  const std::size_t n = g.order();
  if (mode == BrittleMode::fast) {
    std::size_t lo = n;
    std::size_t hi = 0;
    for (Vertex v = 0; v < n; ++v) {
      lo = std::min(lo, g.degree(v));
      hi = std::max(hi, g.degree(v));
    }
    // A vertex of degree >= n-1-alpha misses at most alpha vertices of any set.
    if (n == 0 || lo + 1 + p.alpha >= n || hi <= p.beta) return Verdict::yes;
    return Verdict::undetermined;
  }
  if (n > max_n || n > 63)
    throw SizeLimitError("is_brittle: n=" + std::to_string(n) + " exceeds cap " +
                         std::to_string(max_n));
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < p.degenerate_bound() || size >= n) continue;
    if (!is_ab_module(g, VertexSet::from_mask(n, mask), p)) return Verdict::no;
  }
  return Verdict::yes;
}

}  // namespace abmod
