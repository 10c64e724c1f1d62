// Graph-search modular closure.
//
// Unclosed outside vertices live in a refinement partition stored as
// contiguous ranges of `elems_`. Every vertex of a part has the same number
// of closed neighbours (`edges`); its closed non-neighbour count is implicit
// as closed_count - edges, so visiting z only touches the parts that meet
// N(z). A part becomes a splitter of the closed set once edges > beta and
// closed_count - edges > alpha. The second inequality flips without the part
// being touched, so parts with edges > beta are scheduled in `wake_` at the
// closed_count where that happens.

#include <algorithm>

#include "abmod/abmodule.hpp"

namespace abmod {

ClosureEngine::ClosureEngine(const Graph& g) : graph_(&g) {
  const std::size_t n = g.order();
  state_.resize(n);
  pos_.resize(n);
  part_of_.resize(n);
  wake_.resize(n + 1);
}

ClosureTrace ClosureEngine::trace(const VertexSet& a, AbParams p) {
  ClosureTrace t;
  t.result = run(a, p, &t);
  return t;
}

void ClosureEngine::flip(std::size_t id) {
  Part& part = parts_[id];
  part.alive = false;
  for (std::size_t j = part.begin; j < part.end; ++j) {
    state_[elems_[j]] = State::open;
    batch_.push_back(elems_[j]);
  }
}

void ClosureEngine::check_part(std::size_t id, std::size_t closed_count, AbParams p) {
  Part& part = parts_[id];
  if (!part.alive || part.edges <= p.beta) return;
  if (closed_count - part.edges > p.alpha) {
    flip(id);
    return;
  }
  const std::size_t at = part.edges + p.alpha + 1;
  part.wake_at = at;
  if (at < wake_.size()) wake_[at].push_back(id);
}

VertexSet ClosureEngine::run(const VertexSet& a, AbParams p, ClosureTrace* trace) {
  const Graph& g = *graph_;
  const std::size_t n = g.order();
  if (trace != nullptr) {
    trace->stages.assign(1, a);
    trace->below_threshold = a.size() < p.degenerate_bound();
  }

  if (a.size() < p.degenerate_bound()) {
    if (trace != nullptr) {
      trace->tallies.assign(n, Tally{});
      const std::size_t size = a.size();
      a.complement().for_each([&](Vertex x) {
        const std::size_t c = g.neighbour_set(x).intersection_size(a);
        trace->tallies[x] = Tally{c, size - c};
      });
    }
    return a;
  }

  elems_.clear();
  parts_.clear();
  open_.clear();
  splits_ = 0;
  for (auto& w : wake_) w.clear();

  for (Vertex v = 0; v < n; ++v) {
    if (a.contains(v)) {
      state_[v] = State::open;
      open_.push_back(v);
    } else {
      state_[v] = State::waiting;
      pos_[v] = elems_.size();
      part_of_[v] = 0;
      elems_.push_back(v);
    }
  }
  if (!elems_.empty()) parts_.push_back(Part{0, elems_.size(), 0, 0, 0, true});

  std::size_t closed_count = 0;
  for (std::size_t head = 0; head < open_.size(); ++head) {
    const Vertex z = open_[head];
    state_[z] = State::closed;
    ++closed_count;
    if (trace != nullptr) trace->visited_order.push_back(z);

    touched_.clear();
    for (Vertex u : g.neighbours(z)) {
      if (state_[u] != State::waiting) continue;
      const std::size_t id = part_of_[u];
      Part& part = parts_[id];
      if (part.marked == 0) touched_.push_back(id);
      const std::size_t slot = part.begin + part.marked;
      const Vertex displaced = elems_[slot];
      elems_[slot] = u;
      elems_[pos_[u]] = displaced;
      pos_[displaced] = pos_[u];
      pos_[u] = slot;
      ++part.marked;
    }

    batch_.clear();
    for (std::size_t id : touched_) {
      const std::size_t moved = parts_[id].marked;
      parts_[id].marked = 0;
      if (moved == parts_[id].end - parts_[id].begin) {
        ++parts_[id].edges;
        check_part(id, closed_count, p);
        continue;
      }
      Part child{parts_[id].begin, parts_[id].begin + moved, parts_[id].edges + 1, 0, 0, true};
      parts_[id].begin += moved;
      const std::size_t child_id = parts_.size();
      parts_.push_back(child);
      for (std::size_t j = child.begin; j < child.end; ++j) part_of_[elems_[j]] = child_id;
      ++splits_;
      check_part(child_id, closed_count, p);
    }

    if (closed_count < wake_.size()) {
      for (std::size_t id : wake_[closed_count])
        if (parts_[id].alive && parts_[id].wake_at == closed_count) check_part(id, closed_count, p);
      wake_[closed_count].clear();
    }

    std::sort(batch_.begin(), batch_.end());
    open_.insert(open_.end(), batch_.begin(), batch_.end());
  }

  VertexSet result(n);
  for (Vertex v = 0; v < n; ++v)
    if (state_[v] == State::closed) result.insert(v);

  if (trace != nullptr) {
    if (!(result == a)) trace->stages.push_back(result);
    trace->refinement_splits = splits_;
    trace->tallies.assign(n, Tally{});
    for (Vertex v = 0; v < n; ++v) {
      if (state_[v] != State::waiting) continue;
      const std::size_t e = parts_[part_of_[v]].edges;
      trace->tallies[v] = Tally{e, closed_count - e};
    }
  }
  return result;
}

}  // namespace abmod
