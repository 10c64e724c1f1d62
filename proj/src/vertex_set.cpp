#include "abmod/vertex_set.hpp"

#include <algorithm>

#include "abmod/errors.hpp"

namespace abmod {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.trim();
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw InputError("from_mask: universe exceeds 64");
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_)
    throw InputError("vertex " + std::to_string(v) + " outside universe of size " +
                     std::to_string(universe_));
  words_[v >> 6] |= Word{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(Word{1} << (v & 63));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

void VertexSet::check_same(const VertexSet& o) const {
  if (universe_ != o.universe_)
    throw InputError("vertex sets over different universes (" + std::to_string(universe_) +
                     " vs " + std::to_string(o.universe_) + ")");
}

void VertexSet::trim() {
  const std::size_t rem = universe_ & 63;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same(o);
  simd::active().and_into(words_, words_, o.words_);
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same(o);
  simd::active().or_into(words_, words_, o.words_);
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same(o);
  simd::active().andnot_into(words_, words_, o.words_);
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
  check_same(o);
  simd::active().xor_into(words_, words_, o.words_);
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out = full(universe_);
  out -= *this;
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same(o);
  return simd::active().is_subset(words_, o.words_);
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same(o);
  return simd::active().intersects(words_, o.words_);
}

std::size_t VertexSet::intersection_size(const VertexSet& o) const {
  check_same(o);
  return simd::and_popcount(words_, o.words_);
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  return static_cast<Vertex>(universe_);
}

Vertex VertexSet::next(Vertex v) const {
  std::size_t start = static_cast<std::size_t>(v) + 1;
  if (start >= universe_) return static_cast<Vertex>(universe_);
  std::size_t w = start >> 6;
  Word bits = words_[w] & (~Word{0} << (start & 63));
  while (true) {
    if (bits != 0)
      return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    if (++w == words_.size()) return static_cast<Vertex>(universe_);
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe_ > 64) throw InputError("to_mask: universe exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first_member = true;
  for_each([&](Vertex v) {
    if (!first_member) s += ",";
    s += std::to_string(v);
    first_member = false;
  });
  return s + "}";
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  a.check_same(b);
  Vertex x = a.first();
  Vertex y = b.first();
  const auto end = static_cast<Vertex>(a.universe_);
  while (x != end && y != end) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == end && y != end;
}

std::size_t VertexSet::hash() const {
  std::size_t h = std::hash<std::size_t>{}(universe_);
  for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace abmod
