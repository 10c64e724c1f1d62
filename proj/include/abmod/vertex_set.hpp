#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "abmod/simd.hpp"

namespace abmod {

using Vertex = std::uint32_t;

/// Fixed-universe bitset of vertices. Binary operations require both operands
/// to share the same universe and throw InputError otherwise.
class VertexSet {
 public:
  using Word = simd::Word;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  /// Low `universe` bits of `mask` (universe <= 64).
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return simd::popcount(words_); }
  bool empty() const;

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  std::span<const Word> words() const { return words_; }

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  VertexSet& operator^=(const VertexSet& o);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  /// Universe minus this set.
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  std::size_t intersection_size(const VertexSet& o) const;

  /// Smallest member; universe() when empty.
  Vertex first() const;
  /// Smallest member greater than v; universe() when none.
  Vertex next(Vertex v) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> members() const;
  std::uint64_t to_mask() const;  // universe <= 64
  std::string to_string() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Lexicographic order on the ascending member lists.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  std::size_t hash() const;

 private:
  void check_same(const VertexSet& o) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace abmod
