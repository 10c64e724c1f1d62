// Compiled with -mavx2 -mpopcnt. Only reached through the dispatch table
// after CPUID confirms support.

#include <immintrin.h>

#include <bit>

#include "abmod/simd.hpp"

namespace abmod::simd {
namespace {

// Nibble-lookup popcount (Mula et al.); returns four 64-bit lane sums.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                       2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
  const __m256i total = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                        _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(total, _mm256_setzero_si256());
}

inline std::size_t hsum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

template <class Combine, class Tail>
std::size_t reduce_popcount(std::size_t n, Combine combine, Tail tail) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(combine(i)));
  std::size_t c = hsum(acc);
  for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(tail(i)));
  return c;
}

std::size_t popcount_avx2(ConstWords a) {
  const Word* pa = a.data();
  return reduce_popcount(
      a.size(), [&](std::size_t i) { return load(pa + i); },
      [&](std::size_t i) { return pa[i]; });
}

std::size_t and_popcount_avx2(ConstWords a, ConstWords b) {
  const Word* pa = a.data();
  const Word* pb = b.data();
  return reduce_popcount(
      a.size(),
      [&](std::size_t i) { return _mm256_and_si256(load(pa + i), load(pb + i)); },
      [&](std::size_t i) { return pa[i] & pb[i]; });
}

std::size_t andnot_popcount_avx2(ConstWords a, ConstWords b) {
  const Word* pa = a.data();
  const Word* pb = b.data();
  // _mm256_andnot_si256(x, y) computes ~x & y.
  return reduce_popcount(
      a.size(),
      [&](std::size_t i) { return _mm256_andnot_si256(load(pb + i), load(pa + i)); },
      [&](std::size_t i) { return pa[i] & ~pb[i]; });
}

template <class Vec, class Scalar>
void binary_into(Words dst, ConstWords a, ConstWords b, Vec vec, Scalar scalar) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst.data() + i, vec(load(a.data() + i), load(b.data() + i)));
  for (; i < n; ++i) dst[i] = scalar(a[i], b[i]);
}

void and_into_avx2(Words dst, ConstWords a, ConstWords b) {
  binary_into(
      dst, a, b, [](__m256i x, __m256i y) { return _mm256_and_si256(x, y); },
      [](Word x, Word y) { return x & y; });
}

void or_into_avx2(Words dst, ConstWords a, ConstWords b) {
  binary_into(
      dst, a, b, [](__m256i x, __m256i y) { return _mm256_or_si256(x, y); },
      [](Word x, Word y) { return x | y; });
}

void andnot_into_avx2(Words dst, ConstWords a, ConstWords b) {
  binary_into(
      dst, a, b, [](__m256i x, __m256i y) { return _mm256_andnot_si256(y, x); },
      [](Word x, Word y) { return x & ~y; });
}

void xor_into_avx2(Words dst, ConstWords a, ConstWords b) {
  binary_into(
      dst, a, b, [](__m256i x, __m256i y) { return _mm256_xor_si256(x, y); },
      [](Word x, Word y) { return x ^ y; });
}

bool is_subset_avx2(ConstWords a, ConstWords b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i diff = _mm256_andnot_si256(load(b.data() + i), load(a.data() + i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

bool intersects_avx2(ConstWords a, ConstWords b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    if (!_mm256_testz_si256(load(a.data() + i), load(b.data() + i))) return true;
  for (; i < n; ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

constexpr KernelTable kAvx2{
    Backend::avx2,      popcount_avx2,   and_popcount_avx2,
    andnot_popcount_avx2, and_into_avx2, or_into_avx2,
    andnot_into_avx2,   xor_into_avx2,   is_subset_avx2,
    intersects_avx2,
};

}  // namespace

const KernelTable& avx2_kernel_table() { return kAvx2; }

}  // namespace abmod::simd
