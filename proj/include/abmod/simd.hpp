#pragma once

// Word-level bitset kernels. Every kernel has a portable scalar reference
// and, on x86-64, an AVX2 variant; the active table is picked once at
// startup from CPUID and can be overridden with ABMOD_SIMD=scalar|avx2.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace abmod::simd {

using Word = std::uint64_t;
using ConstWords = std::span<const Word>;
using Words = std::span<Word>;

enum class Backend { scalar, avx2 };

struct KernelTable {
  Backend backend;
  std::size_t (*popcount)(ConstWords a);
  // |a & b|
  std::size_t (*and_popcount)(ConstWords a, ConstWords b);
  // |a & ~b|
  std::size_t (*andnot_popcount)(ConstWords a, ConstWords b);
  void (*and_into)(Words dst, ConstWords a, ConstWords b);
  void (*or_into)(Words dst, ConstWords a, ConstWords b);
  void (*andnot_into)(Words dst, ConstWords a, ConstWords b);
  void (*xor_into)(Words dst, ConstWords a, ConstWords b);
  bool (*is_subset)(ConstWords a, ConstWords b);  // a & ~b == 0
  bool (*intersects)(ConstWords a, ConstWords b);
};

const KernelTable& scalar_kernels();
// Null when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

const KernelTable& active();
Backend active_backend();
std::string_view backend_name(Backend b);

// Switches the process-wide table. Returns false if the backend is not
// available on this machine. Intended for tests and benchmarks.
bool select_backend(Backend b);

inline std::size_t popcount(ConstWords a) { return active().popcount(a); }
inline std::size_t and_popcount(ConstWords a, ConstWords b) {
  return active().and_popcount(a, b);
}
inline std::size_t andnot_popcount(ConstWords a, ConstWords b) {
  return active().andnot_popcount(a, b);
}

}  // namespace abmod::simd
