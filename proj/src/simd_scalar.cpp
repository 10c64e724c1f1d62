#include "abmod/simd.hpp"

#include <bit>

namespace abmod::simd {
namespace {

std::size_t popcount_scalar(ConstWords a) {
  std::size_t c = 0;
  for (Word w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t and_popcount_scalar(ConstWords a, ConstWords b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t andnot_popcount_scalar(ConstWords a, ConstWords b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return c;
}

void and_into_scalar(Words dst, ConstWords a, ConstWords b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

void or_into_scalar(Words dst, ConstWords a, ConstWords b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] | b[i];
}

void andnot_into_scalar(Words dst, ConstWords a, ConstWords b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & ~b[i];
}

void xor_into_scalar(Words dst, ConstWords a, ConstWords b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] ^ b[i];
}

bool is_subset_scalar(ConstWords a, ConstWords b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

bool intersects_scalar(ConstWords a, ConstWords b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

constexpr KernelTable kScalar{
    Backend::scalar,      popcount_scalar,   and_popcount_scalar,
    andnot_popcount_scalar, and_into_scalar, or_into_scalar,
    andnot_into_scalar,   xor_into_scalar,   is_subset_scalar,
    intersects_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace abmod::simd
