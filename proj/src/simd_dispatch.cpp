#include <atomic>
#include <cstdlib>
#include <string_view>

#include "abmod/simd.hpp"

namespace abmod::simd {

#if defined(ABMOD_HAVE_AVX2)
const KernelTable& avx2_kernel_table();
#endif

namespace {

[[maybe_unused]] bool cpu_has_avx2() {
#if defined(ABMOD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable* pick_initial() {
  const KernelTable* fast = avx2_kernels();
  if (const char* env = std::getenv("ABMOD_SIMD")) {
    const std::string_view want(env);
    if (want == "scalar") return &scalar_kernels();
    if (want == "avx2" && fast != nullptr) return fast;
  }
  return fast != nullptr ? fast : &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{pick_initial()};
  return table;
}

}  // namespace

const KernelTable* avx2_kernels() {
#if defined(ABMOD_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

Backend active_backend() { return active().backend; }

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool select_backend(Backend b) {
  const KernelTable* table = b == Backend::avx2 ? avx2_kernels() : &scalar_kernels();
  if (table == nullptr) return false;
  current().store(table, std::memory_order_relaxed);
  return true;
}

}  // namespace abmod::simd
