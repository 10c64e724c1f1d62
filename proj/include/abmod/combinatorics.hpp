#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

namespace abmod {

/// Calls f(const std::vector<T>&) for every r-element combination of `items`
/// in lexicographic order of positions. f may return false to stop early;
/// the function then returns false.
template <class T, class F>
bool for_each_combination(const std::vector<T>& items, std::size_t r, F&& f) {
  const std::size_t n = items.size();
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<T> pick(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) pick[i] = items[idx[i]];
    if constexpr (std::is_same_v<decltype(f(pick)), bool>) {
      if (!f(pick)) return false;
    } else {
      f(pick);
    }
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Binomial coefficient, saturating at SIZE_MAX.
inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t num = n - k + i;
    if (r > static_cast<std::size_t>(-1) / num) return static_cast<std::size_t>(-1);
    r = r * num / i;
  }
  return r;
}

}  // namespace abmod
