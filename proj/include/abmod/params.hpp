#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "abmod/errors.hpp"

namespace abmod {

/// Error budgets of an (alpha, beta)-module: every outside vertex may miss at
/// most `alpha` edges into the set, or have at most `beta` edges into it.
struct AbParams {
  std::size_t alpha = 0;
  std::size_t beta = 0;

  constexpr std::size_t total() const { return alpha + beta; }
  /// Sets of at most this size are always modules.
  constexpr std::size_t trivial_bound() const { return alpha + beta + 1; }
  /// Graphs of at most this order are degenerate.
  constexpr std::size_t degenerate_bound() const { return alpha + beta + 2; }
  constexpr AbParams swapped() const { return {beta, alpha}; }

  friend constexpr bool operator==(const AbParams&, const AbParams&) = default;

  std::string to_string() const {
    return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
  }
};

/// Rejects budgets with max(alpha, beta) >= n - 1 for a graph of order n.
inline void check_params(AbParams p, std::size_t n) {
  const std::size_t hi = p.alpha > p.beta ? p.alpha : p.beta;
  if (n < 2 || hi >= n - 1)
    throw InputError("budgets " + p.to_string() + " require max(alpha,beta) < n-1 (n=" +
                     std::to_string(n) + ")");
}

/// Cap for exhaustive oracles; ABMOD_MAX_ORACLE_N overrides the default.
inline std::size_t oracle_cap(std::size_t fallback = 14) {
  if (const char* env = std::getenv("ABMOD_MAX_ORACLE_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

}  // namespace abmod
