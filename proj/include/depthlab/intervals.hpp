#pragma once

#include <cstdint>
#include <optional>

#include "depthlab/errors.hpp"

namespace depthlab {

// Interval scheme partitioning N into consecutive blocks I_0, I_1, ...
// where I_j has length 2^j, so I_j = [2^j - 1, 2^{j+1} - 2]. Interval j is
// assigned the phi whose index equals the number of trailing zero bits of
// j+1; that reproduces the round-robin dealing: phi_0 gets every second
// interval starting with the first, phi_1 every second of the rest, etc.

inline constexpr std::uint64_t k_interval_index_cap = 48;

struct interval_bounds_t {
  std::uint64_t min;
  std::uint64_t max;
};

inline interval_bounds_t interval_bounds(std::uint64_t j) {
  if (j > k_interval_index_cap) {
    throw cap_error("interval_bounds: index " + std::to_string(j) + " beyond cap " +
                    std::to_string(k_interval_index_cap));
  }
  const std::uint64_t min = (1ull << j) - 1;
  const std::uint64_t max = (1ull << (j + 1)) - 2;
  return {min, max};
}

inline std::uint64_t interval_length(std::uint64_t j) {
  if (j > k_interval_index_cap) {
    throw cap_error("interval_length: index beyond cap");
  }
  return 1ull << j;
}

// Index i of the phi assigned to I_j.
inline std::uint32_t assigned_phi(std::uint64_t j) {
  return static_cast<std::uint32_t>(__builtin_ctzll(j + 1));
}

// First interval assigned to phi_i.
inline std::uint64_t first_interval_of_phi(std::uint32_t i) {
  return (1ull << i) - 1;
}

// Stride between consecutive phi_i intervals: I_{j + 2^{i+1}}.
inline std::uint64_t phi_interval_stride(std::uint32_t i) {
  return 1ull << (i + 1);
}

// Interval containing a given position: the unique j with
// min I_j <= pos <= max I_j.
inline std::uint64_t interval_containing(std::uint64_t pos) {
  return static_cast<std::uint64_t>(63 - __builtin_clzll(pos + 1));
}

// j such that max I_j + 1 == len, if any (len must be 2^{j+1} - 1).
inline std::optional<std::uint64_t> interval_with_closure_length(std::uint64_t len) {
  if (len == 0) return std::nullopt;
  const std::uint64_t v = len + 1;  // must be a power of two >= 2
  if ((v & (v - 1)) != 0) return std::nullopt;
  const std::uint64_t j = static_cast<std::uint64_t>(__builtin_ctzll(v)) - 1;
  if (j > k_interval_index_cap) return std::nullopt;
  return j;
}

// The phi_i interval k with max I_k + 1 < len <= max I_{k+2^{i+1}} + 1,
// if any. Unique when it exists because the half-open ranges tile.
inline std::optional<std::uint64_t> phi_interval_below_length(std::uint32_t i,
                                                              std::uint64_t len) {
  if (i > 40) return std::nullopt;
  const std::uint64_t stride = phi_interval_stride(i);
  std::uint64_t k = first_interval_of_phi(i);
  while (k + stride <= k_interval_index_cap) {
    const std::uint64_t lo = interval_bounds(k).max + 1;
    const std::uint64_t hi = interval_bounds(k + stride).max + 1;
    if (lo < len && len <= hi) return k;
    if (lo >= len) return std::nullopt;
    k += stride;
  }
  return std::nullopt;
}

}  // namespace depthlab
