#pragma once

#include <cstdint>
#include <utility>

#include "depthlab/errors.hpp"

namespace depthlab {

// Cantor pairing <n,s> = (n+s)(n+s+1)/2 + s. Bijection N x N -> N,
// strictly increasing in each argument, and <n,s> >= |nth_string(n)|,
// which is what makes the padded strings of the settling-time analysis
// well-defined.
inline std::uint64_t cantor_pair(std::uint64_t n, std::uint64_t s) {
  const std::uint64_t d = n + s;
  if (d > 0xFFFFFFFFull || d < n) {
    throw cap_error("cantor_pair: arguments too large for exact 64-bit pairing");
  }
  return d * (d + 1) / 2 + s;
}

inline std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t code) {
  // d = floor((sqrt(8c+1)-1)/2), computed without floating point drift.
  std::uint64_t d = 0;
  {
    std::uint64_t lo = 0, hi = 0x1FFFFFFFFull;
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (mid * (mid + 1) / 2 <= code) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    d = lo;
  }
  const std::uint64_t s = code - d * (d + 1) / 2;
  return {d - s, s};
}

}  // namespace depthlab
