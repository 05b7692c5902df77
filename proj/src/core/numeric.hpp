#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

namespace onecount {

inline double log3(double x) { return std::log(x) / std::log(3.0); }

/// base^exp if it fits in 64 bits, nullopt otherwise.
inline std::optional<uint64_t> checked_pow(uint64_t base, uint32_t exp) {
  uint64_t r = 1;
  while (exp) {
    if (exp & 1) {
      if (__builtin_mul_overflow(r, base, &r)) return std::nullopt;
    }
    exp >>= 1;
    if (exp) {
      if (__builtin_mul_overflow(base, base, &base)) return std::nullopt;
    }
  }
  return r;
}

}  // namespace onecount
