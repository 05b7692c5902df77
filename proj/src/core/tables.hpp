#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/expr.hpp"

namespace onecount {

struct ChampionRecord {
  uint64_t n;
  uint8_t ones;
  double log_complexity;  // ones / log3(n)
};

/// Largest value whose complexity is exactly k (Selfridge's closed form):
/// 1 for k=1, then 2*3^j, 3*3^j, 4*3^j for k = 3j+2, 3j+3, 3j+4.
/// Saturates at UINT64_MAX for k beyond the 64-bit range.
uint64_t selfridge_e(uint32_t k);

/// Byte-packed complexity values for 1..limit in one basis, built by the rank
/// sieve: classes of equal complexity are combined pairwise through products,
/// sums and (minus basis) both differences, rank by rank.
///
/// A completed table is immutable; all queries are const and thread-safe.
class ComplexityTable {
 public:
  static ComplexityTable build(uint64_t limit, Basis basis);
  static ComplexityTable load(const std::string& path);
  void save(const std::string& path) const;

  Basis basis() const { return basis_; }
  uint64_t limit() const { return limit_; }

  uint8_t complexity(uint64_t n) const;
  double log_complexity(uint64_t n) const;  // n > 1

  /// Minimal witness with the documented tie-break: product before sum before
  /// difference, smaller first operand first.
  ExprPtr shortest_expression(uint64_t n) const;

  /// j-th largest m with complexity(m) <= k. Requires selfridge_e(k) <= limit,
  /// otherwise the global rank cannot be certified from this table.
  uint64_t e_kth(uint32_t k, uint32_t j) const;
  /// Smallest m with complexity(m) == k.
  uint64_t e_min(uint32_t k) const;

  /// `top` records with the largest log-complexity among 2..bound, descending;
  /// ties broken toward smaller n.
  std::vector<ChampionRecord> champions(uint64_t bound, uint32_t top) const;

  /// values[n] for n in 1..limit; index 0 is unused and holds 0.
  std::span<const uint8_t> raw_values() const { return {values_.data(), values_.size()}; }

  /// Value of n for 1 <= n <= limit + minuend_window(); entries above the
  /// limit carry the product/sum-rooted complexity used for subtraction
  /// minuends, 0 where unknown.
  uint32_t value_at(uint64_t n) const {
    if (n == 0) return 0;
    if (n <= limit_) return values_[n];
    uint64_t i = n - limit_ - 1;
    return i < window_.size() ? window_[i] : 0;
  }
  uint64_t minuend_window() const { return window_.size(); }

 private:
  ComplexityTable(Basis basis, uint64_t limit) : basis_(basis), limit_(limit) {}

  void rebuild_window();
  ExprPtr reconstruct(uint64_t n) const;

  Basis basis_;
  uint64_t limit_;
  std::vector<uint8_t> values_;  // size limit_+1, values_[0] unused
  std::vector<uint8_t> window_;  // minus basis: values for limit+1 .. limit+W
};

}  // namespace onecount
