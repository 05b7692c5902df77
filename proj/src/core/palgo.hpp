#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/expr.hpp"
#include "core/tables.hpp"

namespace onecount {

struct PValue {
  uint32_t ones;
  ExprPtr expr;
};

struct BoundReport {
  double hypothesis_bound;  // ||q||_log + (q-1)/log3(q), q the minimum member
  double weak_bound;        // ||Q||_log + (q-1)/log3(q), Q the max-log member
  uint64_t hypothesis_violations = 0;
  uint64_t weak_violations = 0;
  double max_log_complexity = 0.0;
  uint64_t max_n = 0;
};

struct PartlyRow {
  uint64_t p;
  double left;   // (||p|| + q - 2) / log_q(p)
  double right;  // ||q|| + q - 1
  bool pass;
};

struct DensePoint {
  std::string n_decimal;  // q^(m+k*l)*n0 + q^m - 1
  uint64_t n0;            // smallest n0 with n0 = -1 mod p for every member
  uint64_t k;             // product of (p-1) over members other than q
  uint64_t predicted_ones;
  std::optional<uint64_t> traced_ones;  // present when n fits in 63 bits
};

struct SpectrumPoint {
  uint32_t a, b;
  std::string n_decimal;  // p^a * q^b
  uint64_t ones;          // a*||p|| + b*||q||
  double log_complexity;
};

struct SpectrumReport {
  uint64_t points = 0;
  uint64_t verified = 0;
  uint64_t mismatches = 0;
};

/// A fixed set of primes with precomputed shortest plus-times expressions,
/// driving the deterministic reduction that divides by a member whenever
/// possible and subtracts one otherwise. Immutable after construction.
class PrimeSet {
 public:
  /// Validates primality, deduplicates, and takes member witnesses from a
  /// freshly built plus-times table covering the largest member.
  static PrimeSet create(std::vector<uint64_t> primes);

  const std::vector<uint64_t>& primes() const { return primes_; }
  uint64_t q() const { return primes_.front(); }
  bool contains(uint64_t p) const;

  uint32_t member_ones(uint64_t p) const;
  const ExprPtr& member_expr(uint64_t p) const;
  double member_log(uint64_t p) const;
  uint64_t min_log_member() const { return min_log_member_; }
  uint64_t max_log_member() const { return max_log_member_; }

  /// One-count of the expression the reduction builds for n. When several
  /// members divide n the smallest is used; the count is divisor-order
  /// independent (tested, not assumed).
  uint32_t ones(uint64_t n) const;
  /// Count plus the full expression; the expression evaluates to n.
  PValue complexity(uint64_t n) const;
  /// Counts for every n in [from, to] by a single bottom-up pass.
  void scan(uint64_t from, uint64_t to,
            const std::function<void(uint64_t n, uint32_t ones)>& emit) const;

  /// d_p(n) = ||n||_P - ||p*||*log_{p*}(n).
  double defect(uint64_t n, uint64_t p_star) const;

  BoundReport check_upper_bound(uint64_t from, uint64_t to) const;

  /// Per-member test of (||p|| + q - 2)/log_q(p) <= ||q|| + q - 1 for p != q.
  std::vector<PartlyRow> check_partly_condition() const;

  /// Analytic log-complexities of p^a*q^b over the exponent grid, checking
  /// the trace against a*||p||+b*||q|| for every point up to verify_limit.
  SpectrumReport power_pair_spectrum(
      uint64_t p, uint64_t q, uint32_t a_max, uint32_t b_max, uint64_t verify_limit,
      const std::function<void(const SpectrumPoint&)>& emit) const;

  /// The forced-trace point q^(m+k*l)*n0 + q^m - 1 with its predicted count
  /// m*(||q||+q-1) + k*l*||q|| + c, where c = ||n0||_P unless n0 = 1 (the
  /// trace then ends at q itself and the correction is 0).
  DensePoint dense_point(uint32_t m, uint32_t l, uint64_t max_bits = 1 << 20) const;

 private:
  PrimeSet() = default;

  size_t member_index(uint64_t p) const;

  std::vector<uint64_t> primes_;  // ascending
  std::vector<uint32_t> ones_;
  std::vector<ExprPtr> exprs_;
  uint64_t min_log_member_ = 0;
  uint64_t max_log_member_ = 0;
};

}  // namespace onecount
