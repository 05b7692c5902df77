#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "core/expr.hpp"
#include "core/tables.hpp"

namespace onecount {

/// Little-endian base-q digits of p^n, advanced one exponent at a time by an
/// in-place multiply with carry propagation. Single-threaded by nature.
class PowerDigitStream {
 public:
  PowerDigitStream(uint64_t p, uint32_t q, uint64_t max_digits = 1ull << 24);

  void advance();  // exponent+1; fails with out_of_budget past max_digits

  uint64_t p() const { return p_; }
  uint32_t q() const { return q_; }
  uint64_t exponent() const { return exponent_; }
  std::span<const uint8_t> digits() const { return {digits_.data(), digits_.size()}; }
  uint64_t digit_sum() const { return sum_; }

  /// Centered and normed digit sum (S - n*log3(2)) / sqrt(n*(2/3)*log3(2)),
  /// defined for (p,q) = (2,3) and n >= 1.
  std::optional<double> s3() const;
  /// Iterated-logarithm-scaled digit sum, defined for n >= 3; logs natural.
  std::optional<double> sigma() const;

 private:
  uint64_t p_;
  uint32_t q_;
  uint64_t max_digits_;
  uint64_t exponent_ = 0;
  uint64_t sum_ = 1;
  std::vector<uint8_t> digits_{1};  // p^0
};

struct DigitStatRow {
  uint64_t n;
  uint64_t digit_sum;
  std::optional<double> s3;
  std::optional<double> sigma;
};

/// Streams rows for n = 1..n_max in one pass.
void digit_sum_series(uint64_t p, uint32_t q, uint64_t n_max,
                      const std::function<void(const DigitStatRow&)>& emit);

struct Histogram {
  double lo, hi, width;
  std::vector<uint64_t> counts;  // half-open bins [lo + i*width, lo + (i+1)*width)
  uint64_t underflow = 0;
  uint64_t overflow = 0;
};

Histogram histogram(std::span<const double> values, double width, double lo, double hi);

/// Base-q positional expression ((a_m*q + a_{m-1})*q + ...)*q + a_0 with q and
/// each digit written as chains of ones; zero digits and a leading 1 are
/// elided. count_ones <= floor(log_q n)*q + digit sum.
ExprPtr horner_expression(uint64_t n, uint32_t q);

/// Exponents n <= n_max where the power's complexity beats every product of
/// expressions of smaller powers of p. Needs p^n_max inside the table.
std::vector<uint32_t> compression_points(uint64_t p, uint32_t n_max, const ComplexityTable& table);

struct PowerLimitRow {
  uint32_t exponent;
  uint32_t ones;
  double log_complexity;
  double running_min;
};

struct PowerLimitReport {
  bool subadditive;  // ||k^(a+b)|| <= ||k^a|| + ||k^b|| for all pairs in range
  std::vector<PowerLimitRow> rows;
};

PowerLimitReport power_limit_check(uint64_t base, const ComplexityTable& table);

}  // namespace onecount
