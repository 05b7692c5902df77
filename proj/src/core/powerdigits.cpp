#include "core/powerdigits.hpp"

#include <cmath>

#include "core/numeric.hpp"

namespace onecount {

PowerDigitStream::PowerDigitStream(uint64_t p, uint32_t q, uint64_t max_digits)
    : p_(p), q_(q), max_digits_(max_digits) {
  if (p < 2) fail(errc::invalid_argument, "p must be at least 2");
  if (q < 2 || q > 255) fail(errc::invalid_argument, "base must be in [2, 255]");
  if (p > (1ull << 32)) fail(errc::invalid_argument, "p above 2^32 is not supported");
  if (max_digits < 1) fail(errc::invalid_argument, "digit budget must be positive");
}

void PowerDigitStream::advance() {
  uint64_t carry = 0;
  uint64_t sum = 0;
  for (auto& d : digits_) {
    uint64_t v = (uint64_t)d * p_ + carry;
    d = (uint8_t)(v % q_);
    carry = v / q_;
    sum += d;
  }
  while (carry) {
    if (digits_.size() >= max_digits_)
      fail(errc::out_of_budget, "digit count exceeds the configured budget");
    digits_.push_back((uint8_t)(carry % q_));
    sum += digits_.back();
    carry /= q_;
  }
  ++exponent_;
  sum_ = sum;
}

std::optional<double> PowerDigitStream::s3() const {
  if (p_ != 2 || q_ != 3 || exponent_ < 1) return std::nullopt;
  const double l32 = log3(2.0);
  double n = (double)exponent_;
  return ((double)sum_ - n * l32) / std::sqrt(n * (2.0 / 3.0) * l32);
}

std::optional<double> PowerDigitStream::sigma() const {
  if (exponent_ < 3) return std::nullopt;
  double n = (double)exponent_;
  double lqp = std::log((double)p_) / std::log((double)q_);
  double mean = (double)(q_ - 1) / 2.0 * lqp * n;
  double var = ((double)q_ * q_ - 1.0) / 6.0 * lqp * n * std::log(std::log(n));
  return ((double)sum_ - mean) / std::sqrt(var);
}

void digit_sum_series(uint64_t p, uint32_t q, uint64_t n_max,
                      const std::function<void(const DigitStatRow&)>& emit) {
  if (n_max < 1) fail(errc::invalid_argument, "n_max must be positive");
  PowerDigitStream stream(p, q);
  for (uint64_t n = 1; n <= n_max; ++n) {
    stream.advance();
    emit({n, stream.digit_sum(), stream.s3(), stream.sigma()});
  }
}

Histogram histogram(std::span<const double> values, double width, double lo, double hi) {
  if (!(width > 0)) fail(errc::invalid_argument, "bin width must be positive");
  if (!(hi > lo)) fail(errc::invalid_argument, "empty bin range");
  Histogram h{lo, hi, width, {}, 0, 0};
  h.counts.assign((size_t)std::ceil((hi - lo) / width), 0);
  for (double v : values) {
    if (v < lo) {
      ++h.underflow;
    } else if (v >= hi) {
      ++h.overflow;
    } else {
      size_t i = (size_t)((v - lo) / width);
      if (i >= h.counts.size()) i = h.counts.size() - 1;  // guard the hi edge
      ++h.counts[i];
    }
  }
  return h;
}

ExprPtr horner_expression(uint64_t n, uint32_t q) {
  if (n < 1) fail(errc::invalid_argument, "n must be positive");
  if (q < 2) fail(errc::invalid_argument, "base must be at least 2");
  std::vector<uint32_t> digits;
  for (uint64_t x = n; x > 0; x /= q) digits.push_back((uint32_t)(x % q));

  ExprPtr base = Expr::ones(q);
  ExprPtr e = Expr::ones(digits.back());
  for (size_t i = digits.size() - 1; i-- > 0;) {
    e = e->kind() == ExprKind::one ? base : Expr::mul(std::move(e), base);
    if (digits[i] > 0) e = Expr::add(std::move(e), Expr::ones(digits[i]));
  }
  return e;
}

std::vector<uint32_t> compression_points(uint64_t p, uint32_t n_max,
                                         const ComplexityTable& table) {
  if (p < 2 || n_max < 1) fail(errc::invalid_argument, "need p >= 2 and n_max >= 1");
  auto top = checked_pow(p, n_max);
  if (!top || *top > table.limit())
    fail(errc::out_of_range, "p^n_max lies beyond the table");

  std::vector<uint32_t> power_ones(n_max + 1);
  uint64_t pw = 1;
  for (uint32_t n = 1; n <= n_max; ++n) {
    pw *= p;
    power_ones[n] = table.complexity(pw);
  }

  // best[n] = min(||p^n||, min over splits of best[k] + best[n-k])
  std::vector<uint32_t> best(n_max + 1);
  best[1] = power_ones[1];
  std::vector<uint32_t> points;
  for (uint32_t n = 2; n <= n_max; ++n) {
    uint32_t split = UINT32_MAX;
    for (uint32_t k = 1; k < n; ++k) split = std::min(split, best[k] + best[n - k]);
    best[n] = std::min(power_ones[n], split);
    if (power_ones[n] < split) points.push_back(n);
  }
  return points;
}

PowerLimitReport power_limit_check(uint64_t base, const ComplexityTable& table) {
  if (base < 2) fail(errc::invalid_argument, "base must be at least 2");
  PowerLimitReport rep{true, {}};
  uint64_t pw = 1;
  for (uint32_t n = 1;; ++n) {
    if (pw > table.limit() / base) break;
    pw *= base;
    uint32_t ones = table.complexity(pw);
    double lc = (double)ones / ((double)n * log3((double)base));
    double running = rep.rows.empty() ? lc : std::min(rep.rows.back().running_min, lc);
    rep.rows.push_back({n, ones, lc, running});
  }
  const auto& rows = rep.rows;
  for (size_t a = 0; a < rows.size(); ++a) {
    for (size_t b = a; b < rows.size(); ++b) {
      if (a + b + 2 > rows.size()) break;
      if (rows[a + b + 1].ones > rows[a].ones + rows[b].ones) rep.subadditive = false;
    }
  }
  return rep;
}

}  // namespace onecount
