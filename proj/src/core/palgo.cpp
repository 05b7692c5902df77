#include "core/palgo.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "core/factor.hpp"
#include "core/numeric.hpp"

namespace onecount {

namespace {

using boost::multiprecision::cpp_int;

constexpr uint64_t kMaxMemberPrime = 10000000;  // internal witness table bound
constexpr uint64_t kMaxScanSpan = 1u << 28;     // 1 GiB of 32-bit counts

}  // namespace

PrimeSet PrimeSet::create(std::vector<uint64_t> primes) {
  if (primes.empty()) fail(errc::invalid_argument, "prime set must be nonempty");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (uint64_t p : primes) {
    if (!is_prime(p)) fail(errc::invalid_argument, std::to_string(p) + " is not prime");
  }
  if (primes.back() > kMaxMemberPrime)
    fail(errc::invalid_argument, "member primes above 1e7 are not supported");

  PrimeSet ps;
  ps.primes_ = std::move(primes);
  ComplexityTable table = ComplexityTable::build(ps.primes_.back(), Basis::plus_times);
  for (uint64_t p : ps.primes_) {
    ps.ones_.push_back(table.complexity(p));
    ps.exprs_.push_back(table.shortest_expression(p));
  }
  ps.min_log_member_ = ps.primes_.front();
  ps.max_log_member_ = ps.primes_.front();
  for (size_t i = 1; i < ps.primes_.size(); ++i) {
    if (ps.member_log(ps.primes_[i]) < ps.member_log(ps.min_log_member_))
      ps.min_log_member_ = ps.primes_[i];
    if (ps.member_log(ps.primes_[i]) > ps.member_log(ps.max_log_member_))
      ps.max_log_member_ = ps.primes_[i];
  }
  return ps;
}

size_t PrimeSet::member_index(uint64_t p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p)
    fail(errc::invalid_argument, std::to_string(p) + " is not a member");
  return (size_t)(it - primes_.begin());
}

bool PrimeSet::contains(uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

uint32_t PrimeSet::member_ones(uint64_t p) const { return ones_[member_index(p)]; }

const ExprPtr& PrimeSet::member_expr(uint64_t p) const { return exprs_[member_index(p)]; }

double PrimeSet::member_log(uint64_t p) const {
  return (double)member_ones(p) / log3((double)p);
}

uint32_t PrimeSet::ones(uint64_t n) const {
  if (n < 1) fail(errc::invalid_argument, "n must be positive");
  uint64_t total = 0;
  uint64_t x = n;
  while (true) {
    if (x == 1) {
      total += 1;
      break;
    }
    if (contains(x)) {
      total += member_ones(x);
      break;
    }
    bool divided = false;
    for (size_t i = 0; i < primes_.size(); ++i) {
      if (x % primes_[i] == 0) {
        total += ones_[i];
        x /= primes_[i];
        divided = true;
        break;
      }
    }
    if (!divided) {
      total += 1;
      x -= 1;
    }
  }
  return (uint32_t)total;
}

PValue PrimeSet::complexity(uint64_t n) const {
  if (n < 1) fail(errc::invalid_argument, "n must be positive");
  // record the reduction, then fold the expression back to front
  std::vector<int64_t> steps;  // >=0: divided by primes_[i]; -1: subtracted one
  uint64_t x = n;
  ExprPtr expr;
  while (true) {
    if (x == 1) {
      expr = Expr::one();
      break;
    }
    if (contains(x)) {
      expr = member_expr(x);
      break;
    }
    bool divided = false;
    for (size_t i = 0; i < primes_.size(); ++i) {
      if (x % primes_[i] == 0) {
        steps.push_back((int64_t)i);
        x /= primes_[i];
        divided = true;
        break;
      }
    }
    if (!divided) {
      steps.push_back(-1);
      x -= 1;
    }
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    expr = *it < 0 ? Expr::add(Expr::one(), std::move(expr))
                   : Expr::mul(exprs_[(size_t)*it], std::move(expr));
  }
  return {(uint32_t)expr->count_ones(), std::move(expr)};
}

void PrimeSet::scan(uint64_t from, uint64_t to,
                    const std::function<void(uint64_t, uint32_t)>& emit) const {
  if (from < 1 || from > to) fail(errc::invalid_argument, "bad scan range");
  if (to > kMaxScanSpan) fail(errc::out_of_budget, "scan range too large for the bottom-up pass");
  std::vector<uint32_t> counts(to + 1, 0);
  counts[1] = 1;
  for (uint64_t x = 2; x <= to; ++x) {
    if (contains(x)) {
      counts[x] = member_ones(x);
      continue;
    }
    uint32_t c = 0;
    bool divided = false;
    for (size_t i = 0; i < primes_.size(); ++i) {
      if (x % primes_[i] == 0) {
        c = ones_[i] + counts[x / primes_[i]];
        divided = true;
        break;
      }
    }
    counts[x] = divided ? c : 1 + counts[x - 1];
  }
  for (uint64_t x = from; x <= to; ++x) emit(x, counts[x]);
}

double PrimeSet::defect(uint64_t n, uint64_t p_star) const {
  if (n < 1) fail(errc::invalid_argument, "n must be positive");
  uint32_t po = member_ones(p_star);  // validates membership
  return (double)ones(n) - (double)po * (std::log((double)n) / std::log((double)p_star));
}

BoundReport PrimeSet::check_upper_bound(uint64_t from, uint64_t to) const {
  if (from < 2) fail(errc::invalid_argument, "log-complexity needs n >= 2");
  BoundReport rep;
  const uint64_t qv = q();
  rep.hypothesis_bound = member_log(qv) + (double)(qv - 1) / log3((double)qv);
  rep.weak_bound = member_log(max_log_member_) + (double)(qv - 1) / log3((double)qv);
  scan(from, to, [&](uint64_t n, uint32_t c) {
    double lc = (double)c / log3((double)n);
    if (lc > rep.max_log_complexity) {
      rep.max_log_complexity = lc;
      rep.max_n = n;
    }
    if (lc > rep.hypothesis_bound) ++rep.hypothesis_violations;
    if (lc > rep.weak_bound) ++rep.weak_violations;
  });
  return rep;
}

std::vector<PartlyRow> PrimeSet::check_partly_condition() const {
  std::vector<PartlyRow> rows;
  const uint64_t qv = q();
  const double right = (double)member_ones(qv) + (double)(qv - 1);
  for (uint64_t p : primes_) {
    if (p == qv) continue;
    double log_q_p = std::log((double)p) / std::log((double)qv);
    double left = ((double)member_ones(p) + (double)(qv - 2)) / log_q_p;
    rows.push_back({p, left, right, left <= right + 1e-9});
  }
  return rows;
}

SpectrumReport PrimeSet::power_pair_spectrum(
    uint64_t p, uint64_t qm, uint32_t a_max, uint32_t b_max, uint64_t verify_limit,
    const std::function<void(const SpectrumPoint&)>& emit) const {
  const uint32_t po = member_ones(p);
  const uint32_t qo = member_ones(qm);
  SpectrumReport rep;
  for (uint32_t a = 0; a <= a_max; ++a) {
    for (uint32_t b = 0; b <= b_max; ++b) {
      if (a == 0 && b == 0) continue;
      cpp_int n = boost::multiprecision::pow(cpp_int(p), a) *
                  boost::multiprecision::pow(cpp_int(qm), b);
      uint64_t count = (uint64_t)a * po + (uint64_t)b * qo;
      double logn3 = (double)a * log3((double)p) + (double)b * log3((double)qm);
      SpectrumPoint point{a, b, n.str(), count, (double)count / logn3};
      ++rep.points;
      if (n <= verify_limit) {
        ++rep.verified;
        if (ones((uint64_t)n) != count) ++rep.mismatches;
      }
      if (emit) emit(point);
    }
  }
  return rep;
}

DensePoint PrimeSet::dense_point(uint32_t m, uint32_t l, uint64_t max_bits) const {
  if (m < 1 || l < 1) fail(errc::invalid_argument, "m and l must be positive");
  const uint64_t qv = q();

  uint64_t k = 1;
  for (uint64_t p : primes_) {
    if (p == qv) continue;
    if (__builtin_mul_overflow(k, p - 1, &k)) fail(errc::out_of_budget, "k overflows 64 bits");
  }
  uint64_t n0 = 1;
  for (uint64_t p : primes_) {
    if (__builtin_mul_overflow(n0, p, &n0)) fail(errc::out_of_budget, "n0 overflows 64 bits");
  }
  n0 -= 1;  // n0 = -1 mod p for every member, the smallest positive solution

  uint64_t exp_hi = (uint64_t)m + (uint64_t)k * l;
  double bits = (double)exp_hi * std::log2((double)qv) + 64.0;
  if (bits > (double)max_bits) fail(errc::out_of_budget, "dense point exceeds the digit budget");

  cpp_int n = boost::multiprecision::pow(cpp_int(qv), (unsigned)exp_hi) * n0 +
              boost::multiprecision::pow(cpp_int(qv), m) - 1;

  DensePoint point;
  point.n_decimal = n.str();
  point.n0 = n0;
  point.k = k;
  point.predicted_ones = (uint64_t)m * (member_ones(qv) + qv - 1) +
                         (uint64_t)k * l * member_ones(qv) + (n0 > 1 ? ones(n0) : 0);
  if (n < cpp_int(1) << 63) point.traced_ones = ones((uint64_t)n);
  return point;
}

}  // namespace onecount
