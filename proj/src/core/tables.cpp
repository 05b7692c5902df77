#include "core/tables.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <queue>

#include <boost/multiprecision/cpp_int.hpp>

#include "core/numeric.hpp"

namespace onecount {

namespace {

using boost::multiprecision::cpp_int;

constexpr uint8_t kFormatVersion = 1;
constexpr char kMagic[4] = {'I', 'C', 'T', '1'};
constexpr uint32_t kMaxRank = 254;

/// Proved cap on the largest minus-basis complexity occurring at or below n:
/// values never exceed 6*log6(n) + 5.890.
uint32_t minus_rank_bound(uint64_t limit) {
  if (limit < 2) return 7;
  return (uint32_t)std::ceil(6.0 * std::log((double)limit) / std::log(6.0) + 5.890) + 1;
}

/// How far above the limit subtraction minuends must be kept. A minuend above
/// the limit belongs to a class c with selfridge_e(c) > limit, so its
/// subtrahend class j satisfies j <= K - c_min, and the minuend itself is at
/// most limit + selfridge_e(j).
uint64_t minuend_window_size(uint64_t limit) {
  uint32_t k_ub = minus_rank_bound(limit);
  uint32_t c_min = 1;
  while (selfridge_e(c_min) <= limit) ++c_min;
  if (k_ub <= c_min) return 0;
  return selfridge_e(k_ub - c_min);
}

uint32_t crc_of(const uint8_t* data, uint64_t len) {
  uLong crc = crc32(0L, Z_NULL, 0);
  while (len > 0) {
    uInt chunk = (uInt)std::min<uint64_t>(len, 1u << 30);
    crc = crc32(crc, data, chunk);
    data += chunk;
    len -= chunk;
  }
  return (uint32_t)crc;
}

void put_u64le(std::string& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back((char)((v >> (8 * i)) & 0xff));
}

/// Orders champion records: larger log-complexity first, ties toward smaller
/// n. Near-ties within double precision are settled by the exact integer
/// comparison b.n^a.ones vs a.n^b.ones.
bool champion_before(const ChampionRecord& a, const ChampionRecord& b) {
  double x = (double)a.ones * std::log((double)b.n);
  double y = (double)b.ones * std::log((double)a.n);
  double scale = std::max({std::fabs(x), std::fabs(y), 1.0});
  if (std::fabs(x - y) > 1e-12 * scale) return x > y;
  cpp_int lhs = boost::multiprecision::pow(cpp_int(b.n), a.ones);
  cpp_int rhs = boost::multiprecision::pow(cpp_int(a.n), b.ones);
  if (lhs != rhs) return lhs > rhs;
  return a.n < b.n;
}

}  // namespace

uint64_t selfridge_e(uint32_t k) {
  if (k == 0) return 0;
  if (k == 1) return 1;
  uint32_t j = (k - 2) / 3;
  uint64_t head = 2 + (k - 2) % 3;  // 2, 3 or 4
  uint64_t v = head;
  for (uint32_t i = 0; i < j; ++i) {
    if (v > UINT64_MAX / 3) return UINT64_MAX;
    v *= 3;
  }
  return v;
}

ComplexityTable ComplexityTable::build(uint64_t limit, Basis basis) {
  if (limit < 1) fail(errc::invalid_argument, "limit must be at least 1");
  const bool minus = basis == Basis::plus_times_minus;

  // 8-bit range guard; unreachable for any 64-bit limit but checked anyway.
  double rank_estimate = minus ? 6.0 * std::log((double)limit) / std::log(6.0) + 5.890
                               : 3.0 * std::log2((double)std::max<uint64_t>(limit, 2));
  if (rank_estimate >= 254.0)
    fail(errc::limit_too_large, "complexity values would exceed the 8-bit range");

  const uint64_t window = minus ? minuend_window_size(limit) : 0;
  const uint64_t cap = limit + window;
  if (cap >= UINT32_MAX)
    fail(errc::limit_too_large, "sieve keeps 32-bit class lists; limit is too large");

  std::vector<uint8_t> values(cap + 1, 0);
  std::vector<std::vector<uint32_t>> classes(2);
  classes[1] = {1};
  values[1] = 1;
  uint64_t assigned = 1;

  std::vector<uint32_t> fresh;
  const uint32_t rank_cap = minus ? minus_rank_bound(limit) : kMaxRank;

  for (uint32_t k = 2; assigned < limit; ++k) {
    if (k > rank_cap || k > kMaxRank)
      fail(errc::internal, "rank sieve exceeded its proved bound");
    fresh.clear();

    auto emit = [&](uint64_t n) {
      if (!values[n]) {
        values[n] = (uint8_t)k;
        fresh.push_back((uint32_t)n);
        if (n <= limit) ++assigned;
      }
    };

    for (uint32_t j = 1; 2 * j <= k; ++j) {
      const auto& lo = classes[j];
      const auto& hi = classes[k - j];
      if (lo.empty() || hi.empty()) continue;
      const bool same = j == k - j;

      // sums
      for (uint32_t a : lo) {
        if (a >= cap) break;
        const uint64_t room = cap - a;
        auto it = same ? std::lower_bound(hi.begin(), hi.end(), a) : hi.begin();
        for (; it != hi.end() && *it <= room; ++it) emit((uint64_t)a + *it);
      }

      // products
      for (uint32_t a : lo) {
        if (a < 2) continue;
        const uint64_t room = cap / a;
        if (room < 2) break;
        auto it = same ? std::lower_bound(hi.begin(), hi.end(), a) : hi.begin();
        for (; it != hi.end() && *it <= room; ++it) emit((uint64_t)a * *it);
      }

      if (minus) {
        // differences, minuends from each side; results land in 1..limit only
        auto diff_pass = [&](const std::vector<uint32_t>& minuends, uint32_t minuend_rank,
                             const std::vector<uint32_t>& subs, uint32_t sub_rank) {
          const uint64_t bound =
              std::min(selfridge_e(minuend_rank),
                       limit > UINT64_MAX - selfridge_e(sub_rank) ? UINT64_MAX
                                                                  : limit + selfridge_e(sub_rank));
          for (uint32_t a : minuends) {
            if ((uint64_t)a > bound) break;
            if (a < 2) continue;
            auto it = (uint64_t)a > limit
                          ? std::lower_bound(subs.begin(), subs.end(), (uint64_t)a - limit)
                          : subs.begin();
            for (; it != subs.end() && *it < a; ++it) emit((uint64_t)a - *it);
          }
        };
        diff_pass(hi, k - j, lo, j);
        if (!same) diff_pass(lo, j, hi, k - j);
      }
    }

    std::sort(fresh.begin(), fresh.end());
    classes.emplace_back(fresh);
  }

  ComplexityTable t(basis, limit);
  values.resize(limit + 1);
  values.shrink_to_fit();
  t.values_ = std::move(values);
  t.rebuild_window();
  return t;
}

/// Recomputes the minuend window from the finished values. An entry above the
/// limit only ever enters a shortest expression as a product/sum-rooted
/// minuend, so its value is the best split a = d*(a/d) or a = y+(a-y) over
/// known values. The sum scan is exact: an improving smaller addend y must
/// satisfy 3*log3(y) < best - 3*log3(a/2).
void ComplexityTable::rebuild_window() {
  window_.clear();
  if (basis_ != Basis::plus_times_minus) return;
  const uint64_t w = minuend_window_size(limit_);
  window_.assign(w, 0);

  for (uint64_t a = limit_ + 1; a <= limit_ + w; ++a) {
    uint32_t best = 0;
    auto consider = [&](uint32_t v1, uint32_t v2) {
      if (v1 && v2 && (best == 0 || v1 + v2 < best)) best = v1 + v2;
    };
    for (uint64_t d = 2; d * d <= a; ++d)
      if (a % d == 0) consider(value_at(d), value_at(a / d));
    const uint64_t half = a / 2;
    uint64_t probe = std::min<uint64_t>(half, 64);
    for (uint64_t y = 1; y <= probe; ++y) consider(value_at(y), value_at(a - y));
    uint64_t y_max = half;
    if (best) {
      double head = (double)best - 3.0 * log3((double)a / 2.0);
      y_max = head <= 0 ? 0 : std::min(half, (uint64_t)std::pow(3.0, head / 3.0) + 2);
    }
    for (uint64_t y = probe + 1; y <= y_max; ++y) consider(value_at(y), value_at(a - y));
    window_[a - limit_ - 1] = (uint8_t)best;
  }
}

uint8_t ComplexityTable::complexity(uint64_t n) const {
  if (n < 1 || n > limit_) fail(errc::out_of_range, "n outside the table");
  return values_[n];
}

double ComplexityTable::log_complexity(uint64_t n) const {
  if (n < 2 || n > limit_) fail(errc::out_of_range, "log-complexity needs 1 < n <= limit");
  return (double)values_[n] / log3((double)n);
}

ExprPtr ComplexityTable::shortest_expression(uint64_t n) const {
  if (n < 1 || n > limit_) fail(errc::out_of_range, "n outside the table");
  return reconstruct(n);
}

ExprPtr ComplexityTable::reconstruct(uint64_t n) const {
  if (n == 1) return Expr::one();
  const uint32_t v = value_at(n);
  if (v == 0) fail(errc::witness_not_found, "no value recorded for " + std::to_string(n));

  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0 && value_at(d) + value_at(n / d) == v)
      return Expr::mul(reconstruct(d), reconstruct(n / d));
  }
  for (uint64_t y = 1; 2 * y <= n; ++y) {
    uint32_t vy = value_at(y), vz = value_at(n - y);
    if (vy && vz && vy + vz == v) return Expr::add(reconstruct(y), reconstruct(n - y));
  }
  if (basis_ == Basis::plus_times_minus && n <= limit_) {
    const uint64_t top = limit_ + window_.size();
    for (uint64_t b = 1; n + b <= top; ++b) {
      uint32_t vb = value_at(b), va = value_at(n + b);
      if (vb && va && va + vb == v) return Expr::sub(reconstruct(n + b), reconstruct(b));
    }
  }
  fail(errc::witness_not_found, "table holds no witness for " + std::to_string(n));
}

uint64_t ComplexityTable::e_kth(uint32_t k, uint32_t j) const {
  if (k < 1 || j < 1) fail(errc::invalid_argument, "k and j must be positive");
  const uint64_t top = selfridge_e(k);
  if (top > limit_)
    fail(errc::out_of_range, "largest value of complexity " + std::to_string(k) +
                                 " lies beyond the table");
  uint32_t seen = 0;
  for (uint64_t m = top; m >= 1; --m) {
    if (values_[m] <= k && ++seen == j) return m;
  }
  fail(errc::not_found, "fewer than j values with complexity <= k");
}

uint64_t ComplexityTable::e_min(uint32_t k) const {
  if (k < 1) fail(errc::invalid_argument, "k must be positive");
  for (uint64_t m = 1; m <= limit_; ++m)
    if (values_[m] == k) return m;
  fail(errc::not_found, "no value with complexity " + std::to_string(k) + " in the table");
}

std::vector<ChampionRecord> ComplexityTable::champions(uint64_t bound, uint32_t top) const {
  if (bound < 2 || bound > limit_) fail(errc::out_of_range, "bound outside the table");
  if (top == 0) return {};

  auto worse = [](const ChampionRecord& a, const ChampionRecord& b) {
    return champion_before(a, b);  // priority_queue keeps the worst on top
  };
  std::priority_queue<ChampionRecord, std::vector<ChampionRecord>, decltype(worse)> heap(worse);
  for (uint64_t n = 2; n <= bound; ++n) {
    ChampionRecord rec{n, values_[n], (double)values_[n] / log3((double)n)};
    if (heap.size() < top) {
      heap.push(rec);
    } else if (champion_before(rec, heap.top())) {
      heap.pop();
      heap.push(rec);
    }
  }
  std::vector<ChampionRecord> out;
  out.reserve(heap.size());
  while (!heap.empty()) {
    out.push_back(heap.top());
    heap.pop();
  }
  std::sort(out.begin(), out.end(), champion_before);
  return out;
}

void ComplexityTable::save(const std::string& path) const {
  std::string header;
  header.append(kMagic, 4);
  header.push_back((char)kFormatVersion);
  header.push_back((char)basis_);
  put_u64le(header, limit_);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  out.write(header.data(), (std::streamsize)header.size());
  out.write((const char*)values_.data() + 1, (std::streamsize)limit_);
  uint32_t crc = crc_of(values_.data() + 1, limit_);
  char tail[4];
  for (int i = 0; i < 4; ++i) tail[i] = (char)((crc >> (8 * i)) & 0xff);
  out.write(tail, 4);
  if (!out) fail(errc::io_error, "short write to " + path);
}

ComplexityTable ComplexityTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open " + path);

  char header[14];
  if (!in.read(header, sizeof header)) fail(errc::format_error, "file too short for a header");
  if (std::memcmp(header, kMagic, 4) != 0) fail(errc::format_error, "bad magic");
  if ((uint8_t)header[4] != kFormatVersion) fail(errc::format_error, "unsupported format version");
  uint8_t basis_byte = (uint8_t)header[5];
  if (basis_byte > 1) fail(errc::format_error, "bad basis byte");
  uint64_t limit = 0;
  for (int i = 0; i < 8; ++i) limit |= (uint64_t)(uint8_t)header[6 + i] << (8 * i);
  if (limit < 1) fail(errc::format_error, "bad limit");

  ComplexityTable t((Basis)basis_byte, limit);
  t.values_.resize(limit + 1);
  t.values_[0] = 0;
  if (!in.read((char*)t.values_.data() + 1, (std::streamsize)limit))
    fail(errc::format_error, "truncated value block");

  char tail[4];
  if (!in.read(tail, 4)) fail(errc::format_error, "missing checksum");
  if (in.peek() != EOF) fail(errc::format_error, "trailing bytes after checksum");
  uint32_t stored = 0;
  for (int i = 0; i < 4; ++i) stored |= (uint32_t)(uint8_t)tail[i] << (8 * i);
  if (stored != crc_of(t.values_.data() + 1, limit))
    fail(errc::checksum_mismatch, "value block checksum mismatch");

  t.rebuild_window();
  return t;
}

}  // namespace onecount
