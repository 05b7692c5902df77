#include "core/factor.hpp"

#include <algorithm>
#include <numeric>

#include "core/errors.hpp"

namespace onecount {

namespace {

using u128 = unsigned __int128;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) { return (u128)a * b % m; }

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr uint64_t kTrialBound = 1000000;

uint64_t rho(uint64_t n, uint64_t seed) {
  // Brent's cycle variant; n is odd, composite, with no factor <= 1e6.
  for (uint64_t c = 1;; ++c) {
    uint64_t x = splitmix64(seed + c) % n;
    uint64_t y = x, d = 1, q = 1, ys = x;
    const uint64_t step = 128;
    for (uint64_t r = 1; d == 1; r <<= 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (uint64_t i = 0; i < r && d == 1; i += step) {
        ys = y;
        uint64_t lim = std::min(step, r - i);
        for (uint64_t j = 0; j < lim; ++j) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
    }
    if (d == n) {
      // backtrack one squaring at a time
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = rho(n, n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // deterministic witness set for 64-bit inputs
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<uint64_t> factorize(uint64_t n) {
  if (n == 0) fail(errc::invalid_argument, "0 has no factorization");
  std::vector<uint64_t> out;
  for (uint64_t d : {2ULL, 3ULL, 5ULL}) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  // 2,3-coprime wheel; a primality check on the remaining cofactor cuts the
  // walk short without changing which factors trial division produces
  static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  uint64_t d = 7;
  int w = 0;
  bool cofactor_prime = n > 1 && is_prime(n);
  while (!cofactor_prime && d <= kTrialBound && d * d <= n) {
    if (n % d == 0) {
      do {
        out.push_back(d);
        n /= d;
      } while (n % d == 0);
      cofactor_prime = n > 1 && is_prime(n);
    }
    d += wheel[w];
    w = (w + 1) & 7;
  }
  if (n > 1) {
    if (cofactor_prime || d * d > n) {
      out.push_back(n);
    } else {
      factor_rec(n, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace onecount
