#pragma once

#include <cstdint>
#include <vector>

namespace onecount {

bool is_prime(uint64_t n);

/// Complete prime factorization with multiplicity, ascending. factorize(1) = {}.
/// Trial division up to 1e6, then Pollard-Brent rho seeded from n itself so
/// runs are reproducible.
std::vector<uint64_t> factorize(uint64_t n);

}  // namespace onecount
