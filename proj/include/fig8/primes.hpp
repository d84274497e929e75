#pragma once

#include <cstdint>
#include <vector>

#include "fig8/bigint.hpp"

namespace fig8 {

// Primes <= limit by the sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// First `count` primes.
std::vector<std::uint32_t> first_primes(std::size_t count);

bool is_prime(std::uint64_t n);

// Least prime not dividing n (n != 0; sign ignored).
std::uint64_t least_prime_not_dividing(const BigInt& n);

// Legendre symbol (a/p) for an odd prime p: 1, -1 or 0.
int legendre(std::int64_t a, std::int64_t p);

}  // namespace fig8
