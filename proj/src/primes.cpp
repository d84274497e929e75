#include "fig8/primes.hpp"

#include <cmath>

#include "fig8/error.hpp"

namespace fig8 {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::uint32_t limit = 32;
  for (;;) {
    auto ps = primes_up_to(limit);
    if (ps.size() >= count) {
      ps.resize(count);
      return ps;
    }
    limit *= 2;
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t least_prime_not_dividing(const BigInt& n) {
  if (n == 0) throw DomainError("every prime divides 0");
  // The product of the primes below p exceeds |n| long before p leaves this
  // range, so the scan always terminates inside it.
  std::uint32_t limit = 64;
  for (;;) {
    for (std::uint32_t p : primes_up_to(limit)) {
      if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) return p;
    }
    limit *= 4;
  }
}

int legendre(std::int64_t a, std::int64_t p) {
  std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  // Euler's criterion.
  std::int64_t result = 1, base = r, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = static_cast<std::int64_t>((static_cast<__int128>(result) * base) % p);
    base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % p);
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

}  // namespace fig8
