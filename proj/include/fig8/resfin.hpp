#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fig8/exec.hpp"
#include "fig8/mat2.hpp"
#include "fig8/word.hpp"

namespace fig8 {

// Image of w under a -> [[1,2],[0,1]], b -> [[1,0],[2,1]].
ExactMat2 sanov_eval(const GroupWord& w);

// max |entry| of sanov_eval(w) against 2^|w|.
struct SanovBound {
  BigInt max_entry;
  std::size_t length = 0;
  bool holds = false;  // max_entry <= 2^length
};
SanovBound sanov_entry_bound(const GroupWord& w);

struct PrimeWitness {
  std::uint64_t prime = 0;
  ExactMat2 image_mod_p;
  std::size_t length = 0;
};

// Least prime p with sanov_eval(w) != I mod p. Always p >= 3, since both
// generators are the identity mod 2. Throws DomainError on the trivial word.
PrimeWitness smallest_excluding_prime(const GroupWord& w);

std::vector<PrimeWitness> smallest_excluding_primes(const std::vector<GroupWord>& words,
                                                    Exec exec = Exec::serial);

// Partial sum over the first `terms` primes of p (1 - 1/p) prod_{q<p} 1/q,
// the expected least prime not dividing a random integer. Exact rational
// summation, converted at the end. Throws InputError when terms < 1.
BigRational expected_min_prime_exact(std::size_t terms);
double expected_min_prime(std::size_t terms);

// Least prime not dividing the first nonzero abelianization coordinate of w;
// nullopt when w lies in the commutator subgroup.
std::optional<std::uint64_t> abelian_index_prime(const GroupWord& w);

struct AverageIndex {
  double mean = 0.0;
  std::size_t samples = 0;
  // Words with zero abelianization, left out of the mean.
  std::size_t excluded = 0;
  std::uint64_t seed = 0;
};

// Mean of abelian_index_prime over `samples` words drawn uniformly from the
// radius-N ball of the free group of the given rank. Deterministic in seed;
// independent of thread count. Throws InputError unless rank >= 2, N >= 1.
AverageIndex average_index_simulation(int rank, std::size_t radius, std::size_t samples,
                                      std::uint64_t seed, Exec exec = Exec::serial);

}  // namespace fig8
