#pragma once

#include <vector>

#include "fig8/bigint.hpp"
#include "fig8/perm.hpp"

namespace fig8 {

// Parity of any permutation of cycle type p: (n - #parts) mod 2.
Parity class_parity(const Partition& p);

// n! / prod_j (j^{m_j} m_j!)
BigInt class_size(const Partition& p);

// Irreducible character chi_lambda of S_n at the class mu, by the
// Murnaghan-Nakayama rule on beta-sets. Memoized in a thread-safe cache.
// Throws InputError when |lambda| != |mu|.
BigInt character(const Partition& lambda, const Partition& mu);

// Number of tuples (g_1, ..., g_k), g_i of cycle type classes[i], with
// g_1 ... g_k = e, by the Frobenius character formula. Throws InputError on
// an empty list or mixed degrees; std::logic_error if the sum is not integral.
BigInt frobenius_count(const std::vector<Partition>& classes);

}  // namespace fig8
