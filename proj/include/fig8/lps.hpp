#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace fig8 {

// Solutions of a^2 + b^2 + c^2 + d^2 = p normalized as in the LPS
// construction: for p = 1 mod 4, a odd and positive; for p = 3 mod 4, a even
// and the first nonzero coordinate positive. There are p + 1 of them.
std::vector<std::array<int, 4>> lps_quaternions(int p);

struct LpsReport {
  int p = 0, q = 0;
  std::size_t generator_count = 0;
  // Order of the group the generators span in PGL(2, q).
  std::size_t group_order = 0;
  // Vertices at even distance from the identity; this is PSL(2, q) when
  // p is a non-residue mod q.
  std::size_t even_half_order = 0;
  std::size_t girth = 0;
  double bound = 0.0;  // 4 log_p q - log_p 4
  std::size_t bound_ceil = 0;
  bool pass = false;  // girth >= bound_ceil
};

// Cayley graph of the LPS generators in PGL(2, q); girth by BFS from the
// identity. Throws InputError unless p >= 5 and q > 2p are primes and p is a
// quadratic non-residue mod q.
LpsReport lps_girth_check(int p, int q);

}  // namespace fig8
