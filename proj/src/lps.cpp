#include "fig8/lps.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <unordered_map>

#include "fig8/error.hpp"
#include "fig8/primes.hpp"

namespace fig8 {

std::vector<std::array<int, 4>> lps_quaternions(int p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw InputError("lps_quaternions: p must be an odd prime");
  }
  std::vector<std::array<int, 4>> out;
  const int r = static_cast<int>(std::sqrt(static_cast<double>(p))) + 1;
  for (int a = -r; a <= r; ++a) {
    for (int b = -r; b <= r; ++b) {
      for (int c = -r; c <= r; ++c) {
        for (int d = -r; d <= r; ++d) {
          if (a * a + b * b + c * c + d * d != p) continue;
          if (p % 4 == 1) {
            if (a <= 0 || a % 2 == 0 || b % 2 || c % 2 || d % 2) continue;
          } else {
            if (a % 2 != 0) continue;
            const int lead = a != 0 ? a : (b != 0 ? b : (c != 0 ? c : d));
            if (lead < 0) continue;
          }
          out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

namespace {

using Mat = std::array<std::int64_t, 4>;

std::int64_t mod(std::int64_t x, std::int64_t q) { return ((x % q) + q) % q; }

std::int64_t inv_mod(std::int64_t x, std::int64_t q) {
  std::int64_t result = 1, base = mod(x, q), e = q - 2;
  while (e > 0) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return result;
}

// Scale so the first nonzero entry is 1: a canonical representative of the
// class modulo scalars.
Mat normalize(Mat m, std::int64_t q) {
  std::size_t i = 0;
  while (m[i] == 0) ++i;
  const std::int64_t s = inv_mod(m[i], q);
  for (auto& e : m) e = e * s % q;
  return m;
}

Mat mul(const Mat& x, const Mat& y, std::int64_t q) {
  return {(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
          (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
}

std::uint64_t key(const Mat& m, std::int64_t q) {
  return static_cast<std::uint64_t>(((m[0] * q + m[1]) * q + m[2]) * q + m[3]);
}

}  // namespace

LpsReport lps_girth_check(int p, int q) {
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p))) throw InputError("lps_girth_check: p must be a prime >= 5");
  if (!is_prime(static_cast<std::uint64_t>(q))) throw InputError("lps_girth_check: q must be prime");
  if (q <= 2 * p) throw InputError("lps_girth_check: q must exceed 2p");
  if (legendre(p, q) != -1) throw InputError("lps_girth_check: p must be a quadratic non-residue mod q");

  // x^2 + y^2 = -1 mod q
  std::int64_t x = -1, y = -1;
  for (std::int64_t yy = 0; yy < q && x < 0; ++yy) {
    for (std::int64_t xx = 0; xx < q; ++xx) {
      if (mod(xx * xx + yy * yy + 1, q) == 0) {
        x = xx;
        y = yy;
        break;
      }
    }
  }

  std::vector<Mat> gens;
  for (const auto& [a, b, c, d] : lps_quaternions(p)) {
    const Mat m{mod(a + b * x + d * y, q), mod(-b * y + c + d * x, q), mod(-b * y - c + d * x, q),
                mod(a - b * x - d * y, q)};
    gens.push_back(normalize(m, q));
  }

  LpsReport r;
  r.p = p;
  r.q = q;
  r.generator_count = gens.size();
  r.bound = 4.0 * std::log(q) / std::log(p) - std::log(4.0) / std::log(p);
  r.bound_ceil = static_cast<std::size_t>(std::ceil(r.bound - 1e-12));

  struct Node {
    std::size_t dist;
    std::uint64_t parent;
  };
  std::unordered_map<std::uint64_t, Node> seen;
  const Mat id = normalize({1, 0, 0, 1}, q);
  seen.emplace(key(id, q), Node{0, std::numeric_limits<std::uint64_t>::max()});
  std::deque<Mat> queue{id};
  std::size_t girth = std::numeric_limits<std::size_t>::max();
  while (!queue.empty()) {
    const Mat u = queue.front();
    queue.pop_front();
    const std::uint64_t ku = key(u, q);
    const Node nu = seen.at(ku);
    for (const Mat& g : gens) {
      const Mat v = normalize(mul(u, g, q), q);
      const std::uint64_t kv = key(v, q);
      auto it = seen.find(kv);
      if (it == seen.end()) {
        seen.emplace(kv, Node{nu.dist + 1, ku});
        queue.push_back(v);
      } else if (kv != nu.parent && it->second.parent != ku) {
        girth = std::min(girth, nu.dist + it->second.dist + 1);
      }
    }
  }
  r.group_order = seen.size();
  for (const auto& [k, n] : seen) r.even_half_order += n.dist % 2 == 0 ? 1 : 0;
  r.girth = girth;
  r.pass = r.girth >= r.bound_ceil;
  return r;
}

}  // namespace fig8
