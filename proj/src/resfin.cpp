#include "fig8/resfin.hpp"

#include "fig8/error.hpp"
#include "fig8/primes.hpp"
#include "fig8/random_words.hpp"

namespace fig8 {

ExactMat2 sanov_eval(const GroupWord& w) {
  // Column operations: right multiplication by [[1,2],[0,1]] adds twice the
  // first column to the second, by [[1,0],[2,1]] the reverse.
  BigInt m[2][2] = {{1, 0}, {0, 1}};
  for (char c : w.str()) {
    const int sign = is_inverse_letter(c) ? -2 : 2;
    const char g = generator_of(c);
    if (g != 'a' && g != 'b') throw InputError("sanov_eval: word must be over {a, b}");
    const int src = g == 'a' ? 0 : 1;
    const int dst = 1 - src;
    for (auto& row : m) row[dst] += sign * row[src];
  }
  return ExactMat2(m[0][0], m[0][1], m[1][0], m[1][1]);
}

SanovBound sanov_entry_bound(const GroupWord& w) {
  SanovBound b;
  b.max_entry = sanov_eval(w).max_abs_entry();
  b.length = w.length();
  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 2, static_cast<unsigned long>(w.length()));
  b.holds = b.max_entry <= bound;
  return b;
}

PrimeWitness smallest_excluding_prime(const GroupWord& w) {
  const ExactMat2 m = sanov_eval(w);
  BigInt g = 0;
  for (const BigInt& e : {BigInt(m.a11() - 1), m.a12(), m.a21(), BigInt(m.a22() - 1)}) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  }
  if (g == 0) throw DomainError("smallest_excluding_prime: word is trivial");
  PrimeWitness pw;
  pw.prime = least_prime_not_dividing(g);
  pw.image_mod_p = m.reduced_mod(BigInt(static_cast<unsigned long>(pw.prime)));
  pw.length = w.length();
  return pw;
}

std::vector<PrimeWitness> smallest_excluding_primes(const std::vector<GroupWord>& words, Exec exec) {
  std::vector<PrimeWitness> out(words.size());
  const long n = static_cast<long>(words.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = smallest_excluding_prime(words[static_cast<std::size_t>(i)]);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = smallest_excluding_prime(words[static_cast<std::size_t>(i)]);
  return out;
}

BigRational expected_min_prime_exact(std::size_t terms) {
  if (terms < 1) throw InputError("expected_min_prime needs at least one term");
  BigRational sum = 0;
  BigRational below = 1;  // prod_{q<p} 1/q
  for (std::uint32_t p : first_primes(terms)) {
    const BigRational bp(static_cast<unsigned long>(p));
    sum += bp * (1 - 1 / bp) * below;
    below /= bp;
  }
  sum.canonicalize();
  return sum;
}

double expected_min_prime(std::size_t terms) { return expected_min_prime_exact(terms).get_d(); }

std::optional<std::uint64_t> abelian_index_prime(const GroupWord& w) {
  for (long x : w.abelianization()) {
    if (x != 0) return least_prime_not_dividing(BigInt(x));
  }
  return std::nullopt;
}

AverageIndex average_index_simulation(int rank, std::size_t radius, std::size_t samples,
                                      std::uint64_t seed, Exec exec) {
  if (rank < 2 || rank > 26) throw InputError("average_index_simulation: rank must be in 2..26");
  if (radius < 1) throw InputError("average_index_simulation: radius must be >= 1");
  std::string gens;
  for (int i = 0; i < rank; ++i) gens += static_cast<char>('a' + i);
  const Alphabet alphabet(gens);

  std::vector<std::uint64_t> primes(samples, 0);  // 0 marks an excluded word
  auto one = [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const auto p = abelian_index_prime(random_word_in_ball(rng, alphabet, radius));
    primes[i] = p.value_or(0);
  };
  const long n = static_cast<long>(samples);
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
  }

  AverageIndex out;
  out.seed = seed;
  double sum = 0.0;
  for (std::uint64_t p : primes) {
    if (p == 0) {
      ++out.excluded;
    } else {
      sum += static_cast<double>(p);
      ++out.samples;
    }
  }
  out.mean = out.samples ? sum / static_cast<double>(out.samples) : 0.0;
  return out;
}

}  // namespace fig8
