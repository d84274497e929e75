#include <gtest/gtest.h>

#include <cmath>

#include "fig8/error.hpp"
#include "fig8/lps.hpp"
#include "fig8/magnus.hpp"
#include "fig8/primes.hpp"
#include "fig8/random_words.hpp"
#include "fig8/resfin.hpp"
#include "oracles/oracles.hpp"

using namespace fig8;

namespace {

GroupWord W(const char* s) { return GroupWord::parse(s); }

// all freely reduced words over a, b of length exactly n
std::vector<std::string> reduced_words(std::size_t n) {
  std::vector<std::string> cur{""};
  const std::string letters = "aAbB";
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : cur) {
      for (char c : letters) {
        if (!w.empty() && w.back() == inverse_letter(c)) continue;
        next.push_back(w + c);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TEST(Sanov, Examples) {
  EXPECT_EQ(sanov_eval(W("ab")), ExactMat2(5, 2, 2, 1));
  EXPECT_TRUE(sanov_eval(W("")).is_identity());
  EXPECT_EQ(sanov_eval(W("abAB")), ExactMat2(21, -8, 8, -3));
  EXPECT_EQ(sanov_eval(W("A")), ExactMat2(1, -2, 0, 1));
}

TEST(Sanov, IdentityIffTrivial) {
  for (std::uint64_t i = 0; i < 10000; ++i) {
    auto rng = sample_rng(99, i);
    const GroupWord w = random_word_in_ball(rng, Alphabet::free2(), 40);
    ASSERT_EQ(sanov_eval(w).is_identity(), w.empty()) << w.str();
    ASSERT_TRUE(sanov_eval(w * w.inverse()).is_identity());
    // the unreduced concatenation, reduced letter by letter
    const std::string raw = w.str() + w.inverse().str();
    ASSERT_TRUE(free_reduce(raw).empty());
  }
}

TEST(Sanov, EntryBoundReport) {
  const auto b = sanov_entry_bound(W("ab"));
  EXPECT_EQ(b.max_entry, 5);
  EXPECT_EQ(b.length, 2u);
  EXPECT_FALSE(b.holds);
  EXPECT_TRUE(sanov_entry_bound(W("aaaa")).holds);
}

TEST(ExcludingPrime, Examples) {
  EXPECT_EQ(smallest_excluding_prime(W("a")).prime, 3u);
  const auto c = smallest_excluding_prime(W("abAB"));
  EXPECT_EQ(c.prime, 3u);
  EXPECT_EQ(c.image_mod_p, ExactMat2::modular(0, 1, 2, 0, 3));
  EXPECT_EQ(c.length, 4u);
  EXPECT_THROW(smallest_excluding_prime(W("")), DomainError);
}

TEST(ExcludingPrime, IdentityModThreeGivesFive) {
  EXPECT_EQ(smallest_excluding_prime(W("aaa")).prime, 5u);
  std::size_t found = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& s : reduced_words(n)) {
      const GroupWord w = W(s.c_str());
      const ExactMat2 m = sanov_eval(w);
      if (!m.reduced_mod(3).is_identity()) continue;
      ++found;
      const auto pw = smallest_excluding_prime(w);
      ASSERT_GE(pw.prime, 5u) << s;
      if (!m.reduced_mod(5).is_identity()) ASSERT_EQ(pw.prime, 5u) << s;
    }
  }
  EXPECT_GT(found, 0u);
}

TEST(ExcludingPrime, LinearInLength) {
  double worst = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(5, i);
    const GroupWord w = random_word_in_ball(rng, Alphabet::free2(), 300);
    if (w.empty()) continue;
    const auto pw = smallest_excluding_prime(w);
    ASSERT_GE(pw.prime, 3u);
    ASSERT_FALSE(pw.image_mod_p.is_identity());
    for (auto p : primes_up_to(static_cast<std::uint32_t>(pw.prime - 1))) {
      ASSERT_TRUE(sanov_eval(w).reduced_mod(p).is_identity());
    }
    worst = std::max(worst, static_cast<double>(pw.prime) / static_cast<double>(w.length()));
  }
  EXPECT_LE(worst, 10.0);
}

TEST(Primes, Basics) {
  EXPECT_EQ(primes_up_to(30), (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(first_primes(5).back(), 11u);
  EXPECT_TRUE(is_prime(1'000'000'007));
  EXPECT_FALSE(is_prime(1));
  EXPECT_EQ(least_prime_not_dividing(BigInt(6)), 5u);
  EXPECT_EQ(least_prime_not_dividing(BigInt(-30)), 7u);
  EXPECT_EQ(least_prime_not_dividing(BigInt(1)), 2u);
  EXPECT_EQ(legendre(5, 13), -1);
  EXPECT_EQ(legendre(-1, 13), 1);
  EXPECT_EQ(legendre(26, 13), 0);
}

TEST(Magnus, Examples) {
  EXPECT_EQ(magnus_expand(W("a"), 2).str(), "1 + x");
  EXPECT_EQ(magnus_expand(W("abAB"), 2).str(), "1 + xy - yx");
  EXPECT_EQ(magnus_expand(W("ab"), 1).str(), "1 + x + y");
  EXPECT_THROW(magnus_expand(W("a"), 0), InputError);
  EXPECT_EQ(MagnusSeries::index_of(""), 0u);
  EXPECT_EQ(MagnusSeries::index_of("y"), 2u);
  EXPECT_EQ(MagnusSeries::index_of("xy"), 4u);
}

TEST(Magnus, MatchesSparseOracle) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = sample_rng(17, i);
    const GroupWord w = random_word_in_ball(rng, Alphabet::free2(), 12);
    const int D = 1 + static_cast<int>(i % 5);
    const auto m = magnus_expand(w, D);
    const auto o = oracle::magnus(w.str(), D);
    oracle::Series mine;
    for (int d = 0; d <= D; ++d) {
      if (d == 0) {
        mine[""] = m.coefficient("");
        continue;
      }
      for (const auto& [mono, c] : m.terms_of_degree(d)) mine[mono] = c;
    }
    ASSERT_EQ(mine, o) << w.str() << " D=" << D;
  }
}

TEST(Magnus, Homomorphism) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto r1 = sample_rng(23, 2 * i), r2 = sample_rng(23, 2 * i + 1);
    const GroupWord u = random_word_in_ball(r1, Alphabet::free2(), 15);
    const GroupWord v = random_word_in_ball(r2, Alphabet::free2(), 15);
    const int D = 1 + static_cast<int>(i % 5);
    ASSERT_EQ(magnus_expand(u * v, D), magnus_expand(u, D) * magnus_expand(v, D));
    ASSERT_EQ(magnus_expand(u * u.inverse(), D), MagnusSeries(D));
  }
}

TEST(LcsDepth, ExamplesAndBrackets) {
  EXPECT_EQ(lcs_depth(W("a"), 5), 1);
  EXPECT_EQ(lcs_depth(W("abAB"), 5), 2);
  EXPECT_EQ(iterated_bracket(2).str(), "abAbaBAB");
  EXPECT_EQ(lcs_depth(W("abAbaBAB"), 5), 3);
  for (int j = 1; j + 1 <= 5; ++j) EXPECT_EQ(lcs_depth(iterated_bracket(j), 6), j + 1) << j;
  EXPECT_EQ(lcs_depth(iterated_bracket(5), 4), std::nullopt);
  EXPECT_THROW(lcs_depth(W(""), 3), DomainError);
}

TEST(UnipotentWitness, Examples) {
  const auto h = unipotent_witness(W("abAB"), 2);
  EXPECT_EQ(h.modulus, 2u);
  EXPECT_EQ(h.ambient_order, 8);
  EXPECT_EQ(h.image_a, (IntMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(h.image_b, (IntMatrix{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_EQ(h.image_w, (IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  const auto a = unipotent_witness(W("a"), 1);
  EXPECT_EQ(a.modulus, 2u);
  EXPECT_EQ(a.ambient_order, 2);
  const auto c = unipotent_witness(W("abAbaBAB"), 3);
  EXPECT_EQ(c.modulus, least_prime_not_dividing(c.coefficient));
  EXPECT_EQ(c.image_w.front().back(), ((c.coefficient % static_cast<long>(c.modulus)) + static_cast<long>(c.modulus)) %
                                          static_cast<long>(c.modulus));
  EXPECT_NE(c.image_w.front().back(), 0);
  EXPECT_THROW(unipotent_witness(W("abAB"), 3), InputError);
}

TEST(ExpectedPrime, Values) {
  EXPECT_EQ(expected_min_prime_exact(1), BigRational(1));
  EXPECT_EQ(expected_min_prime_exact(2), BigRational(2));
  EXPECT_NEAR(expected_min_prime(9), 2.920051, 5e-7);
  double prev = 0;
  for (std::size_t t = 1; t <= 30; ++t) {
    const double v = expected_min_prime(t);
    EXPECT_GE(v, prev);
    EXPECT_LT(v, 3.0);
    prev = v;
  }
  EXPECT_THROW(expected_min_prime(0), InputError);
}

TEST(AverageIndex, SingleWords) {
  EXPECT_EQ(abelian_index_prime(W("aaaaaa")), 5u);
  EXPECT_EQ(abelian_index_prime(W("b")), 2u);
  EXPECT_EQ(abelian_index_prime(W("aaBBB")), 3u);
  EXPECT_EQ(abelian_index_prime(W("abAB")), std::nullopt);
}

TEST(AverageIndex, Simulation) {
  const auto r = average_index_simulation(2, 20, 10000, 42);
  EXPECT_LT(r.mean, 3.0);
  EXPECT_GT(r.mean, 2.0);
  EXPECT_EQ(r.samples + r.excluded, 10000u);
  EXPECT_EQ(r.seed, 42u);
  const auto again = average_index_simulation(2, 20, 10000, 42);
  EXPECT_EQ(r.mean, again.mean);
  EXPECT_THROW(average_index_simulation(1, 20, 10, 1), InputError);
  EXPECT_THROW(average_index_simulation(2, 0, 10, 1), InputError);
}

TEST(Lps, Quaternions) {
  const auto q = lps_quaternions(5);
  const std::set<std::array<int, 4>> got(q.begin(), q.end());
  EXPECT_EQ(got, (std::set<std::array<int, 4>>{{1, 2, 0, 0}, {1, -2, 0, 0}, {1, 0, 2, 0},
                                               {1, 0, -2, 0}, {1, 0, 0, 2}, {1, 0, 0, -2}}));
  for (int p : {5, 13, 17, 29, 7, 11}) {
    const auto s = lps_quaternions(p);
    EXPECT_EQ(s.size(), static_cast<std::size_t>(p + 1)) << p;
    for (const auto& v : s) EXPECT_EQ(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3], p);
  }
}

TEST(Lps, GirthAgainstWordSearch) {
  for (auto [p, q] : {std::pair{5, 13}, std::pair{5, 17}}) {
    const auto r = lps_girth_check(p, q);
    EXPECT_EQ(r.generator_count, 6u);
    std::int64_t i = 0;
    while ((i * i + 1) % q) ++i;
    std::vector<std::array<std::int64_t, 4>> gens;
    const auto quats = lps_quaternions(p);
    auto md = [q](std::int64_t x) { return ((x % q) + q) % q; };
    for (const auto& v : quats) {
      gens.push_back({md(v[0] + v[1] * i), md(v[2] + v[3] * i), md(-v[2] + v[3] * i), md(v[0] - v[1] * i)});
    }
    std::vector<int> inv(quats.size());
    for (std::size_t a = 0; a < quats.size(); ++a) {
      for (std::size_t b = 0; b < quats.size(); ++b) {
        if (quats[b] == std::array<int, 4>{quats[a][0], -quats[a][1], -quats[a][2], -quats[a][3]}) {
          inv[a] = static_cast<int>(b);
        }
      }
    }
    EXPECT_EQ(static_cast<int>(r.girth), oracle::girth_by_words(gens, inv, q, 10)) << p << "," << q;
    EXPECT_NEAR(r.bound, 4 * std::log(q) / std::log(p) - std::log(4.0) / std::log(p), 1e-12);
    EXPECT_EQ(r.bound_ceil, static_cast<std::size_t>(std::ceil(r.bound)));
    EXPECT_GE(r.girth, r.bound_ceil);
    EXPECT_TRUE(r.pass);
  }
  const auto a = lps_girth_check(5, 13);
  EXPECT_EQ(a.bound_ceil, 6u);
  EXPECT_EQ(a.even_half_order, 1092u);
  EXPECT_EQ(a.group_order, 2184u);
  const auto b = lps_girth_check(5, 17);
  EXPECT_EQ(b.even_half_order, 2448u);
  EXPECT_EQ(b.group_order, 4896u);
  EXPECT_THROW(lps_girth_check(5, 11), InputError);  // 5 is a square mod 11
  EXPECT_THROW(lps_girth_check(5, 15), InputError);
}
