#include <gtest/gtest.h>

#include <cmath>

#include "fig8/census.hpp"
#include "fig8/exec.hpp"
#include "fig8/genus2.hpp"
#include "fig8/random_words.hpp"
#include "fig8/resfin.hpp"
#include "fig8/selfint.hpp"

using namespace fig8;

namespace {

bool same(const GeodesicRecord& a, const GeodesicRecord& b) {
  return a.trace == b.trace && a.length == b.length && a.family == b.family && a.slope == b.slope &&
         a.branch == b.branch && a.exact_trace == b.exact_trace;
}

class Threads : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { set_thread_count(GetParam()); }
  void TearDown() override { set_thread_count(0); }
};

}  // namespace

TEST_P(Threads, EnumerateSimple) {
  const double x = 3.2, y = 4.1;
  const double z = (x * y + std::sqrt(x * x * y * y - 4 * (x * x + y * y))) / 2;
  for (const TraceTriple& root : {TraceTriple::modular(), TraceTriple::make(x, y, z)}) {
    const auto s = enumerate_simple(root, 2e4, Exec::serial);
    const auto p = enumerate_simple(root, 2e4, Exec::parallel);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t i = 0; i < s.size(); ++i) ASSERT_TRUE(same(s[i], p[i])) << i;
  }
}

TEST_P(Threads, Census) {
  for (auto mode : {CensusMode::paired, CensusMode::full}) {
    const auto s = one_intersection_census(TraceTriple::modular(), 16, mode, Exec::serial);
    const auto p = one_intersection_census(TraceTriple::modular(), 16, mode, Exec::parallel);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t i = 0; i < s.size(); ++i) ASSERT_TRUE(same(s[i], p[i]));
  }
  const auto cs = count_census(TraceTriple::modular(), 18, Exec::serial);
  const auto cp = count_census(TraceTriple::modular(), 18, Exec::parallel);
  EXPECT_EQ(cs.simple, cp.simple);
  EXPECT_EQ(cs.paired, cp.paired);
  EXPECT_EQ(cs.full, cp.full);
}

TEST_P(Threads, McShaneSums) {
  const auto s = mcshane_sum(TraceTriple::modular(), 1e5, McShaneForm::trace, Exec::serial);
  const auto p = mcshane_sum(TraceTriple::modular(), 1e5, McShaneForm::trace, Exec::parallel);
  EXPECT_EQ(s.sum, p.sum);
  EXPECT_EQ(s.terms, p.terms);
  EXPECT_EQ(mc2_sum(TraceTriple::modular(), 3e5, Exec::serial).sum,
            mc2_sum(TraceTriple::modular(), 3e5, Exec::parallel).sum);
}

TEST_P(Threads, SelfIntersection) {
  for (const char* w : {"ab", "aabb", "abAb", "aab"}) {
    const auto s = self_intersection_at_radius(GroupWord::parse(w), 10, Exec::serial);
    const auto p = self_intersection_at_radius(GroupWord::parse(w), 10, Exec::parallel);
    EXPECT_EQ(s.count, p.count) << w;
    EXPECT_EQ(s.crossing_classes, p.crossing_classes) << w;
  }
}

TEST_P(Threads, ExcludingPrimes) {
  std::vector<GroupWord> words;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(31, i);
    GroupWord w = random_word_in_ball(rng, Alphabet::free2(), 200);
    if (!w.empty()) words.push_back(w);
  }
  const auto s = smallest_excluding_primes(words, Exec::serial);
  const auto p = smallest_excluding_primes(words, Exec::parallel);
  ASSERT_EQ(s.size(), p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s[i].prime, p[i].prime);
    EXPECT_EQ(s[i].image_mod_p, p[i].image_mod_p);
  }
}

TEST_P(Threads, AverageIndex) {
  const auto s = average_index_simulation(3, 20, 3000, 11, Exec::serial);
  const auto p = average_index_simulation(3, 20, 3000, 11, Exec::parallel);
  EXPECT_EQ(s.mean, p.mean);
  EXPECT_EQ(s.samples, p.samples);
  EXPECT_EQ(s.excluded, p.excluded);
}

TEST_P(Threads, CertifyAll) {
  std::vector<GroupWord> words;
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = sample_rng(41, i);
    words.push_back(random_word_in_ball(rng, Alphabet::genus2(), 30));
  }
  const auto s = certify_all(words, Exec::serial);
  const auto p = certify_all(words, Exec::parallel);
  ASSERT_EQ(s.size(), p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s[i].verdict, p[i].verdict);
    EXPECT_EQ(s[i].witness, p[i].witness);
    EXPECT_EQ(s[i].prime.has_value(), p[i].prime.has_value());
  }
}

INSTANTIATE_TEST_SUITE_P(Parallel, Threads, ::testing::Values(1, 2, 4));
