// Serial reference vs OpenMP variant of each parallel kernel.
// Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "fig8/census.hpp"
#include "fig8/genus2.hpp"
#include "fig8/random_words.hpp"
#include "fig8/resfin.hpp"
#include "fig8/selfint.hpp"

using namespace fig8;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_EnumerateSimple(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_simple(TraceTriple::modular(), 1e9, mode(s)).size());
}

void BM_CountCensus(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(count_census(TraceTriple::modular(), 30, mode(s)).full);
}

void BM_SelfIntersection(benchmark::State& s) {
  const GroupWord w = GroupWord::parse("aabAB");
  for (auto _ : s) benchmark::DoNotOptimize(self_intersection_at_radius(w, 14, mode(s)).count);
}

void BM_ExcludingPrimes(benchmark::State& s) {
  std::vector<GroupWord> words;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(1, i);
    GroupWord w = random_word_in_ball(rng, Alphabet::free2(), 300);
    if (!w.empty()) words.push_back(std::move(w));
  }
  for (auto _ : s) benchmark::DoNotOptimize(smallest_excluding_primes(words, mode(s)).size());
}

void BM_AverageIndex(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(average_index_simulation(2, 20, 10000, 42, mode(s)).mean);
}

void BM_CertifyAll(benchmark::State& s) {
  std::vector<GroupWord> words;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    auto rng = sample_rng(2, i);
    words.push_back(random_word_in_ball(rng, Alphabet::genus2(), 40));
  }
  for (auto _ : s) benchmark::DoNotOptimize(certify_all(words, mode(s)).size());
}

}  // namespace

BENCHMARK(BM_EnumerateSimple)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelfIntersection)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExcludingPrimes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AverageIndex)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyAll)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
