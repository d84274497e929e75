#include "fig8/random_words.hpp"

#include <cmath>
#include <vector>

namespace fig8 {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

namespace {

std::string letters_of(const Alphabet& alphabet) {
  std::string s;
  for (char g : alphabet.generators()) {
    s += g;
    s += inverse_letter(g);
  }
  return s;
}

}  // namespace

GroupWord random_reduced_word(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t length) {
  const std::string letters = letters_of(alphabet);
  const int n = static_cast<int>(letters.size());
  std::string out;
  out.reserve(length);
  if (length > 0) {
    out += letters[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng))];
  }
  std::uniform_int_distribution<int> next(0, n - 2);
  while (out.size() < length) {
    // Draw among the letters other than the inverse of the last one.
    const std::size_t forbidden = letters.find(inverse_letter(out.back()));
    auto k = static_cast<std::size_t>(next(rng));
    if (k >= forbidden) ++k;
    out += letters[k];
  }
  return GroupWord::from_letters(out, alphabet);
}

GroupWord random_word_in_ball(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t radius) {
  if (radius == 0) return GroupWord(alphabet);
  // Number of reduced words of length l is 2r (2r-1)^(l-1); weights are taken
  // relative to the top length to stay in range.
  const double r2 = 2.0 * static_cast<double>(alphabet.rank());
  const double log_growth = std::log(r2 - 1.0);
  std::vector<double> cumulative(radius + 1);
  double total = 0.0;
  for (std::size_t l = 0; l <= radius; ++l) {
    double w;
    if (l == 0) {
      w = std::exp(-std::log(r2) - static_cast<double>(radius - 1) * log_growth);
    } else {
      w = std::exp(-static_cast<double>(radius - l) * log_growth);
    }
    total += w;
    cumulative[l] = total;
  }
  const double u = std::uniform_real_distribution<double>(0.0, total)(rng);
  std::size_t length = radius;
  for (std::size_t l = 0; l <= radius; ++l) {
    if (u < cumulative[l]) {
      length = l;
      break;
    }
  }
  return random_reduced_word(rng, alphabet, length);
}

}  // namespace fig8
