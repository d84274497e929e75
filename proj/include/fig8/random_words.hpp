#pragma once

#include <cstdint>
#include <random>

#include "fig8/word.hpp"

namespace fig8 {

std::uint64_t splitmix64(std::uint64_t x);

// Independent stream for sample `index` of a run with the given seed, so
// results do not depend on how samples are split across threads.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

// Uniform freely reduced word of exactly `length` letters.
GroupWord random_reduced_word(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t length);

// Uniform over the freely reduced words of length <= radius.
GroupWord random_word_in_ball(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t radius);

}  // namespace fig8
