#include <gtest/gtest.h>

#include <cmath>

#include "fig8/error.hpp"
#include "fig8/hyperbolic.hpp"
#include "fig8/mat2.hpp"
#include "fig8/random_words.hpp"
#include "fig8/word.hpp"

using namespace fig8;

namespace {

Assignment sanov() { return {{'a', ExactMat2(1, 2, 0, 1)}, {'b', ExactMat2(1, 0, 2, 1)}}; }

}  // namespace

TEST(GroupWord, ParsesAndReduces) {
  EXPECT_EQ(GroupWord::parse("abBA").str(), "");
  EXPECT_EQ(GroupWord::parse("aAbab").str(), "bab");
  EXPECT_EQ(GroupWord::parse("abAB").length(), 4u);
  EXPECT_THROW(GroupWord::parse("abx"), InputError);
  EXPECT_THROW(GroupWord::parse("ac"), InputError);
  EXPECT_NO_THROW(GroupWord::parse("acDB", Alphabet::genus2()));
}

TEST(GroupWord, InversePowerConjugate) {
  const auto w = GroupWord::parse("aab");
  EXPECT_EQ(w.inverse().str(), "BAA");
  EXPECT_EQ(w.power(2).str(), "aabaab");
  EXPECT_EQ(w.power(-1).str(), "BAA");
  EXPECT_EQ(w.power(0).str(), "");
  EXPECT_EQ(w.conjugate_by(GroupWord::parse("a")).str(), "aba");
  EXPECT_EQ(commutator(GroupWord::parse("a"), GroupWord::parse("b")).str(), "abAB");
}

TEST(GroupWord, CyclicProperties) {
  EXPECT_TRUE(GroupWord::parse("abAB").is_cyclically_reduced());
  EXPECT_FALSE(GroupWord::parse("abA").is_cyclically_reduced());
  EXPECT_EQ(GroupWord::parse("abA").cyclic_reduction().str(), "b");
  EXPECT_TRUE(GroupWord::parse("abab").is_proper_power());
  EXPECT_FALSE(GroupWord::parse("aab").is_proper_power());
  EXPECT_EQ(GroupWord::parse("aabAb").abelianization(), (std::vector<long>{1, 2}));
}

TEST(EvalWord, Examples) {
  EXPECT_EQ(eval_word(GroupWord::parse("ab"), sanov()), ExactMat2(5, 2, 2, 1));
  EXPECT_TRUE(eval_word(GroupWord::parse(""), sanov()).is_identity());
  EXPECT_EQ(eval_word(GroupWord::parse("abAB"), sanov()), ExactMat2(21, -8, 8, -3));
}

TEST(EvalWord, Errors) {
  Assignment only_a{{'a', ExactMat2(1, 2, 0, 1)}};
  EXPECT_THROW(eval_word(GroupWord::parse("ab"), only_a), InputError);
  Assignment mixed{{'a', ExactMat2::modular(1, 2, 0, 1, 5)}, {'b', ExactMat2::modular(1, 0, 2, 1, 7)}};
  EXPECT_THROW(eval_word(GroupWord::parse("ab"), mixed), InputError);
  EXPECT_THROW(ExactMat2(1, 1, 1, 1), DomainError);
}

TEST(ExactMat2, ModularAndJson) {
  const auto m = ExactMat2(21, -8, 8, -3).reduced_mod(3);
  EXPECT_EQ(m, ExactMat2::modular(0, 1, 2, 0, 3));
  EXPECT_EQ(m.to_json().dump(), R"([["0","1"],["2","0"]])");
  EXPECT_EQ(ExactMat2(5, 2, 2, 1).inverse(), ExactMat2(1, -2, -2, 5));
}

TEST(EvalWord, DeterminantAndInverseOnRandomWords) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(11, i);
    const GroupWord w = random_word_in_ball(rng, Alphabet::free2(), 200);
    const ExactMat2 m = eval_word(w, sanov());
    EXPECT_EQ(m.det(), 1);
    EXPECT_TRUE(eval_word(w * w.inverse(), sanov()).is_identity());
    EXPECT_TRUE((m * eval_word(w.inverse(), sanov())).is_identity());
  }
}

TEST(TraceThird, Examples) {
  EXPECT_DOUBLE_EQ(trace_third(2, 2, 6), -2);
  EXPECT_DOUBLE_EQ(trace_third(2.5, 2.5, 2.5 * 2.5 - 2), 2);
  EXPECT_DOUBLE_EQ(trace_third(3, 3, -2), 11);
  // the last example by direct multiplication
  const ExactMat2 x(1, 1, 1, 2), c(4, -5, 1, -1);
  EXPECT_EQ(c.trace(), 3);
  EXPECT_EQ((x * c).trace(), -2);
  EXPECT_EQ((x.inverse() * c).trace(), 11);
}

TEST(TraceThird, ExactOnRandomSanovPairs) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(12, i);
    const ExactMat2 a = eval_word(random_word_in_ball(rng, Alphabet::free2(), 30), sanov());
    const ExactMat2 b = eval_word(random_word_in_ball(rng, Alphabet::free2(), 30), sanov());
    EXPECT_EQ(trace_third(a.trace(), b.trace(), (a * b).trace()), (a.inverse() * b).trace());
  }
}

TEST(Fig8Length, Examples) {
  EXPECT_NEAR(fig8_length(0, 0, 0).length, 3.52549, 5e-6);
  EXPECT_NEAR(fig8_length(0, 0, 0).length, 2 * std::acosh(3.0), 1e-12);
  const double l3 = 2 * std::acosh(1.5);
  EXPECT_NEAR(fig8_length(l3, 0, l3).trace, 9, 1e-9);
  EXPECT_NEAR(fig8_length(l3, l3, 0).trace, 11, 1e-9);
  EXPECT_THROW(fig8_length(-1, 0, 0), DomainError);
}

TEST(Fig8Length, SymmetricMonotoneAndMinimal) {
  const double minimum = 2 * std::acosh(3.0);
  for (double x = 0; x < 5; x += 0.37) {
    for (double y = 0; y < 5; y += 0.41) {
      for (double z = 0; z < 5; z += 0.53) {
        const double l = fig8_length(x, y, z).length;
        EXPECT_DOUBLE_EQ(l, fig8_length(y, x, z).length);
        EXPECT_GT(fig8_length(x + 0.1, y, z).length, l);
        EXPECT_GT(fig8_length(x, y + 0.1, z).length, l);
        EXPECT_GT(fig8_length(x, y, z + 0.1).length, l);
        if (x + y + z > 0) EXPECT_GT(l, minimum);
      }
    }
  }
  EXPECT_DOUBLE_EQ(fig8_length(0, 0, 0).length, minimum);
}

TEST(LengthTrace, Convert) {
  EXPECT_NEAR(length_trace_convert(3, Convert::trace_to_length), 1.924847, 1e-6);
  EXPECT_THROW(length_trace_convert(2, Convert::trace_to_length), DomainError);
  EXPECT_NEAR(length_trace_convert(2 * std::acosh(3.0), Convert::length_to_trace), 6, 1e-12);
  for (double t = 2.01; t < 1e6; t *= 1.7) {
    const double back = length_trace_convert(length_trace_convert(t, Convert::trace_to_length), Convert::length_to_trace);
    EXPECT_NEAR(back, t, kLengthTolerance * t);
  }
}
