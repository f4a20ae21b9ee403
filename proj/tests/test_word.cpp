#include "helpers.hpp"

#include "tangle/error.hpp"
#include "tangle/word.hpp"

#include <gtest/gtest.h>

using namespace tangle;
using testing_support::raw;

namespace {

std::vector<Letter> L(std::initializer_list<int> signed_generators) {
  std::vector<Letter> out;
  for (int x : signed_generators)
    out.push_back({std::abs(x), x > 0 ? Sign::Plus : Sign::Minus});
  return out;
}

} // namespace

TEST(ParseWord, Transliterates) {
  const Word w = parse_word("a B a b", 2);
  EXPECT_EQ(raw(w), (oracle::RawWord{1, -2, 1, 2}));
}

TEST(ParseWord, FreeCancellation) {
  EXPECT_TRUE(parse_word("a A", 1).empty());
}

TEST(ParseWord, Fig2FirstWord) {
  const Word w1 = parse_word("A B a b", 3);
  EXPECT_EQ(raw(w1), (oracle::RawWord{-1, -2, 1, 2}));
  EXPECT_EQ(w1.rank(), 3);
}

TEST(ParseWord, IndexedStyle) {
  const Word w = parse_word("g1 G30 g2", 30);
  EXPECT_EQ(raw(w), (oracle::RawWord{1, -30, 2}));
  EXPECT_EQ(to_string(w), "g1 G30 g2");
}

TEST(ParseWord, MultiLetterTokens) {
  EXPECT_EQ(parse_word("aB ab", 2), parse_word("a B a b", 2));
}

TEST(ParseWord, EmptyText) { EXPECT_TRUE(parse_word("   ", 2).empty()); }

TEST(ParseWord, Errors) {
  EXPECT_THROW(parse_word("a c", 2), ParseError);
  EXPECT_THROW(parse_word("g3", 2), ParseError);
  EXPECT_THROW(parse_word("a g1", 2), ParseError);
  EXPECT_THROW(parse_word("a 1", 2), ParseError);
  EXPECT_THROW(parse_word("g0", 2), ParseError);
  EXPECT_THROW(parse_word("a", 0), InvalidArgument);
  try {
    parse_word("a b ?", 2);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(ParseWord, PrintParseRoundTrip) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int rank = 1 + static_cast<int>(uniform_below(rng, 30));
    const Word w = testing_support::random_word(rng, rank, 12);
    const std::string text = to_string(w);
    EXPECT_EQ(parse_word(text, rank), w) << text;
    EXPECT_EQ(to_string(parse_word(text, rank)), text);
  }
}

TEST(Reduce, Examples) {
  EXPECT_TRUE(Word::reduce(1, L({1, -1})).empty());
  EXPECT_EQ(raw(Word::reduce(2, L({1, 2, -2, 1}))), (oracle::RawWord{1, 1}));
  const Word w = parse_word("a B a b", 2);
  EXPECT_EQ(Word::reduce(2, w.letters()), w);
  EXPECT_THROW(Word::reduce(1, L({2})), InvalidArgument);
}

TEST(Reduce, ConfluentAgainstNaiveOrder) {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto letters = testing_support::random_letters(rng, 2, 20);
    oracle::RawWord naive;
    for (const Letter &x : letters)
      naive.push_back(x.sign == Sign::Plus ? x.generator : -x.generator);
    const Word w = Word::reduce(2, letters);
    EXPECT_EQ(raw(w), oracle::reduce_naive(naive));
    for (std::size_t i = 0; i + 1 < w.length(); ++i)
      EXPECT_FALSE(cancels(w[i], w[i + 1]));
  }
}

TEST(WordOps, Examples) {
  EXPECT_EQ(to_string(parse_word("ab", 2).inverse()), "B A");
  EXPECT_EQ(to_string(parse_word("a", 2).pow(3)), "a a a");
  EXPECT_EQ(parse_word("a B", 2) * parse_word("b a", 2), parse_word("a a", 2));
  EXPECT_TRUE(parse_word("a b", 2).pow(0).empty());
  EXPECT_THROW(parse_word("a", 1) * parse_word("a", 2), InvalidArgument);
}

TEST(WordOps, Properties) {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = testing_support::random_word(rng, 3, 10);
    EXPECT_EQ(w.inverse().inverse(), w);
    EXPECT_TRUE((w * w.inverse()).empty());
    const auto t = uniform_below(rng, 5);
    EXPECT_LE(w.pow(t).length(), t * w.length());
  }
}

TEST(WordOps, Fig2Lengths) {
  EXPECT_EQ(testing_support::fig2_w1().length(), 4u);
  EXPECT_EQ(testing_support::fig2_w2().length(), 5u);
}

TEST(DistinctPowers, Examples) {
  EXPECT_TRUE(distinct_powers(parse_word("a", 2), parse_word("b", 2)));
  EXPECT_FALSE(distinct_powers(parse_word("ab", 2), parse_word("abab", 2)));
  EXPECT_TRUE(
      distinct_powers(testing_support::fig2_w1(), testing_support::fig2_w2()));
  EXPECT_FALSE(distinct_powers(Word(2), parse_word("a", 2)));
  EXPECT_THROW(distinct_powers(parse_word("a", 1), parse_word("a", 2)),
               InvalidArgument);
}

TEST(DistinctPowers, SelfAndRankOne) {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = testing_support::nontrivial_word(rng, 3, 8);
    EXPECT_FALSE(distinct_powers(w, w));
    EXPECT_FALSE(distinct_powers(w, w.pow(2)));
    EXPECT_FALSE(distinct_powers(w, w.inverse()));
    const Word u = testing_support::nontrivial_word(rng, 1, 8);
    const Word v = testing_support::nontrivial_word(rng, 1, 8);
    EXPECT_FALSE(distinct_powers(u, v));
  }
}
