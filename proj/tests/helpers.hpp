#pragma once

// Conversions between library values and oracle tables, plus hand-rolled
// generators for the property tests.

#include "oracles.hpp"

#include "tangle/homomorphism.hpp"
#include "tangle/labelled_graph.hpp"
#include "tangle/random.hpp"
#include "tangle/word.hpp"

#include <vector>

namespace testing_support {

inline oracle::RawWord raw(const tangle::Word &w) {
  oracle::RawWord out;
  for (const auto &x : w.letters())
    out.push_back(x.sign == tangle::Sign::Plus ? x.generator : -x.generator);
  return out;
}

inline oracle::Perm raw(const tangle::Permutation &p) {
  oracle::Perm out;
  for (tangle::Point k : p.images())
    out.push_back(static_cast<int>(k) - 1);
  return out;
}

inline oracle::Hom raw(const tangle::Homomorphism &phi) {
  oracle::Hom out;
  for (const auto &p : phi.images())
    out.push_back(raw(p));
  return out;
}

inline tangle::Permutation perm(const oracle::Perm &p) {
  std::vector<tangle::Point> images;
  for (int k : p)
    images.push_back(static_cast<tangle::Point>(k + 1));
  return tangle::Permutation::from_images(images);
}

inline tangle::Homomorphism hom(const oracle::Hom &h) {
  std::vector<tangle::Permutation> images;
  for (const auto &p : h)
    images.push_back(perm(p));
  return tangle::Homomorphism(std::move(images));
}

// Raw (possibly unreduced) letter sequence of the given length.
inline std::vector<tangle::Letter> random_letters(tangle::SplitMix64 &rng,
                                                  int rank,
                                                  std::size_t length) {
  std::vector<tangle::Letter> out;
  for (std::size_t i = 0; i < length; ++i)
    out.push_back({1 + static_cast<int>(tangle::uniform_below(rng, rank)),
                   tangle::uniform_below(rng, 2) ? tangle::Sign::Plus
                                                 : tangle::Sign::Minus});
  return out;
}

inline tangle::Word random_word(tangle::SplitMix64 &rng, int rank,
                                std::size_t max_length) {
  const auto length = tangle::uniform_below(rng, max_length + 1);
  return tangle::Word::reduce(rank, random_letters(rng, rank, length));
}

inline tangle::Word nontrivial_word(tangle::SplitMix64 &rng, int rank,
                                    std::size_t max_length) {
  for (;;) {
    tangle::Word w = random_word(rng, rank, max_length);
    if (!w.empty())
      return w;
  }
}

inline tangle::Homomorphism fig2_hom() {
  return tangle::Homomorphism(
      {tangle::Permutation::from_cycles("(15)(687)", 9),
       tangle::Permutation::from_cycles("(172569)", 9),
       tangle::Permutation::from_cycles("(1934)(58)", 9)});
}

inline tangle::Word fig2_w1() { return tangle::parse_word("A B a b", 3); }
inline tangle::Word fig2_w2() { return tangle::parse_word("A C a B c", 3); }

// The folded graph G1 of the worked example on the vertex labels 1,5,6,7,8,9 (numbered
// 0..5 in that order).
inline tangle::LabelledGraph fig3_g1() {
  // 1 5 6 7 8 9 -> 0 1 2 3 4 5
  return tangle::LabelledGraph(3, 6,
                               {{0, 1, 1},
                                {3, 2, 1},
                                {2, 4, 1},
                                {0, 3, 2},
                                {1, 2, 2},
                                {2, 5, 2},
                                {0, 5, 3},
                                {1, 4, 3}});
}

} // namespace testing_support
