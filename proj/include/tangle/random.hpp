#pragma once

#include <cstdint>
#include <limits>

namespace tangle {

/// SplitMix64 stream. Satisfies UniformRandomBitGenerator; the output sequence
/// is fully determined by the seed on every platform.
class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Independent stream for Monte-Carlo sample `index` of a run seeded with
  /// `seed`. Depends only on (seed, index), never on scheduling.
  static constexpr SplitMix64 substream(std::uint64_t seed,
                                        std::uint64_t index) noexcept {
    SplitMix64 mixer(seed ^ (index * 0xd1b54a32d192ed03ULL));
    mixer();
    return SplitMix64(mixer() ^ index);
  }

private:
  std::uint64_t state_;
};

/// Uniform integer in [0, bound) by Lemire's multiply-and-reject method.
/// Used instead of std::uniform_int_distribution, whose output differs
/// between standard library implementations.
template <class Rng>
std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
  unsigned __int128 product =
      static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

} // namespace tangle
