#pragma once

#include "tangle/permutation.hpp"
#include "tangle/random.hpp"
#include "tangle/word.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tangle {

/// Default cap on the number of homomorphisms an exhaustive enumeration may
/// visit.
inline constexpr std::uint64_t default_enumeration_budget = 100'000'000;

/// An element of Hom(F_m, Sym_n), given by the images of s_1, ..., s_m.
///
/// Words act with their rightmost letter applied first, so
/// `evaluate(u * v) == evaluate(u) * evaluate(v)`.
class Homomorphism {
public:
  explicit Homomorphism(std::vector<Permutation> images);

  static Homomorphism trivial(int rank, std::size_t degree);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  std::size_t degree() const noexcept { return images_.front().degree(); }

  /// Image of generator s_generator (1-based).
  const Permutation &image(int generator) const;
  std::span<const Permutation> images() const noexcept { return images_; }
  /// Image of s_generator^{-1}.
  const Permutation &inverse_image(int generator) const;

  /// phi(w)(k) without materialising phi(w).
  Point apply(const Word &w, Point k) const;
  Permutation evaluate(const Word &w) const;

  friend bool operator==(const Homomorphism &a, const Homomorphism &b) {
    return a.images_ == b.images_;
  }
  friend auto operator<=>(const Homomorphism &a, const Homomorphism &b) {
    return a.images_ <=> b.images_;
  }

private:
  void check_word(const Word &w) const;
  void refresh_inverse(std::size_t index);

  std::vector<Permutation> images_;
  std::vector<Permutation> inverses_;

  friend class HomEnumerator;
};

/// Witness that two words are R-tangled: the smallest point k with
/// |Orb(phi(w1),k)| + |Orb(phi(w2),k)| <= R.
struct TangleReport {
  Point witness = 0;
  std::size_t orbit_size_1 = 0;
  std::size_t orbit_size_2 = 0;

  friend bool operator==(const TangleReport &, const TangleReport &) = default;
};

std::optional<TangleReport> is_tangled(const Homomorphism &phi, const Word &w1,
                                       const Word &w2, std::uint64_t R);

/// n! for n <= 20.
std::uint64_t factorial(unsigned n);

/// (w1^{R!}, w2^{R!}). Tangling at k makes k a common fixed point of the
/// images of both powers. Requires 1 <= R <= 20.
std::pair<Word, Word> tangle_to_fixed_point(const Word &w1, const Word &w2,
                                            unsigned R);

bool is_transitive(const Homomorphism &phi);

/// (n!)^m, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> hom_space_size(int rank, std::size_t degree);

/// Visits every element of Hom_{m,n} exactly once, in lexicographic order of
/// the image tables with s_1 most significant.
///
/// \code
///   HomEnumerator it(2, 3);
///   while (it.next()) use(it.current());
/// \endcode
class HomEnumerator {
public:
  HomEnumerator(int rank, std::size_t degree,
                std::uint64_t budget = default_enumeration_budget);

  /// Advances to the next homomorphism; false once exhausted.
  bool next();
  const Homomorphism &current() const noexcept { return current_; }
  std::uint64_t size() const noexcept { return size_; }

private:
  Homomorphism current_;
  std::uint64_t size_;
  bool started_ = false;
  bool done_ = false;
};

Homomorphism sample_hom(SplitMix64 &rng, int rank, std::size_t degree);

/// Rejection sampling from the transitive homomorphisms; throws
/// SamplingError after `max_attempts` rejections.
Homomorphism sample_transitive_hom(SplitMix64 &rng, int rank,
                                   std::size_t degree,
                                   std::uint64_t max_attempts = 10'000);

/// rho phi rho^{-1}, generator by generator.
Homomorphism conjugate(const Homomorphism &phi, const Permutation &rho);

/// Representative of the pointed cover (stabiliser of 1) defined by a
/// transitive phi: points are relabelled in first-visit order of a
/// breadth-first search from 1, trying generators in order and, for each
/// generator, the image before the inverse image.
Homomorphism canonical_pointed_form(const Homomorphism &phi);

} // namespace tangle
