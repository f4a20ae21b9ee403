#pragma once

#include "tangle/random.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tangle {

/// A point of [n] = {1, ..., n}. Every public interface is 1-based.
using Point = std::uint32_t;

/// A bijection of [n].
///
/// Composition follows the left action: `(p * q)(k) == p(q(k))`, i.e. q is
/// applied first.
class Permutation {
public:
  /// Identity of the given degree (degree >= 1).
  explicit Permutation(std::size_t degree);

  /// From the image table `images[k-1] = p(k)`; validates bijectivity.
  static Permutation from_images(std::span<const Point> images);

  /// Parses cycle notation such as "(15)(687)". Degree is supplied by the
  /// caller; fixed points may be omitted and "()" denotes the identity.
  /// Points are single digits unless a cycle contains ',' or spaces, in which
  /// case those separate the points. A product of overlapping cycles is read
  /// as a composition, rightmost cycle first.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return image_.size(); }

  Point operator()(Point k) const;

  std::vector<Point> images() const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// k, p(k), p^2(k), ... up to (not including) the return to k.
  std::vector<Point> orbit(Point k) const;
  std::size_t orbit_size(Point k) const;
  /// orbit_size for every point at once; entry k-1 belongs to point k.
  std::vector<std::size_t> orbit_sizes() const;

  /// Cycle lengths including fixed points, in non-increasing order.
  std::vector<std::size_t> cycle_type() const;

  /// Cycle notation with fixed points omitted; "()" for the identity. Points
  /// are separated by commas when the degree exceeds 9.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation &p, const Permutation &q);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  Permutation() = default;
  void check_point(Point k) const;

  // 0-based storage: image_[i] is p(i+1) - 1.
  std::vector<std::uint32_t> image_;

  friend class Homomorphism;
  friend class HomEnumerator;
};

/// Uniformly random permutation by a Fisher-Yates shuffle.
Permutation uniform_permutation(SplitMix64 &rng, std::size_t degree);

/// r p r^{-1}.
Permutation conjugate(const Permutation &p, const Permutation &r);

} // namespace tangle
