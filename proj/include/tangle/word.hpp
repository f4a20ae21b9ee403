#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tangle {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

/// A generator s_i (Sign::Plus) or its inverse (Sign::Minus); generators are
/// 1-based.
struct Letter {
  int generator = 1;
  Sign sign = Sign::Plus;

  constexpr Letter inverse() const noexcept { return {generator, -sign}; }
  friend constexpr bool operator==(const Letter &, const Letter &) = default;
};

constexpr bool cancels(Letter x, Letter y) noexcept {
  return x.generator == y.generator && x.sign != y.sign;
}

/// Element of the free group F_m, always stored freely reduced.
class Word {
public:
  explicit Word(int rank);

  /// Freely reduces an arbitrary letter sequence.
  static Word reduce(int rank, std::span<const Letter> letters);
  /// The single-letter word s_generator^{sign}.
  static Word generator(int rank, int generator, Sign sign = Sign::Plus);

  int rank() const noexcept { return rank_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const Letter &operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(std::uint64_t exponent) const;

  friend Word operator*(const Word &u, const Word &v);
  friend bool operator==(const Word &, const Word &) = default;

private:
  int rank_;
  std::vector<Letter> letters_;
};

Word commutator(const Word &u, const Word &v);

/// Parses whitespace separated tokens. Letter style: a-z are s_1..s_26 and
/// A-Z their inverses; several letters may share one token. Indexed style:
/// gK / GK. The two styles cannot be mixed within one word.
Word parse_word(std::string_view text, int rank);

/// Canonical text: indexed style when rank > 26, letter style otherwise,
/// one token per letter. The empty word prints as the empty string.
std::string to_string(const Word &w);

/// True iff u and v are nontrivial and do not commute. In a free group this
/// is equivalent to all nontrivial powers of u and v being distinct.
bool distinct_powers(const Word &u, const Word &v);

} // namespace tangle
