#include "tangle/word.hpp"

#include "tangle/error.hpp"

#include <cctype>
#include <charconv>

namespace tangle {

namespace {

void check_rank(int rank) {
  if (rank < 1)
    throw InvalidArgument("rank must be at least 1, got " +
                          std::to_string(rank));
}

void check_same_rank(const Word &u, const Word &v) {
  if (u.rank() != v.rank())
    throw InvalidArgument("rank mismatch: " + std::to_string(u.rank()) +
                          " vs " + std::to_string(v.rank()));
}

// Appends x to an already reduced stack, cancelling against the top.
void push_reduced(std::vector<Letter> &stack, Letter x) {
  if (!stack.empty() && cancels(stack.back(), x))
    stack.pop_back();
  else
    stack.push_back(x);
}

} // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word Word::reduce(int rank, std::span<const Letter> letters) {
  Word w(rank);
  w.letters_.reserve(letters.size());
  for (const Letter &x : letters) {
    if (x.generator < 1 || x.generator > rank)
      throw InvalidArgument("generator " + std::to_string(x.generator) +
                            " exceeds rank " + std::to_string(rank));
    push_reduced(w.letters_, x);
  }
  return w;
}

Word Word::generator(int rank, int generator, Sign sign) {
  const Letter x{generator, sign};
  return reduce(rank, std::span<const Letter>(&x, 1));
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(std::uint64_t exponent) const {
  Word result(rank_);
  if (letters_.empty())
    return result;
  for (std::uint64_t i = 0; i < exponent; ++i)
    for (const Letter &x : letters_)
      push_reduced(result.letters_, x);
  return result;
}

Word operator*(const Word &u, const Word &v) {
  check_same_rank(u, v);
  Word w = u;
  for (const Letter &x : v.letters_)
    push_reduced(w.letters_, x);
  return w;
}

Word commutator(const Word &u, const Word &v) {
  return u * v * u.inverse() * v.inverse();
}

Word parse_word(std::string_view text, int rank) {
  check_rank(rank);
  enum class Style { Unknown, Letters, Indexed };
  Style style = Style::Unknown;
  std::vector<Letter> raw;

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    const std::string_view token = text.substr(pos, end - pos);

    const bool indexed =
        token.size() >= 2 && (token[0] == 'g' || token[0] == 'G') &&
        std::isdigit(static_cast<unsigned char>(token[1]));
    const Style token_style = indexed ? Style::Indexed : Style::Letters;
    if (style != Style::Unknown && style != token_style)
      throw ParseError("cannot mix letter and gK token styles", pos);
    style = token_style;

    if (indexed) {
      int index = 0;
      const char *first = token.data() + 1;
      const char *last = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(first, last, index);
      if (ec != std::errc{} || ptr != last || index < 1)
        throw ParseError("malformed generator token '" + std::string(token) +
                             "'",
                         pos);
      if (index > rank)
        throw ParseError("generator g" + std::to_string(index) +
                             " exceeds rank " + std::to_string(rank),
                         pos);
      raw.push_back({index, token[0] == 'g' ? Sign::Plus : Sign::Minus});
    } else {
      for (std::size_t i = 0; i < token.size(); ++i) {
        const char c = token[i];
        int index = 0;
        Sign sign = Sign::Plus;
        if (c >= 'a' && c <= 'z') {
          index = c - 'a' + 1;
        } else if (c >= 'A' && c <= 'Z') {
          index = c - 'A' + 1;
          sign = Sign::Minus;
        } else {
          throw ParseError(std::string("unexpected character '") + c + "'",
                           pos + i);
        }
        if (index > rank)
          throw ParseError(std::string("generator '") + c + "' exceeds rank " +
                               std::to_string(rank),
                           pos + i);
        raw.push_back({index, sign});
      }
    }
    pos = end;
  }
  return Word::reduce(rank, raw);
}

std::string to_string(const Word &w) {
  std::string out;
  for (const Letter &x : w.letters()) {
    if (!out.empty())
      out += ' ';
    if (w.rank() > 26) {
      out += x.sign == Sign::Plus ? 'g' : 'G';
      out += std::to_string(x.generator);
    } else {
      const char base = x.sign == Sign::Plus ? 'a' : 'A';
      out += static_cast<char>(base + x.generator - 1);
    }
  }
  return out;
}

bool distinct_powers(const Word &u, const Word &v) {
  check_same_rank(u, v);
  if (u.empty() || v.empty())
    return false;
  return !commutator(u, v).empty();
}

} // namespace tangle
