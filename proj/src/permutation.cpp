#include "tangle/permutation.hpp"

#include "tangle/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace tangle {

Permutation::Permutation(std::size_t degree) : image_(degree) {
  if (degree == 0)
    throw InvalidArgument("permutation degree must be at least 1");
  std::iota(image_.begin(), image_.end(), 0u);
}

Permutation Permutation::from_images(std::span<const Point> images) {
  Permutation p(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Point k = images[i];
    if (k < 1 || k > images.size())
      throw InvalidArgument("image " + std::to_string(k) + " outside [1, " +
                            std::to_string(images.size()) + "]");
    if (seen[k - 1])
      throw InvalidArgument("image " + std::to_string(k) +
                            " repeated; not a bijection");
    seen[k - 1] = true;
    p.image_[i] = k - 1;
  }
  return p;
}

Permutation Permutation::from_cycles(std::string_view text,
                                     std::size_t degree) {
  Permutation result(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '('", pos);
    const std::size_t open = pos;
    const std::size_t close = text.find(')', open);
    if (close == std::string_view::npos)
      throw ParseError("unterminated cycle", open);
    const std::string_view body = text.substr(open + 1, close - open - 1);
    const bool separated =
        body.find_first_of(", \t") != std::string_view::npos;

    std::vector<Point> cycle;
    if (separated) {
      std::size_t i = 0;
      while (i < body.size()) {
        if (body[i] == ',' || std::isspace(static_cast<unsigned char>(body[i]))) {
          ++i;
          continue;
        }
        Point k = 0;
        auto [ptr, ec] =
            std::from_chars(body.data() + i, body.data() + body.size(), k);
        if (ec != std::errc{})
          throw ParseError("expected a point", open + 1 + i);
        i = static_cast<std::size_t>(ptr - body.data());
        cycle.push_back(k);
      }
    } else {
      for (std::size_t i = 0; i < body.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(body[i])))
          throw ParseError("expected a digit", open + 1 + i);
        cycle.push_back(static_cast<Point>(body[i] - '0'));
      }
    }

    std::vector<bool> seen(degree + 1, false);
    for (Point k : cycle) {
      if (k < 1 || k > degree)
        throw ParseError("point " + std::to_string(k) + " outside [1, " +
                             std::to_string(degree) + "]",
                         open);
      if (seen[k])
        throw ParseError("point " + std::to_string(k) + " repeated in cycle",
                         open);
      seen[k] = true;
    }

    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      c.image_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    result = result * c;

    pos = close + 1;
    skip_space();
  }
  return result;
}

void Permutation::check_point(Point k) const {
  if (k < 1 || k > image_.size())
    throw InvalidArgument("point " + std::to_string(k) + " outside [1, " +
                          std::to_string(image_.size()) + "]");
}

Point Permutation::operator()(Point k) const {
  check_point(k);
  return image_[k - 1] + 1;
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(image_.size());
  std::transform(image_.begin(), image_.end(), out.begin(),
                 [](std::uint32_t i) { return i + 1; });
  return out;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image_.resize(image_.size());
  for (std::uint32_t i = 0; i < image_.size(); ++i)
    inv.image_[image_[i]] = i;
  return inv;
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i)
      return false;
  return true;
}

std::vector<Point> Permutation::orbit(Point k) const {
  check_point(k);
  std::vector<Point> out{k};
  for (std::uint32_t i = image_[k - 1]; i != k - 1; i = image_[i])
    out.push_back(i + 1);
  return out;
}

std::size_t Permutation::orbit_size(Point k) const {
  check_point(k);
  std::size_t size = 1;
  for (std::uint32_t i = image_[k - 1]; i != k - 1; i = image_[i])
    ++size;
  return size;
}

std::vector<std::size_t> Permutation::orbit_sizes() const {
  std::vector<std::size_t> sizes(image_.size(), 0);
  for (std::uint32_t start = 0; start < image_.size(); ++start) {
    if (sizes[start] != 0)
      continue;
    std::size_t length = 1;
    for (std::uint32_t i = image_[start]; i != start; i = image_[i])
      ++length;
    sizes[start] = length;
    for (std::uint32_t i = image_[start]; i != start; i = image_[i])
      sizes[i] = length;
  }
  return sizes;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t start = 0; start < image_.size(); ++start) {
    if (seen[start])
      continue;
    std::size_t length = 0;
    for (std::uint32_t i = start; !seen[i]; i = image_[i]) {
      seen[i] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  const bool commas = image_.size() > 9;
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start)
      continue;
    out += '(';
    bool first = true;
    for (std::uint32_t i = start; !seen[i]; i = image_[i]) {
      seen[i] = true;
      if (!first && commas)
        out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("degree mismatch: " + std::to_string(p.degree()) +
                          " vs " + std::to_string(q.degree()));
  Permutation r = q;
  for (auto &i : r.image_)
    i = p.image_[i];
  return r;
}

Permutation uniform_permutation(SplitMix64 &rng, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  for (std::size_t i = degree; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(images[i - 1], images[j]);
  }
  return Permutation::from_images(images);
}

Permutation conjugate(const Permutation &p, const Permutation &r) {
  return r * p * r.inverse();
}

} // namespace tangle
