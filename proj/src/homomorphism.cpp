#include "tangle/homomorphism.hpp"

#include "tangle/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace tangle {

Homomorphism::Homomorphism(std::vector<Permutation> images)
    : images_(std::move(images)) {
  if (images_.empty())
    throw InvalidArgument("homomorphism rank must be at least 1");
  for (const auto &p : images_)
    if (p.degree() != images_.front().degree())
      throw InvalidArgument("generator images have different degrees");
  inverses_.reserve(images_.size());
  for (const auto &p : images_)
    inverses_.push_back(p.inverse());
}

Homomorphism Homomorphism::trivial(int rank, std::size_t degree) {
  if (rank < 1)
    throw InvalidArgument("homomorphism rank must be at least 1");
  return Homomorphism(std::vector<Permutation>(static_cast<std::size_t>(rank),
                                               Permutation(degree)));
}

const Permutation &Homomorphism::image(int generator) const {
  if (generator < 1 || generator > rank())
    throw InvalidArgument("generator " + std::to_string(generator) +
                          " outside [1, " + std::to_string(rank()) + "]");
  return images_[static_cast<std::size_t>(generator - 1)];
}

const Permutation &Homomorphism::inverse_image(int generator) const {
  image(generator);
  return inverses_[static_cast<std::size_t>(generator - 1)];
}

void Homomorphism::check_word(const Word &w) const {
  if (w.rank() != rank())
    throw InvalidArgument("word rank " + std::to_string(w.rank()) +
                          " does not match homomorphism rank " +
                          std::to_string(rank()));
}

void Homomorphism::refresh_inverse(std::size_t index) {
  const auto &src = images_[index].image_;
  auto &dst = inverses_[index].image_;
  for (std::uint32_t i = 0; i < src.size(); ++i)
    dst[src[i]] = i;
}

Point Homomorphism::apply(const Word &w, Point k) const {
  check_word(w);
  if (k < 1 || k > degree())
    throw InvalidArgument("point " + std::to_string(k) + " outside [1, " +
                          std::to_string(degree()) + "]");
  std::uint32_t x = k - 1;
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const auto g = static_cast<std::size_t>(it->generator - 1);
    x = it->sign == Sign::Plus ? images_[g].image_[x] : inverses_[g].image_[x];
  }
  return x + 1;
}

Permutation Homomorphism::evaluate(const Word &w) const {
  check_word(w);
  Permutation result(degree());
  const auto letters = w.letters();
  for (auto &x : result.image_)
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      const auto g = static_cast<std::size_t>(it->generator - 1);
      x = it->sign == Sign::Plus ? images_[g].image_[x]
                                 : inverses_[g].image_[x];
    }
  return result;
}

std::optional<TangleReport> is_tangled(const Homomorphism &phi, const Word &w1,
                                       const Word &w2, std::uint64_t R) {
  if (w1.rank() != w2.rank())
    throw InvalidArgument("words have different ranks");
  if (w1.empty() || w2.empty())
    throw InvalidArgument("tangling is undefined for the trivial word");
  if (R < 2)
    return std::nullopt;
  const auto sizes1 = phi.evaluate(w1).orbit_sizes();
  const auto sizes2 = phi.evaluate(w2).orbit_sizes();
  for (std::size_t i = 0; i < sizes1.size(); ++i)
    if (sizes1[i] + sizes2[i] <= R)
      return TangleReport{static_cast<Point>(i + 1), sizes1[i], sizes2[i]};
  return std::nullopt;
}

std::uint64_t factorial(unsigned n) {
  if (n > 20)
    throw InvalidArgument(std::to_string(n) + "! does not fit in 64 bits");
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

std::pair<Word, Word> tangle_to_fixed_point(const Word &w1, const Word &w2,
                                            unsigned R) {
  if (R < 1 || R > 20)
    throw InvalidArgument("R must lie in [1, 20], got " + std::to_string(R));
  const std::uint64_t e = factorial(R);
  return {w1.pow(e), w2.pow(e)};
}

bool is_transitive(const Homomorphism &phi) {
  const std::size_t n = phi.degree();
  std::vector<bool> seen(n, false);
  std::vector<Point> stack{1};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Point k = stack.back();
    stack.pop_back();
    for (int g = 1; g <= phi.rank(); ++g) {
      for (Point next : {phi.image(g)(k), phi.inverse_image(g)(k)}) {
        if (!seen[next - 1]) {
          seen[next - 1] = true;
          ++reached;
          stack.push_back(next);
        }
      }
    }
  }
  return reached == n;
}

std::optional<std::uint64_t> hom_space_size(int rank, std::size_t degree) {
  if (degree > 20)
    return std::nullopt;
  const std::uint64_t f = factorial(static_cast<unsigned>(degree));
  std::uint64_t total = 1;
  for (int i = 0; i < rank; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / f)
      return std::nullopt;
    total *= f;
  }
  return total;
}

HomEnumerator::HomEnumerator(int rank, std::size_t degree, std::uint64_t budget)
    : current_(Homomorphism::trivial(rank, degree)), size_(0) {
  const auto total = hom_space_size(rank, degree);
  if (!total || *total > budget)
    throw BudgetExceeded("enumerating Hom_{" + std::to_string(rank) + "," +
                         std::to_string(degree) + "} exceeds the budget of " +
                         std::to_string(budget));
  size_ = *total;
}

bool HomEnumerator::next() {
  if (done_)
    return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  for (std::size_t g = current_.images_.size(); g-- > 0;) {
    auto &table = current_.images_[g].image_;
    const bool advanced = std::next_permutation(table.begin(), table.end());
    current_.refresh_inverse(g);
    if (advanced)
      return true;
    // next_permutation wrapped this generator back to the identity; carry.
  }
  done_ = true;
  return false;
}

Homomorphism sample_hom(SplitMix64 &rng, int rank, std::size_t degree) {
  if (rank < 1)
    throw InvalidArgument("homomorphism rank must be at least 1");
  std::vector<Permutation> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int g = 0; g < rank; ++g)
    images.push_back(uniform_permutation(rng, degree));
  return Homomorphism(std::move(images));
}

Homomorphism sample_transitive_hom(SplitMix64 &rng, int rank,
                                   std::size_t degree,
                                   std::uint64_t max_attempts) {
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    Homomorphism phi = sample_hom(rng, rank, degree);
    if (is_transitive(phi))
      return phi;
  }
  throw SamplingError("no transitive homomorphism after " +
                      std::to_string(max_attempts) + " attempts");
}

Homomorphism conjugate(const Homomorphism &phi, const Permutation &rho) {
  std::vector<Permutation> images;
  images.reserve(static_cast<std::size_t>(phi.rank()));
  for (const auto &p : phi.images())
    images.push_back(conjugate(p, rho));
  return Homomorphism(std::move(images));
}

Homomorphism canonical_pointed_form(const Homomorphism &phi) {
  const std::size_t n = phi.degree();
  // relabel[k-1] is the new name of point k, 0 while unvisited.
  std::vector<Point> relabel(n, 0);
  std::deque<Point> queue{1};
  relabel[0] = 1;
  Point next_label = 2;
  while (!queue.empty()) {
    const Point k = queue.front();
    queue.pop_front();
    for (int g = 1; g <= phi.rank(); ++g) {
      for (Point x : {phi.image(g)(k), phi.inverse_image(g)(k)}) {
        if (relabel[x - 1] == 0) {
          relabel[x - 1] = next_label++;
          queue.push_back(x);
        }
      }
    }
  }
  if (next_label != n + 1)
    throw InvalidArgument("canonical_pointed_form requires a transitive "
                          "homomorphism");
  return conjugate(phi, Permutation::from_images(relabel));
}

} // namespace tangle
